#include "hop/error.hpp"

namespace hop {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::SyntaxError: return "SyntaxError";
  case ErrorKind::DuplicateDeclaration: return "DuplicateDeclaration";
  case ErrorKind::InvalidDeclaration: return "InvalidDeclaration";
  case ErrorKind::UnboundSymbol: return "UnboundSymbol";
  case ErrorKind::IllTypedApplication: return "IllTypedApplication";
  case ErrorKind::NegOfNonBoolean: return "NegOfNonBoolean";
  case ErrorKind::EqOfNonIndividual: return "EqOfNonIndividual";
  case ErrorKind::TypeMismatch: return "TypeMismatch";
  case ErrorKind::IllTyped: return "IllTyped";
  case ErrorKind::NonVariableHeadArgument: return "NonVariableHeadArgument";
  case ErrorKind::RepeatedHeadVariable: return "RepeatedHeadVariable";
  case ErrorKind::ArityMismatch: return "ArityMismatch";
  case ErrorKind::AmbiguousVariableType: return "AmbiguousVariableType";
  case ErrorKind::ConflictingVariableType: return "ConflictingVariableType";
  case ErrorKind::EmptyUniverse: return "EmptyUniverse";
  case ErrorKind::UnknownAtom: return "UnknownAtom";
  case ErrorKind::TooLarge: return "TooLarge";
  case ErrorKind::Violation: return "Violation";
  case ErrorKind::NotIncreasing: return "NotIncreasing";
  case ErrorKind::DepthExceeded: return "DepthExceeded";
  case ErrorKind::Io: return "Io";
  case ErrorKind::Usage: return "Usage";
  }
  return "Unknown";
}

namespace {

std::string format(ErrorKind kind, const std::string &message, SourcePos pos) {
  std::string out;
  if (pos.known())
    out += std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": ";
  out += to_string(kind);
  out += ": ";
  out += message;
  return out;
}

} // namespace

Error::Error(ErrorKind kind, std::string message, SourcePos pos)
    : std::runtime_error(format(kind, message, pos)), kind_(kind), pos_(pos),
      detail_(std::move(message)) {}

Error::Error(ErrorKind kind, std::string message, std::vector<Diagnostic> notes,
             SourcePos pos)
    : std::runtime_error(format(kind, message, pos)), kind_(kind), pos_(pos),
      detail_(std::move(message)), notes_(std::move(notes)) {}

} // namespace hop
