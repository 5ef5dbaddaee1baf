#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hop {

struct SourcePos {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const SourcePos &, const SourcePos &) = default;
};

enum class ErrorKind {
  SyntaxError,
  DuplicateDeclaration,
  InvalidDeclaration,
  UnboundSymbol,
  IllTypedApplication,
  NegOfNonBoolean,
  EqOfNonIndividual,
  TypeMismatch,
  IllTyped,
  NonVariableHeadArgument,
  RepeatedHeadVariable,
  ArityMismatch,
  AmbiguousVariableType,
  ConflictingVariableType,
  EmptyUniverse,
  UnknownAtom,
  TooLarge,
  Violation,
  NotIncreasing,
  DepthExceeded,
  Io,
  Usage,
};

std::string_view to_string(ErrorKind kind);

/// A single located diagnostic.
struct Diagnostic {
  ErrorKind kind;
  std::string message;
  SourcePos pos;
};

/// Every failure raised by the library. Carries one primary diagnostic plus
/// any secondary ones (e.g. all conflicting occurrences of a variable).
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, std::string message, SourcePos pos = {});
  Error(ErrorKind kind, std::string message, std::vector<Diagnostic> notes,
        SourcePos pos = {});

  ErrorKind kind() const { return kind_; }
  const SourcePos &pos() const { return pos_; }
  const std::string &detail() const { return detail_; }
  const std::vector<Diagnostic> &notes() const { return notes_; }

private:
  ErrorKind kind_;
  SourcePos pos_;
  std::string detail_;
  std::vector<Diagnostic> notes_;
};

} // namespace hop
