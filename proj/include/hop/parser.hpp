#pragma once

#include "hop/error.hpp"
#include "hop/types.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace hop {

/// Untyped syntax tree as written. Application spines are flattened:
/// `id q a` and `(id q) a` both become Apply{id, q, a}.
struct RawTerm {
  enum class Kind { Name, Apply, Neg, Eq };

  Kind kind = Kind::Name;
  std::string name;            // Name only
  std::vector<RawTerm> items;  // Apply: head then args; Neg: {atom}; Eq: {l, r}
  SourcePos pos;

  bool is_variable_name() const;
  std::string to_string() const;
};

struct RawDeclaration {
  std::string name;
  Type type;
  SourcePos pos;
};

struct RawClause {
  RawTerm head;
  std::vector<RawTerm> body;
  SourcePos pos;
};

struct SourceProgram {
  std::vector<RawDeclaration> declarations;
  std::vector<RawClause> clauses;
};

/// program := (decl | clause)*
/// decl    := "type" name ":" type "."
/// clause  := literal ("<-" literal ("," literal)*)? "."
/// literal := "~" app | app ("=" app)?
/// app     := primary+
/// primary := name | "(" literal ")"
/// `%` starts a comment running to the end of the line.
///
/// Throws SyntaxError (always positioned) or DuplicateDeclaration.
SourceProgram parse_program(std::string_view text);

/// type := atype ("->" type)?,  atype := "i" | "o" | "(" type ")"
Type parse_type(std::string_view text);

/// A single literal, e.g. a root atom given on the command line.
RawTerm parse_literal(std::string_view text);

} // namespace hop
