#pragma once

#include "hop/expr.hpp"
#include "hop/parser.hpp"

#include <map>
#include <string>
#include <string_view>

namespace hop {

/// Elaborates parsed source into a checked program.
///
/// Head arguments of predicate type must be pairwise distinct variables.
/// Head arguments of type i that are not fresh variables (`q a.`, `p X X`)
/// are rewritten into a fresh formal plus a leading equality literal, so
/// `q a.` becomes `q _H1 <- _H1 = a.`
Program check_program(const SourceProgram &source);

/// Convenience: parse_program followed by check_program.
Program load_program(std::string_view text);

/// Types of every variable in the clause, formals included. Formals take
/// their types from the head predicate's declaration.
std::map<std::string, Type> infer_var_types(const RawClause &clause,
                                            const Signature &sig);

/// Elaborates a literal against a signature and variable environment.
Expr elaborate(const RawTerm &term, const Signature &sig,
               const std::map<std::string, Type> &env);

/// Parses and checks a ground atom (type o, headed by a predicate constant),
/// e.g. a root given on the command line.
Expr parse_ground_atom(std::string_view text, const Signature &sig);

} // namespace hop
