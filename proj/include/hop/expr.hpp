#pragma once

#include "hop/error.hpp"
#include "hop/types.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hop {

enum class ExprKind {
  IndConst,
  PredConst,
  IndVar,
  PredVar,
  FunApp,
  App,
  Neg,
  Eq,
};

/// A variable together with its (inferred) type.
struct Variable {
  std::string name;
  Type type;

  friend bool operator==(const Variable &, const Variable &) = default;
};

/// Immutable, typed expression. Every constructor checks typing, so a live
/// Expr is always well-typed; the type is stored on the node.
///
/// Neg and Eq only ever appear at the literal level: they are rejected as
/// operands, operators, or arguments.
class Expr {
public:
  /// Individual constant (type i) or predicate constant (predicate type).
  static Expr constant(std::string name, Type type);
  /// Individual variable (type i) or predicate variable (predicate type).
  static Expr variable(std::string name, Type type);
  /// (f e1 ... en), every argument of type i, n >= 1.
  static Expr fun_app(std::string symbol, std::vector<Expr> args);
  /// (op operand): op : rho -> pi, operand : rho.
  static Expr app(Expr op, Expr operand);
  /// Left-nested application of op to every argument in turn.
  static Expr apply(Expr op, const std::vector<Expr> &operands);
  static Expr neg(Expr atom);
  static Expr eq(Expr lhs, Expr rhs);

  ExprKind kind() const { return node_->kind; }
  const Type &type() const { return node_->type; }
  /// Constant/variable name, or the function symbol of a FunApp.
  const std::string &name() const { return node_->name; }
  /// FunApp: arguments. App: {operator, operand}. Neg: {atom}. Eq: {lhs, rhs}.
  const std::vector<Expr> &children() const { return node_->children; }

  const Expr &op() const { return node_->children[0]; }
  const Expr &operand() const { return node_->children[1]; }

  bool is_constant() const {
    return kind() == ExprKind::IndConst || kind() == ExprKind::PredConst;
  }
  bool is_variable() const {
    return kind() == ExprKind::IndVar || kind() == ExprKind::PredVar;
  }
  /// Terms exclude Neg and Eq.
  bool is_term() const {
    return kind() != ExprKind::Neg && kind() != ExprKind::Eq;
  }
  bool is_ground() const { return node_->ground; }

  /// Leftmost symbol of an application spine (the expression itself for
  /// leaves).
  const Expr &spine_head() const;
  /// Operands of an application spine, left to right.
  std::vector<Expr> spine_args() const;

  /// Number of constant, function-symbol and predicate-constant occurrences.
  std::size_t symbol_count() const { return node_->symbols; }

  /// Canonical text: minimal parentheses, left-associative application,
  /// `~` for negation and `=` for equality.
  const std::string &key() const { return node_->key; }
  std::string to_string() const { return node_->key; }

  friend bool operator==(const Expr &a, const Expr &b);
  friend bool operator!=(const Expr &a, const Expr &b) { return !(a == b); }

private:
  struct Node {
    ExprKind kind;
    std::string name;
    std::vector<Expr> children;
    Type type;
    bool ground;
    std::size_t symbols;
    std::string key;
  };

  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Expr make(ExprKind kind, std::string name, std::vector<Expr> children,
                   Type type);

  std::shared_ptr<const Node> node_;
};

/// Canonical printing; equivalent to e.key().
std::string canonical_print(const Expr &e);

/// Variables of e in first-occurrence order, without duplicates.
std::vector<Variable> free_vars(const Expr &e);

/// Finite map from variables to terms of the same type.
class Substitution {
public:
  Substitution() = default;

  /// Throws TypeMismatch when the term's type differs from the variable's,
  /// and IllTyped when the variable is already bound or value is not a term.
  void bind(const Variable &var, Expr value);

  const Expr *find(const std::string &name) const;
  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  bool is_ground() const;

  const std::vector<std::pair<Variable, Expr>> &bindings() const {
    return bindings_;
  }

  /// "{X/a, Q/p}" in binding order.
  std::string to_string() const;

  friend bool operator==(const Substitution &, const Substitution &) = default;

private:
  std::vector<std::pair<Variable, Expr>> bindings_;
};

/// E(theta): structural replacement of every variable in dom(theta).
/// Throws TypeMismatch when theta maps a variable name to a term whose type
/// differs from the occurrence's type.
Expr apply_substitution(const Expr &e, const Substitution &theta);

enum class SymbolKind { IndividualConstant, PredicateConstant, FunctionSymbol };

struct Symbol {
  std::string name;
  SymbolKind kind;
  Type type;
  std::size_t arity = 0; // function symbols only
  bool declared = true;  // false for individual constants defaulted to i
  SourcePos pos;
};

/// Symbol table: constants and function symbols with their types.
class Signature {
public:
  /// Classifies the symbol from its type. Throws InvalidDeclaration for
  /// types that are neither i, a predicate type, nor i^n -> i; throws
  /// DuplicateDeclaration if the name is already present.
  const Symbol &declare(const std::string &name, const Type &type,
                        SourcePos pos = {}, bool declared = true);

  const Symbol *find(const std::string &name) const;
  bool contains(const std::string &name) const { return find(name) != nullptr; }

  /// All symbols in name order.
  const std::map<std::string, Symbol> &symbols() const { return symbols_; }
  std::vector<const Symbol *> of_kind(SymbolKind kind) const;

  friend bool operator==(const Signature &a, const Signature &b);

private:
  std::map<std::string, Symbol> symbols_;
};

/// Type of e, re-derived against the signature and a variable environment.
/// Throws UnboundSymbol for symbols missing from both, TypeMismatch when a
/// leaf disagrees with them, ArityMismatch for a wrongly applied function
/// symbol.
Type type_of(const Expr &e, const Signature &sig,
             const std::map<std::string, Type> &var_env);

/// p V1 ... Vn <- L1, ..., Lm with distinct formals V1..Vn.
struct Clause {
  std::string head;
  Type head_type = Type::omicron();
  std::vector<Variable> formals;
  std::vector<Expr> body;
  SourcePos pos;

  /// The head as an atom: p V1 ... Vn.
  Expr head_atom() const;
  /// Formals followed by body-only variables, in first-occurrence order.
  std::vector<Variable> variables() const;
  std::string to_string() const;

  friend bool operator==(const Clause &a, const Clause &b);
};

/// A checked program: signature, clauses, and a per-predicate clause index.
struct Program {
  Signature signature;
  std::vector<Clause> clauses;
  std::map<std::string, std::vector<std::size_t>> by_predicate;

  void reindex();
  const std::vector<std::size_t> &clauses_for(const std::string &pred) const;

  friend bool operator==(const Program &a, const Program &b) {
    return a.signature == b.signature && a.clauses == b.clauses;
  }
};

/// Declarations (name order, defaulted constants omitted) followed by the
/// clauses in program order; re-parses to an equal program.
std::string print_program(const Program &program);

} // namespace hop
