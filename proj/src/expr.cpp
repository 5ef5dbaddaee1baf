#include "hop/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hop {

namespace {

bool starts_upper(const std::string &name) {
  return !name.empty() && (std::isupper(static_cast<unsigned char>(name[0])) ||
                           name[0] == '_');
}

bool compound(const Expr &e) {
  return e.kind() == ExprKind::App || e.kind() == ExprKind::FunApp;
}

std::string operand_text(const Expr &e) {
  return compound(e) ? "(" + e.key() + ")" : e.key();
}

std::string render(ExprKind kind, const std::string &name,
                   const std::vector<Expr> &children) {
  switch (kind) {
  case ExprKind::IndConst:
  case ExprKind::PredConst:
  case ExprKind::IndVar:
  case ExprKind::PredVar:
    return name;
  case ExprKind::FunApp: {
    std::string out = name;
    for (const Expr &arg : children)
      out += " " + operand_text(arg);
    return out;
  }
  case ExprKind::App:
    // The operator is never parenthesized: application is left-associative.
    return children[0].key() + " " + operand_text(children[1]);
  case ExprKind::Neg:
    return "~" + operand_text(children[0]);
  case ExprKind::Eq:
    return children[0].key() + " = " + children[1].key();
  }
  return {};
}

void collect_vars(const Expr &e, std::vector<Variable> &out,
                  std::set<std::string> &seen) {
  if (e.is_ground())
    return;
  if (e.is_variable()) {
    if (seen.insert(e.name()).second)
      out.push_back({e.name(), e.type()});
    return;
  }
  for (const Expr &c : e.children())
    collect_vars(c, out, seen);
}

} // namespace

Expr Expr::make(ExprKind kind, std::string name, std::vector<Expr> children,
                Type type) {
  bool ground = kind != ExprKind::IndVar && kind != ExprKind::PredVar;
  std::size_t symbols =
      (kind == ExprKind::IndConst || kind == ExprKind::PredConst ||
       kind == ExprKind::FunApp)
          ? 1
          : 0;
  for (const Expr &c : children) {
    ground = ground && c.is_ground();
    symbols += c.symbol_count();
  }
  std::string key = render(kind, name, children);
  return Expr(std::make_shared<const Node>(Node{kind, std::move(name),
                                                std::move(children),
                                                std::move(type), ground,
                                                symbols, std::move(key)}));
}

Expr Expr::constant(std::string name, Type type) {
  if (type.is_iota())
    return make(ExprKind::IndConst, std::move(name), {}, std::move(type));
  if (type.is_predicate())
    return make(ExprKind::PredConst, std::move(name), {}, std::move(type));
  throw Error(ErrorKind::IllTyped, "constant '" + name + "' has type " +
                                       type.to_string() +
                                       ", which is not i or a predicate type");
}

Expr Expr::variable(std::string name, Type type) {
  if (type.is_iota())
    return make(ExprKind::IndVar, std::move(name), {}, std::move(type));
  if (type.is_predicate())
    return make(ExprKind::PredVar, std::move(name), {}, std::move(type));
  throw Error(ErrorKind::IllTyped, "variable '" + name + "' has type " +
                                       type.to_string() +
                                       ", which is not an argument type");
}

Expr Expr::fun_app(std::string symbol, std::vector<Expr> args) {
  if (args.empty())
    throw Error(ErrorKind::ArityMismatch,
                "function symbol '" + symbol + "' applied to no arguments");
  for (const Expr &a : args) {
    if (!a.is_term() || !a.type().is_iota())
      throw Error(ErrorKind::IllTypedApplication,
                  "argument '" + a.key() + "' of '" + symbol +
                      "' has type " + a.type().to_string() + ", expected i");
  }
  return make(ExprKind::FunApp, std::move(symbol), std::move(args),
              Type::iota());
}

Expr Expr::app(Expr op, Expr operand) {
  if (!op.is_term() || !operand.is_term())
    throw Error(ErrorKind::IllTypedApplication,
                "negations and equalities cannot be applied or passed as "
                "arguments: '" +
                    op.key() + "' applied to '" + operand.key() + "'");
  if (!op.type().is_arrow() || !op.type().is_predicate())
    throw Error(ErrorKind::IllTypedApplication,
                "'" + op.key() + "' of type " + op.type().to_string() +
                    " cannot be applied");
  if (op.type().argument() != operand.type())
    throw Error(ErrorKind::IllTypedApplication,
                "'" + op.key() + "' expects " +
                    op.type().argument().to_string() + " but '" +
                    operand.key() + "' has type " +
                    operand.type().to_string());
  Type result = op.type().result();
  return make(ExprKind::App, {}, {std::move(op), std::move(operand)},
              std::move(result));
}

Expr Expr::apply(Expr op, const std::vector<Expr> &operands) {
  for (const Expr &x : operands)
    op = app(std::move(op), x);
  return op;
}

Expr Expr::neg(Expr atom) {
  if (!atom.is_term() || !atom.type().is_omicron())
    throw Error(ErrorKind::NegOfNonBoolean,
                "negation of '" + atom.key() + "', which is not an atom");
  return make(ExprKind::Neg, {}, {std::move(atom)}, Type::omicron());
}

Expr Expr::eq(Expr lhs, Expr rhs) {
  for (const Expr *side : {&lhs, &rhs}) {
    if (!side->is_term() || !side->type().is_iota())
      throw Error(ErrorKind::EqOfNonIndividual,
                  "equality operand '" + side->key() + "' has type " +
                      side->type().to_string() + ", expected i");
  }
  return make(ExprKind::Eq, {}, {std::move(lhs), std::move(rhs)},
              Type::omicron());
}

const Expr &Expr::spine_head() const {
  const Expr *e = this;
  while (e->kind() == ExprKind::App)
    e = &e->op();
  return *e;
}

std::vector<Expr> Expr::spine_args() const {
  std::vector<Expr> out;
  const Expr *e = this;
  while (e->kind() == ExprKind::App) {
    out.push_back(e->operand());
    e = &e->op();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool operator==(const Expr &a, const Expr &b) {
  if (a.node_ == b.node_)
    return true;
  if (a.kind() != b.kind() || a.key() != b.key() || a.type() != b.type() ||
      a.name() != b.name() || a.children().size() != b.children().size())
    return false;
  for (std::size_t i = 0; i < a.children().size(); ++i)
    if (a.children()[i] != b.children()[i])
      return false;
  return true;
}

std::string canonical_print(const Expr &e) { return e.key(); }

std::vector<Variable> free_vars(const Expr &e) {
  std::vector<Variable> out;
  std::set<std::string> seen;
  collect_vars(e, out, seen);
  return out;
}

void Substitution::bind(const Variable &var, Expr value) {
  if (find(var.name))
    throw Error(ErrorKind::IllTyped,
                "variable '" + var.name + "' bound twice in substitution");
  if (!value.is_term())
    throw Error(ErrorKind::IllTyped, "substitution maps '" + var.name +
                                         "' to non-term '" + value.key() + "'");
  if (value.type() != var.type)
    throw Error(ErrorKind::TypeMismatch,
                "substitution maps '" + var.name + "' : " +
                    var.type.to_string() + " to '" + value.key() + "' : " +
                    value.type().to_string());
  bindings_.emplace_back(var, std::move(value));
}

const Expr *Substitution::find(const std::string &name) const {
  for (const auto &[var, value] : bindings_)
    if (var.name == name)
      return &value;
  return nullptr;
}

bool Substitution::is_ground() const {
  return std::all_of(bindings_.begin(), bindings_.end(),
                     [](const auto &b) { return b.second.is_ground(); });
}

std::string Substitution::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i)
      out += ", ";
    out += bindings_[i].first.name + "/" + bindings_[i].second.key();
  }
  return out + "}";
}

Expr apply_substitution(const Expr &e, const Substitution &theta) {
  if (e.is_ground() || theta.empty())
    return e;
  switch (e.kind()) {
  case ExprKind::IndConst:
  case ExprKind::PredConst:
    return e;
  case ExprKind::IndVar:
  case ExprKind::PredVar: {
    const Expr *value = theta.find(e.name());
    if (!value)
      return e;
    if (value->type() != e.type())
      throw Error(ErrorKind::TypeMismatch,
                  "substitution maps '" + e.name() + "' : " +
                      e.type().to_string() + " to a term of type " +
                      value->type().to_string());
    return *value;
  }
  case ExprKind::FunApp: {
    std::vector<Expr> args;
    args.reserve(e.children().size());
    for (const Expr &a : e.children())
      args.push_back(apply_substitution(a, theta));
    return Expr::fun_app(e.name(), std::move(args));
  }
  case ExprKind::App:
    return Expr::app(apply_substitution(e.op(), theta),
                     apply_substitution(e.operand(), theta));
  case ExprKind::Neg:
    return Expr::neg(apply_substitution(e.children()[0], theta));
  case ExprKind::Eq:
    return Expr::eq(apply_substitution(e.children()[0], theta),
                    apply_substitution(e.children()[1], theta));
  }
  return e;
}

const Symbol &Signature::declare(const std::string &name, const Type &type,
                                 SourcePos pos, bool declared) {
  if (symbols_.count(name))
    throw Error(ErrorKind::DuplicateDeclaration,
                "'" + name + "' is declared more than once", pos);
  if (starts_upper(name))
    throw Error(ErrorKind::InvalidDeclaration,
                "'" + name + "' starts with an uppercase letter; only "
                             "constants and function symbols are declared",
                pos);
  Symbol sym{name, SymbolKind::IndividualConstant, type, 0, declared, pos};
  if (type.is_iota()) {
    sym.kind = SymbolKind::IndividualConstant;
  } else if (type.is_predicate()) {
    sym.kind = SymbolKind::PredicateConstant;
  } else if (type.is_functional()) {
    sym.kind = SymbolKind::FunctionSymbol;
    sym.arity = type.arity();
  } else {
    throw Error(ErrorKind::InvalidDeclaration,
                "type " + type.to_string() + " of '" + name +
                    "' is neither i, a predicate type, nor i^n -> i",
                pos);
  }
  return symbols_.emplace(name, std::move(sym)).first->second;
}

const Symbol *Signature::find(const std::string &name) const {
  auto it = symbols_.find(name);
  return it == symbols_.end() ? nullptr : &it->second;
}

std::vector<const Symbol *> Signature::of_kind(SymbolKind kind) const {
  std::vector<const Symbol *> out;
  for (const auto &[_, sym] : symbols_)
    if (sym.kind == kind)
      out.push_back(&sym);
  return out;
}

bool operator==(const Signature &a, const Signature &b) {
  if (a.symbols_.size() != b.symbols_.size())
    return false;
  for (auto ia = a.symbols_.begin(), ib = b.symbols_.begin();
       ia != a.symbols_.end(); ++ia, ++ib) {
    const Symbol &x = ia->second;
    const Symbol &y = ib->second;
    if (x.name != y.name || x.kind != y.kind || x.type != y.type ||
        x.arity != y.arity || x.declared != y.declared)
      return false;
  }
  return true;
}

Type type_of(const Expr &e, const Signature &sig,
             const std::map<std::string, Type> &var_env) {
  switch (e.kind()) {
  case ExprKind::IndConst:
  case ExprKind::PredConst: {
    const Symbol *sym = sig.find(e.name());
    if (!sym || sym->kind == SymbolKind::FunctionSymbol)
      throw Error(ErrorKind::UnboundSymbol,
                  "constant '" + e.name() + "' is not in the signature");
    if (sym->type != e.type())
      throw Error(ErrorKind::TypeMismatch,
                  "'" + e.name() + "' has type " + sym->type.to_string() +
                      " in the signature but " + e.type().to_string() +
                      " here");
    return e.type();
  }
  case ExprKind::IndVar:
  case ExprKind::PredVar: {
    auto it = var_env.find(e.name());
    if (it == var_env.end())
      throw Error(ErrorKind::UnboundSymbol,
                  "variable '" + e.name() + "' is not in the environment");
    if (it->second != e.type())
      throw Error(ErrorKind::TypeMismatch,
                  "variable '" + e.name() + "' has type " +
                      it->second.to_string() + " in the environment but " +
                      e.type().to_string() + " here");
    return e.type();
  }
  case ExprKind::FunApp: {
    const Symbol *sym = sig.find(e.name());
    if (!sym || sym->kind != SymbolKind::FunctionSymbol)
      throw Error(ErrorKind::UnboundSymbol,
                  "function symbol '" + e.name() + "' is not in the signature");
    if (sym->arity != e.children().size())
      throw Error(ErrorKind::ArityMismatch,
                  "'" + e.name() + "' takes " + std::to_string(sym->arity) +
                      " arguments, given " +
                      std::to_string(e.children().size()));
    for (const Expr &c : e.children())
      type_of(c, sig, var_env);
    return e.type();
  }
  case ExprKind::App:
  case ExprKind::Neg:
  case ExprKind::Eq:
    for (const Expr &c : e.children())
      type_of(c, sig, var_env);
    return e.type();
  }
  return e.type();
}

Expr Clause::head_atom() const {
  Expr atom = Expr::constant(head, head_type);
  for (const Variable &v : formals)
    atom = Expr::app(std::move(atom), Expr::variable(v.name, v.type));
  return atom;
}

std::vector<Variable> Clause::variables() const {
  std::vector<Variable> out = formals;
  std::set<std::string> seen;
  for (const Variable &v : formals)
    seen.insert(v.name);
  for (const Expr &lit : body)
    collect_vars(lit, out, seen);
  return out;
}

std::string Clause::to_string() const {
  std::string out = head_atom().key();
  for (std::size_t i = 0; i < body.size(); ++i)
    out += (i ? ", " : " <- ") + body[i].key();
  return out + ".";
}

bool operator==(const Clause &a, const Clause &b) {
  return a.head == b.head && a.head_type == b.head_type &&
         a.formals == b.formals && a.body == b.body;
}

void Program::reindex() {
  by_predicate.clear();
  for (std::size_t i = 0; i < clauses.size(); ++i)
    by_predicate[clauses[i].head].push_back(i);
}

const std::vector<std::size_t> &
Program::clauses_for(const std::string &pred) const {
  static const std::vector<std::size_t> none;
  auto it = by_predicate.find(pred);
  return it == by_predicate.end() ? none : it->second;
}

std::string print_program(const Program &program) {
  std::string out;
  for (const auto &[name, sym] : program.signature.symbols()) {
    if (!sym.declared)
      continue;
    out += "type " + name + " : " + sym.type.to_string() + ".\n";
  }
  for (const Clause &c : program.clauses)
    out += c.to_string() + "\n";
  return out;
}

} // namespace hop
