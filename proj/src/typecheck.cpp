#include "hop/typecheck.hpp"

#include <optional>
#include <set>

namespace hop {

namespace {

std::string pos_text(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.column);
}

// Re-throws library errors raised without a position at `pos`.
template <typename F> auto located(SourcePos pos, F &&f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error &e) {
    if (e.pos().known() || !pos.known())
      throw;
    throw Error(e.kind(), e.detail(), e.notes(), pos);
  }
}

enum class Use { Individual, Literal, Applied };

// How each undeclared lowercase name is used across the program.
struct UseInfo {
  std::set<Use> uses;
  SourcePos first;
  SourcePos applied_at;
};

void scan_uses(const RawTerm &t, bool literal_position,
               std::map<std::string, UseInfo> &out) {
  switch (t.kind) {
  case RawTerm::Kind::Name:
    if (!t.is_variable_name()) {
      UseInfo &u = out[t.name];
      if (!u.first.known())
        u.first = t.pos;
      u.uses.insert(literal_position ? Use::Literal : Use::Individual);
    }
    return;
  case RawTerm::Kind::Apply:
    if (t.items[0].kind == RawTerm::Kind::Name &&
        !t.items[0].is_variable_name()) {
      UseInfo &u = out[t.items[0].name];
      if (!u.first.known())
        u.first = t.items[0].pos;
      if (!u.applied_at.known())
        u.applied_at = t.items[0].pos;
      u.uses.insert(Use::Applied);
    } else {
      scan_uses(t.items[0], false, out);
    }
    for (std::size_t i = 1; i < t.items.size(); ++i)
      scan_uses(t.items[i], false, out);
    return;
  case RawTerm::Kind::Neg:
    scan_uses(t.items[0], true, out);
    return;
  case RawTerm::Kind::Eq:
    scan_uses(t.items[0], false, out);
    scan_uses(t.items[1], false, out);
    return;
  }
}

Signature build_signature(const SourceProgram &source) {
  Signature sig;
  for (const RawDeclaration &d : source.declarations)
    sig.declare(d.name, d.type, d.pos, true);

  std::map<std::string, UseInfo> uses;
  for (const RawClause &c : source.clauses) {
    scan_uses(c.head, true, uses);
    for (const RawTerm &l : c.body)
      scan_uses(l, true, uses);
  }
  for (const auto &[name, info] : uses) {
    if (sig.contains(name))
      continue;
    if (info.uses.count(Use::Applied))
      throw Error(ErrorKind::UnboundSymbol,
                  "'" + name + "' is applied to arguments but has no type "
                               "declaration",
                  info.applied_at);
    bool literal = info.uses.count(Use::Literal) > 0;
    bool individual = info.uses.count(Use::Individual) > 0;
    if (literal && individual)
      throw Error(ErrorKind::UnboundSymbol,
                  "'" + name + "' is used both as an atom and as an "
                               "individual; declare its type",
                  info.first);
    sig.declare(name, literal ? Type::omicron() : Type::iota(), info.first,
                false);
  }
  return sig;
}

struct NormalizedClause {
  const Symbol *pred = nullptr;
  std::vector<Variable> formals;
  std::vector<RawTerm> body;
  SourcePos pos;
};

void collect_var_names(const RawTerm &t, std::set<std::string> &out) {
  if (t.kind == RawTerm::Kind::Name) {
    if (t.is_variable_name())
      out.insert(t.name);
    return;
  }
  for (const RawTerm &c : t.items)
    collect_var_names(c, out);
}

NormalizedClause normalize(const RawClause &clause, const Signature &sig) {
  NormalizedClause out;
  out.pos = clause.pos;
  const RawTerm &head = clause.head;
  const RawTerm *head_sym = nullptr;
  std::vector<const RawTerm *> args;
  if (head.kind == RawTerm::Kind::Name) {
    head_sym = &head;
  } else if (head.kind == RawTerm::Kind::Apply) {
    head_sym = &head.items[0];
    for (std::size_t i = 1; i < head.items.size(); ++i)
      args.push_back(&head.items[i]);
  }
  if (!head_sym || head_sym->kind != RawTerm::Kind::Name)
    throw Error(ErrorKind::IllTyped,
                "clause head must be an atom headed by a predicate constant",
                head.pos);
  if (head_sym->is_variable_name())
    throw Error(ErrorKind::IllTyped,
                "clause head starts with variable '" + head_sym->name +
                    "'; it must start with a predicate constant",
                head_sym->pos);
  const Symbol *sym = sig.find(head_sym->name);
  if (!sym)
    throw Error(ErrorKind::UnboundSymbol,
                "'" + head_sym->name + "' has no type declaration",
                head_sym->pos);
  if (sym->kind != SymbolKind::PredicateConstant)
    throw Error(ErrorKind::IllTyped,
                "clause head '" + head_sym->name +
                    "' is not a predicate constant (type " +
                    sym->type.to_string() + ")",
                head_sym->pos);
  std::vector<Type> arg_types = sym->type.arguments();
  if (args.size() != arg_types.size())
    throw Error(ErrorKind::ArityMismatch,
                "head '" + sym->name + "' has type " + sym->type.to_string() +
                    " and needs " + std::to_string(arg_types.size()) +
                    " arguments, given " + std::to_string(args.size()),
                head.pos);
  out.pred = sym;

  std::set<std::string> used;
  collect_var_names(head, used);
  for (const RawTerm &l : clause.body)
    collect_var_names(l, used);
  int fresh_counter = 0;
  auto fresh = [&] {
    std::string name;
    do
      name = "_H" + std::to_string(++fresh_counter);
    while (used.count(name));
    used.insert(name);
    return name;
  };

  std::map<std::string, Type> formal_types;
  std::vector<RawTerm> equalities;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const RawTerm &arg = *args[i];
    const Type &ty = arg_types[i];
    bool is_var = arg.is_variable_name();
    bool repeated = is_var && formal_types.count(arg.name);
    if (ty.is_iota() && (!is_var || (repeated && formal_types.at(arg.name)
                                                     .is_iota()))) {
      std::string name = fresh();
      out.formals.push_back({name, ty});
      formal_types.emplace(name, ty);
      RawTerm var;
      var.kind = RawTerm::Kind::Name;
      var.name = name;
      var.pos = arg.pos;
      RawTerm eq;
      eq.kind = RawTerm::Kind::Eq;
      eq.pos = arg.pos;
      eq.items = {var, arg};
      equalities.push_back(std::move(eq));
      continue;
    }
    if (!is_var)
      throw Error(ErrorKind::NonVariableHeadArgument,
                  "argument '" + arg.to_string() + "' of head '" + sym->name +
                      "' has predicate type " + ty.to_string() +
                      " and must be a variable",
                  arg.pos);
    if (repeated)
      throw Error(ErrorKind::RepeatedHeadVariable,
                  "variable '" + arg.name + "' occurs more than once in the "
                                            "head of '" +
                      sym->name + "'",
                  arg.pos);
    out.formals.push_back({arg.name, ty});
    formal_types.emplace(arg.name, ty);
  }
  out.body = std::move(equalities);
  out.body.insert(out.body.end(), clause.body.begin(), clause.body.end());
  return out;
}

struct Occurrence {
  Type type;
  SourcePos pos;
};

class Inference {
public:
  Inference(const Signature &sig, const NormalizedClause &clause)
      : sig_(sig), clause_(clause) {
    for (const Variable &v : clause.formals)
      known_.emplace(v.name, v.type);
  }

  std::map<std::string, Type> run() {
    for (;;) {
      pass();
      bool changed = false;
      for (const auto &[name, occ] : constraints_)
        if (!known_.count(name) && !occ.empty()) {
          known_.emplace(name, occ.front().type);
          changed = true;
        }
      if (!changed)
        break;
    }
    pass();
    for (const auto &[name, occ] : constraints_) {
      std::set<Type> distinct;
      for (const Occurrence &o : occ)
        distinct.insert(o.type);
      const Variable *formal = nullptr;
      for (const Variable &v : clause_.formals)
        if (v.name == name)
          formal = &v;
      if (formal)
        distinct.insert(formal->type);
      if (distinct.size() <= 1)
        continue;
      std::vector<Diagnostic> notes;
      if (formal)
        notes.push_back({ErrorKind::ConflictingVariableType,
                         name + " : " + formal->type.to_string() +
                             " from the head declaration",
                         clause_.pos});
      std::string listing;
      for (const Occurrence &o : occ) {
        notes.push_back({ErrorKind::ConflictingVariableType,
                         name + " : " + o.type.to_string(), o.pos});
        listing += "; " + o.type.to_string() + " at " + pos_text(o.pos);
      }
      throw Error(ErrorKind::ConflictingVariableType,
                  "variable '" + name + "' is used at conflicting types" +
                      (formal ? " (head: " + formal->type.to_string() + ")"
                              : std::string()) +
                      listing,
                  std::move(notes), occ.front().pos);
    }
    for (const auto &[name, pos] : seen_)
      if (!known_.count(name))
        throw Error(ErrorKind::AmbiguousVariableType,
                    "the type of variable '" + name +
                        "' is not determined by any of its occurrences",
                    pos);
    return known_;
  }

private:
  void pass() {
    constraints_.clear();
    for (const RawTerm &l : clause_.body)
      infer(l, Type::omicron());
  }

  std::optional<Type> infer(const RawTerm &t, std::optional<Type> expected) {
    switch (t.kind) {
    case RawTerm::Kind::Name: {
      if (t.is_variable_name()) {
        seen_.emplace(t.name, t.pos);
        if (expected)
          constraints_[t.name].push_back({*expected, t.pos});
        auto it = known_.find(t.name);
        if (it != known_.end())
          return it->second;
        return expected;
      }
      const Symbol *sym = sig_.find(t.name);
      if (!sym)
        return std::nullopt;
      return sym->type;
    }
    case RawTerm::Kind::Apply: {
      const RawTerm &head = t.items[0];
      if (head.kind == RawTerm::Kind::Name && !head.is_variable_name()) {
        const Symbol *sym = sig_.find(head.name);
        if (sym && sym->kind == SymbolKind::FunctionSymbol) {
          for (std::size_t i = 1; i < t.items.size(); ++i)
            infer(t.items[i], Type::iota());
          return Type::iota();
        }
      }
      std::optional<Type> ht = infer(head, std::nullopt);
      if (ht) {
        Type cur = *ht;
        bool ok = true;
        for (std::size_t i = 1; i < t.items.size(); ++i) {
          if (ok && cur.is_arrow()) {
            infer(t.items[i], cur.argument());
            cur = cur.result();
          } else {
            ok = false;
            infer(t.items[i], std::nullopt);
          }
        }
        return ok ? std::optional<Type>(cur) : std::nullopt;
      }
      std::vector<Type> arg_types;
      bool all = true;
      for (std::size_t i = 1; i < t.items.size(); ++i) {
        std::optional<Type> a = infer(t.items[i], std::nullopt);
        if (a)
          arg_types.push_back(*a);
        else
          all = false;
      }
      if (all && expected && head.is_variable_name())
        constraints_[head.name].push_back(
            {Type::arrows(arg_types, *expected), head.pos});
      return expected;
    }
    case RawTerm::Kind::Neg:
      infer(t.items[0], Type::omicron());
      return Type::omicron();
    case RawTerm::Kind::Eq:
      infer(t.items[0], Type::iota());
      infer(t.items[1], Type::iota());
      return Type::omicron();
    }
    return std::nullopt;
  }

  const Signature &sig_;
  const NormalizedClause &clause_;
  std::map<std::string, Type> known_;
  std::map<std::string, std::vector<Occurrence>> constraints_;
  std::map<std::string, SourcePos> seen_;
};

Expr elaborate_term(const RawTerm &t, const Signature &sig,
                    const std::map<std::string, Type> &env) {
  switch (t.kind) {
  case RawTerm::Kind::Name: {
    if (t.is_variable_name()) {
      auto it = env.find(t.name);
      if (it == env.end())
        throw Error(ErrorKind::UnboundSymbol,
                    "variable '" + t.name + "' has no known type", t.pos);
      return located(t.pos, [&] { return Expr::variable(t.name, it->second); });
    }
    const Symbol *sym = sig.find(t.name);
    if (!sym)
      throw Error(ErrorKind::UnboundSymbol,
                  "'" + t.name + "' has no type declaration", t.pos);
    if (sym->kind == SymbolKind::FunctionSymbol)
      throw Error(ErrorKind::ArityMismatch,
                  "function symbol '" + t.name + "' takes " +
                      std::to_string(sym->arity) + " arguments, given 0",
                  t.pos);
    return Expr::constant(t.name, sym->type);
  }
  case RawTerm::Kind::Apply: {
    const RawTerm &head = t.items[0];
    if (head.kind == RawTerm::Kind::Name && !head.is_variable_name()) {
      const Symbol *sym = sig.find(head.name);
      if (sym && sym->kind == SymbolKind::FunctionSymbol) {
        std::size_t given = t.items.size() - 1;
        if (given != sym->arity)
          throw Error(ErrorKind::ArityMismatch,
                      "function symbol '" + head.name + "' takes " +
                          std::to_string(sym->arity) + " arguments, given " +
                          std::to_string(given),
                      head.pos);
        std::vector<Expr> args;
        for (std::size_t i = 1; i < t.items.size(); ++i)
          args.push_back(elaborate_term(t.items[i], sig, env));
        return located(t.pos,
                       [&] { return Expr::fun_app(head.name, std::move(args)); });
      }
    }
    Expr op = elaborate_term(head, sig, env);
    for (std::size_t i = 1; i < t.items.size(); ++i) {
      Expr arg = elaborate_term(t.items[i], sig, env);
      op = located(t.items[i].pos, [&] { return Expr::app(op, arg); });
    }
    return op;
  }
  case RawTerm::Kind::Neg: {
    Expr atom = elaborate_term(t.items[0], sig, env);
    return located(t.pos, [&] { return Expr::neg(atom); });
  }
  case RawTerm::Kind::Eq: {
    Expr l = elaborate_term(t.items[0], sig, env);
    Expr r = elaborate_term(t.items[1], sig, env);
    return located(t.pos, [&] { return Expr::eq(l, r); });
  }
  }
  throw Error(ErrorKind::IllTyped, "unexpected expression", t.pos);
}

Expr elaborate_literal(const RawTerm &t, const Signature &sig,
                       const std::map<std::string, Type> &env) {
  Expr e = elaborate_term(t, sig, env);
  if (!e.type().is_omicron())
    throw Error(ErrorKind::IllTyped,
                "literal '" + e.key() + "' has type " + e.type().to_string() +
                    ", expected o",
                t.pos);
  return e;
}

Clause check_clause(const RawClause &raw, const Signature &sig) {
  NormalizedClause nc = normalize(raw, sig);
  std::map<std::string, Type> env = Inference(sig, nc).run();
  Clause c;
  c.head = nc.pred->name;
  c.head_type = nc.pred->type;
  c.formals = nc.formals;
  c.pos = raw.pos;
  for (const RawTerm &l : nc.body)
    c.body.push_back(elaborate_literal(l, sig, env));
  return c;
}

} // namespace

Program check_program(const SourceProgram &source) {
  Program p;
  p.signature = build_signature(source);
  for (const RawClause &c : source.clauses)
    p.clauses.push_back(check_clause(c, p.signature));
  p.reindex();
  return p;
}

Program load_program(std::string_view text) {
  return check_program(parse_program(text));
}

std::map<std::string, Type> infer_var_types(const RawClause &clause,
                                            const Signature &sig) {
  NormalizedClause nc = normalize(clause, sig);
  return Inference(sig, nc).run();
}

Expr elaborate(const RawTerm &term, const Signature &sig,
               const std::map<std::string, Type> &env) {
  return elaborate_term(term, sig, env);
}

Expr parse_ground_atom(std::string_view text, const Signature &sig) {
  RawTerm raw = parse_literal(text);
  if (raw.kind == RawTerm::Kind::Neg || raw.kind == RawTerm::Kind::Eq)
    throw Error(ErrorKind::IllTyped,
                "'" + std::string(text) + "' is not an atom", raw.pos);
  Expr e = elaborate_literal(raw, sig, {});
  if (e.spine_head().kind() != ExprKind::PredConst)
    throw Error(ErrorKind::IllTyped,
                "atom '" + e.key() + "' does not start with a predicate "
                                     "constant",
                raw.pos);
  return e;
}

} // namespace hop
