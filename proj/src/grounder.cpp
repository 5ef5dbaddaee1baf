#include "hop/grounder.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hop {

AtomId AtomTable::intern(const Expr &atom) {
  auto [it, inserted] =
      index_.emplace(atom.key(), static_cast<AtomId>(atoms_.size()));
  if (inserted)
    atoms_.push_back(atom);
  return it->second;
}

bool AtomTable::find(const std::string &key, AtomId &out) const {
  auto it = index_.find(key);
  if (it == index_.end())
    return false;
  out = it->second;
  return true;
}

bool GroundProgram::has_frontier() const {
  return std::find(frontier.begin(), frontier.end(), true) != frontier.end();
}

void GroundProgram::index() {
  std::size_t n = atoms->size();
  by_head.assign(n, {});
  frontier.resize(n, false);
  std::vector<std::vector<AtomId>> dependents(n);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    by_head[clauses[i].head].push_back(i);
    for (const GroundLiteral &l : clauses[i].body)
      if (l.kind == GroundLiteral::Kind::Pos ||
          l.kind == GroundLiteral::Kind::Neg)
        dependents[l.atom].push_back(clauses[i].head);
  }
  tainted.assign(n, false);
  std::vector<AtomId> stack;
  for (AtomId a = 0; a < n; ++a)
    if (frontier[a]) {
      tainted[a] = true;
      stack.push_back(a);
    }
  while (!stack.empty()) {
    AtomId a = stack.back();
    stack.pop_back();
    for (AtomId h : dependents[a])
      if (!tainted[h]) {
        tainted[h] = true;
        stack.push_back(h);
      }
  }
}

std::string GroundProgram::literal_text(const GroundLiteral &lit) const {
  switch (lit.kind) {
  case GroundLiteral::Kind::Pos:
    return atoms->key(lit.atom);
  case GroundLiteral::Kind::Neg: {
    const Expr &a = atoms->atom(lit.atom);
    return a.kind() == ExprKind::App ? "~(" + a.key() + ")" : "~" + a.key();
  }
  case GroundLiteral::Kind::True:
    return "true";
  case GroundLiteral::Kind::False:
    return "false";
  }
  return {};
}

std::string GroundProgram::clause_text(const GroundClause &c) const {
  std::string out = atoms->key(c.head);
  for (std::size_t i = 0; i < c.body.size(); ++i)
    out += (i ? ", " : " <- ") + literal_text(c.body[i]);
  return out + ".";
}

std::string GroundProgram::dump() const {
  std::string out;
  for (const GroundClause &c : clauses)
    out += clause_text(c) + "\n";
  return out;
}

namespace {

// Every way of writing `total` as an ordered sum of `parts` positive terms.
void compositions(std::size_t total, std::size_t parts,
                  std::vector<std::size_t> &cur,
                  std::vector<std::vector<std::size_t>> &out) {
  if (parts == 0) {
    if (total == 0)
      out.push_back(cur);
    return;
  }
  for (std::size_t first = 1; first + (parts - 1) <= total; ++first) {
    cur.push_back(first);
    compositions(total - first, parts - 1, cur, out);
    cur.pop_back();
  }
}

} // namespace

UniverseIndex::UniverseIndex(const Program &program, std::size_t k)
    : program_(program), k_(k) {
  std::set<Type> ops;
  for (const Symbol *s : program.signature.of_kind(SymbolKind::PredicateConstant))
    for (const Type &t : s->type.suffixes())
      if (t.is_arrow())
        ops.insert(t);
  operator_types_.assign(ops.begin(), ops.end());
}

const std::vector<Expr> &UniverseIndex::terms_of_size(const Type &rho,
                                                      std::size_t n) {
  auto key = std::make_pair(rho, n);
  auto it = by_size_.find(key);
  if (it != by_size_.end())
    return it->second;

  std::vector<Expr> out;
  if (n == 1) {
    for (const auto &[name, sym] : program_.signature.symbols())
      if (sym.kind != SymbolKind::FunctionSymbol && sym.type == rho)
        out.push_back(Expr::constant(name, sym.type));
  } else if (n > 1 && rho.is_iota()) {
    for (const Symbol *f : program_.signature.of_kind(SymbolKind::FunctionSymbol)) {
      std::size_t m = f->arity;
      if (n - 1 < m)
        continue;
      std::vector<std::vector<std::size_t>> splits;
      std::vector<std::size_t> cur;
      compositions(n - 1, m, cur, splits);
      for (const std::vector<std::size_t> &parts : splits) {
        std::vector<const std::vector<Expr> *> pools;
        bool empty = false;
        for (std::size_t p : parts) {
          pools.push_back(&terms_of_size(Type::iota(), p));
          empty = empty || pools.back()->empty();
        }
        if (empty)
          continue;
        std::vector<std::size_t> idx(m, 0);
        for (;;) {
          std::vector<Expr> args;
          for (std::size_t j = 0; j < m; ++j)
            args.push_back((*pools[j])[idx[j]]);
          out.push_back(Expr::fun_app(f->name, std::move(args)));
          std::size_t j = m;
          while (j > 0 && ++idx[j - 1] == pools[j - 1]->size())
            idx[--j] = 0;
          if (j == 0)
            break;
        }
      }
    }
  } else if (n > 1 && rho.is_predicate()) {
    for (const Type &op_type : operator_types_) {
      if (op_type.result() != rho)
        continue;
      for (std::size_t m = 1; m < n; ++m) {
        const std::vector<Expr> &ops = terms_of_size(op_type, m);
        if (ops.empty())
          continue;
        const std::vector<Expr> &args = terms_of_size(op_type.argument(), n - m);
        for (const Expr &op : ops)
          for (const Expr &arg : args)
            out.push_back(Expr::app(op, arg));
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Expr &a, const Expr &b) { return a.key() < b.key(); });
  return by_size_.emplace(key, std::move(out)).first->second;
}

const std::vector<Expr> &UniverseIndex::terms(const Type &rho) {
  auto it = upto_.find(rho);
  if (it != upto_.end())
    return it->second;
  if (rho.is_iota() &&
      program_.signature.of_kind(SymbolKind::IndividualConstant).empty())
    throw Error(ErrorKind::EmptyUniverse,
                "the program has no individual constants, so there are no "
                "ground terms of type i");
  std::vector<Expr> out;
  for (std::size_t n = 1; n <= k_; ++n) {
    const std::vector<Expr> &layer = terms_of_size(rho, n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return upto_.emplace(rho, std::move(out)).first->second;
}

std::vector<Expr> herbrand_universe(const Program &program, const Type &rho,
                                    std::size_t k) {
  if (!rho.is_argument())
    throw Error(ErrorKind::IllTyped,
                rho.to_string() + " is not an argument type");
  if (k < 1)
    throw Error(ErrorKind::Usage, "the size bound must be at least 1");
  UniverseIndex u(program, k);
  return u.terms(rho);
}

GroundClause instantiate(const Program &program, std::size_t source,
                         const Substitution &theta, AtomTable &atoms) {
  const Clause &c = program.clauses[source];
  GroundClause g;
  g.source = source;
  g.theta = theta;
  g.head = atoms.intern(apply_substitution(c.head_atom(), theta));
  for (const Expr &lit : c.body) {
    Expr e = apply_substitution(lit, theta);
    switch (e.kind()) {
    case ExprKind::Eq:
      g.body.push_back({e.children()[0] == e.children()[1]
                            ? GroundLiteral::Kind::True
                            : GroundLiteral::Kind::False,
                        0});
      break;
    case ExprKind::Neg:
      g.body.push_back({GroundLiteral::Kind::Neg, atoms.intern(e.children()[0])});
      break;
    default:
      g.body.push_back({GroundLiteral::Kind::Pos, atoms.intern(e)});
      break;
    }
  }
  return g;
}

namespace {

// Calls f(theta) for every extension of `base` that binds vars[from..] to
// members of their universes, in odometer order (leftmost slowest).
template <typename F>
void for_each_binding(const std::vector<Variable> &vars, std::size_t from,
                      const Substitution &base, UniverseIndex &u, F &&f) {
  std::vector<const std::vector<Expr> *> pools;
  for (std::size_t i = from; i < vars.size(); ++i) {
    pools.push_back(&u.terms(vars[i].type));
    if (pools.back()->empty())
      return;
  }
  std::vector<std::size_t> idx(pools.size(), 0);
  for (;;) {
    Substitution theta = base;
    for (std::size_t j = 0; j < pools.size(); ++j)
      theta.bind(vars[from + j], (*pools[j])[idx[j]]);
    f(theta);
    std::size_t j = pools.size();
    while (j > 0 && ++idx[j - 1] == pools[j - 1]->size())
      idx[--j] = 0;
    if (j == 0)
      return;
  }
}

} // namespace

GroundProgram ground_instantiation(const Program &program, std::size_t k) {
  if (k < 1)
    throw Error(ErrorKind::Usage, "the size bound must be at least 1");
  UniverseIndex u(program, k);
  GroundProgram gp;
  for (std::size_t ci = 0; ci < program.clauses.size(); ++ci) {
    std::vector<Variable> vars = program.clauses[ci].variables();
    for_each_binding(vars, 0, Substitution{}, u, [&](const Substitution &th) {
      gp.clauses.push_back(instantiate(program, ci, th, *gp.atoms));
    });
  }
  gp.index();
  return gp;
}

std::size_t default_budget(std::size_t k) { return 4 * k; }

GroundProgram relevant_grounding(const Program &program,
                                 const std::vector<Expr> &roots, std::size_t k,
                                 std::size_t budget) {
  if (k < 1)
    throw Error(ErrorKind::Usage, "the size bound must be at least 1");
  UniverseIndex u(program, k);
  GroundProgram gp;
  std::vector<bool> queued;
  std::deque<AtomId> work;
  auto enqueue = [&](AtomId a) {
    if (queued.size() <= a)
      queued.resize(a + 1, false);
    if (!queued[a]) {
      queued[a] = true;
      work.push_back(a);
    }
  };
  for (const Expr &r : roots) {
    if (!r.is_ground() || !r.type().is_omicron() ||
        r.spine_head().kind() != ExprKind::PredConst)
      throw Error(ErrorKind::IllTyped,
                  "root '" + r.key() +
                      "' is not a ground atom headed by a predicate constant");
    enqueue(gp.atoms->intern(r));
  }
  std::vector<bool> frontier;
  while (!work.empty()) {
    AtomId a = work.front();
    work.pop_front();
    Expr atom = gp.atoms->atom(a);
    if (atom.symbol_count() > budget) {
      if (frontier.size() <= a)
        frontier.resize(a + 1, false);
      frontier[a] = true;
      continue;
    }
    std::vector<Expr> args = atom.spine_args();
    for (std::size_t ci : program.clauses_for(atom.spine_head().name())) {
      const Clause &c = program.clauses[ci];
      Substitution head_theta;
      for (std::size_t i = 0; i < c.formals.size(); ++i)
        head_theta.bind(c.formals[i], args[i]);
      std::vector<Variable> vars = c.variables();
      for_each_binding(vars, c.formals.size(), head_theta, u,
                       [&](const Substitution &th) {
                         GroundClause g = instantiate(program, ci, th, *gp.atoms);
                         for (const GroundLiteral &l : g.body)
                           if (l.kind == GroundLiteral::Kind::Pos ||
                               l.kind == GroundLiteral::Kind::Neg)
                             enqueue(l.atom);
                         gp.clauses.push_back(std::move(g));
                       });
    }
  }
  frontier.resize(gp.atoms->size(), false);
  gp.frontier = std::move(frontier);
  gp.index();
  return gp;
}

} // namespace hop
