#include "hop/perfect.hpp"

#include <algorithm>
#include <deque>

namespace hop {

Stratification Stratification::from_strata(std::vector<std::vector<std::string>> s) {
  Stratification out;
  out.strata = std::move(s);
  for (std::size_t i = 0; i < out.strata.size(); ++i)
    for (const std::string &p : out.strata[i])
      out.stratum[p] = i + 1;
  return out;
}

namespace {

void literal_edges(const Program &program, std::size_t ci, const Expr &lit,
                   std::vector<DependencyEdge> &out) {
  bool negative = lit.kind() == ExprKind::Neg;
  if (lit.kind() == ExprKind::Eq)
    return;
  const Expr &atom = negative ? lit.children()[0] : lit;
  const Expr &head = atom.spine_head();
  const std::string &p = program.clauses[ci].head;
  if (head.kind() == ExprKind::PredConst) {
    out.push_back({head.name(), p, negative, "", ci});
  } else if (head.kind() == ExprKind::PredVar) {
    for (const Symbol *q :
         program.signature.of_kind(SymbolKind::PredicateConstant))
      if (q->type.is_greater_or_equal(head.type()))
        out.push_back({q->name, p, negative, head.name(), ci});
  }
}

} // namespace

std::vector<DependencyEdge> dependency_edges(const Program &program) {
  std::vector<DependencyEdge> out;
  for (std::size_t ci = 0; ci < program.clauses.size(); ++ci)
    for (const Expr &lit : program.clauses[ci].body)
      literal_edges(program, ci, lit, out);
  return out;
}

StratifyResult stratify(const Program &program) {
  std::vector<std::string> names;
  std::map<std::string, std::size_t> node;
  for (const Symbol *s : program.signature.of_kind(SymbolKind::PredicateConstant)) {
    node[s->name] = names.size();
    names.push_back(s->name);
  }
  std::size_t n = names.size();
  std::vector<DependencyEdge> edges = dependency_edges(program);
  std::vector<std::vector<std::size_t>> out_edges(n);
  for (std::size_t e = 0; e < edges.size(); ++e)
    out_edges[node.at(edges[e].from)].push_back(e);

  // Shortest path (in edges) from `from` to `to`, or nullopt.
  auto path = [&](std::size_t from, std::size_t to)
      -> std::optional<std::vector<std::size_t>> {
    if (from == to)
      return std::vector<std::size_t>{};
    std::vector<long> via(n, -1);
    std::vector<bool> seen(n, false);
    std::deque<std::size_t> q{from};
    seen[from] = true;
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop_front();
      for (std::size_t e : out_edges[u]) {
        std::size_t v = node.at(edges[e].to);
        if (seen[v])
          continue;
        seen[v] = true;
        via[v] = static_cast<long>(e);
        if (v == to) {
          std::vector<std::size_t> p;
          for (std::size_t x = to; x != from;
               x = node.at(edges[static_cast<std::size_t>(via[x])].from))
            p.push_back(static_cast<std::size_t>(via[x]));
          std::reverse(p.begin(), p.end());
          return p;
        }
        q.push_back(v);
      }
    }
    return std::nullopt;
  };

  StratifyResult result;
  for (const DependencyEdge &e : edges) {
    if (!e.strict)
      continue;
    auto back = path(node.at(e.to), node.at(e.from));
    if (back) {
      result.cycle.push_back(e);
      for (std::size_t x : *back)
        result.cycle.push_back(edges[x]);
      return result;
    }
  }

  // No cycle carries a strict edge, so longest-path levels are finite.
  std::vector<std::size_t> level(n, 1);
  for (bool changed = true; changed;) {
    changed = false;
    for (const DependencyEdge &e : edges) {
      std::size_t want = level[node.at(e.from)] + (e.strict ? 1 : 0);
      std::size_t &to = level[node.at(e.to)];
      if (want > to) {
        to = want;
        changed = true;
      }
    }
  }
  std::size_t r = n ? *std::max_element(level.begin(), level.end()) : 0;
  std::vector<std::vector<std::string>> strata(r);
  for (std::size_t i = 0; i < n; ++i)
    strata[level[i] - 1].push_back(names[i]);
  result.stratification = Stratification::from_strata(std::move(strata));
  return result;
}

bool is_valid_stratification(const Program &program, const Stratification &s) {
  for (const Symbol *p : program.signature.of_kind(SymbolKind::PredicateConstant))
    if (!s.stratum.count(p->name))
      return false;
  for (const DependencyEdge &e : dependency_edges(program)) {
    std::size_t from = s.stratum.at(e.from), to = s.stratum.at(e.to);
    if (e.strict ? !(from < to) : !(from <= to))
      return false;
  }
  return true;
}

LocalStratification localize(const Stratification &s, const GroundProgram &gp) {
  LocalStratification ls;
  ls.levels = s.size();
  ls.stratum.resize(gp.atom_count());
  for (AtomId a = 0; a < gp.atom_count(); ++a) {
    const std::string &p = gp.atoms->atom(a).spine_head().name();
    auto it = s.stratum.find(p);
    if (it == s.stratum.end())
      throw Error(ErrorKind::Violation,
                  "predicate constant '" + p + "' of atom " + gp.atoms->key(a) +
                      " has no stratum");
    ls.stratum[a] = it->second;
  }
  for (const GroundClause &c : gp.clauses) {
    std::size_t h = ls.stratum[c.head];
    for (const GroundLiteral &l : c.body) {
      // Resolved equality constants sit in stratum 0 and never violate.
      bool bad = (l.kind == GroundLiteral::Kind::Pos && ls.stratum[l.atom] > h) ||
                 (l.kind == GroundLiteral::Kind::Neg && ls.stratum[l.atom] >= h);
      if (bad)
        throw Error(ErrorKind::Violation,
                    "ground clause '" + gp.clause_text(c) +
                        "' is not locally stratified: literal " +
                        gp.literal_text(l) + " has stratum " +
                        std::to_string(ls.stratum[l.atom]) +
                        " against head stratum " + std::to_string(h));
    }
  }
  return ls;
}

std::vector<std::uint8_t> psi_step(const PartialInterpretation &j,
                                   const std::vector<std::uint8_t> &i,
                                   const GroundProgram &gp) {
  CompiledProgram cp(gp);
  std::vector<std::uint8_t> out;
  psi_kernel(cp, j.values(), i, out, Exec::Serial);
  return out;
}

PerfectResult perfect_model(const GroundProgram &gp,
                            const LocalStratification &ls, Exec exec) {
  CompiledProgram cp(gp);
  PerfectResult result{PartialInterpretation(gp.atoms), {}, {}, ls.levels};
  std::vector<TruthValue> n(cp.atoms, TruthValue::Zero);
  auto wrap = [&](const std::vector<TruthValue> &v) {
    PartialInterpretation p(gp.atoms);
    p.values() = v;
    return p;
  };
  result.stages.push_back(wrap(n));
  for (std::size_t alpha = 1; alpha <= ls.levels; ++alpha) {
    std::vector<std::uint8_t> cur(cp.atoms, 0), next;
    std::size_t steps = 0;
    for (;;) {
      psi_kernel(cp, n, cur, next, exec);
      if (next == cur)
        break;
      cur.swap(next);
      ++steps;
    }
    result.inner_lengths.push_back(steps);
    std::vector<TruthValue> stage(cp.atoms, TruthValue::Zero);
    for (AtomId a = 0; a < cp.atoms; ++a) {
      if (cur[a])
        stage[a] = TruthValue::True;
      else if (ls.stratum[a] <= alpha && !cp.pinned[a])
        stage[a] = TruthValue::False;
    }
    for (AtomId a = 0; a < cp.atoms; ++a)
      if (!leq(n[a], stage[a], Ordering::Fitting))
        throw Error(ErrorKind::NotIncreasing,
                    "stage N_" + std::to_string(alpha) +
                        " is not above N_" + std::to_string(alpha - 1) +
                        " in the Fitting order at " + gp.atoms->key(a));
    n = std::move(stage);
    result.stages.push_back(wrap(n));
  }
  result.model = result.stages.back();
  return result;
}

nlohmann::ordered_json stratify_json(const Program &program,
                                     const StratifyResult &r) {
  nlohmann::ordered_json j;
  if (r.ok()) {
    j["strata"] = r.stratification->strata;
    return j;
  }
  nlohmann::ordered_json cycle = nlohmann::ordered_json::array();
  for (const DependencyEdge &e : r.cycle) {
    nlohmann::ordered_json edge;
    edge["from"] = e.from;
    edge["to"] = e.to;
    edge["relation"] = e.strict ? "<" : "<=";
    if (!e.via.empty())
      edge["via"] = e.via;
    edge["clause"] = program.clauses[e.clause].to_string();
    cycle.push_back(std::move(edge));
  }
  j["unstratifiable"]["cycle"] = std::move(cycle);
  return j;
}

} // namespace hop
