#include "hop/kernels.hpp"

namespace hop {

CompiledProgram::CompiledProgram(const GroundProgram &gp)
    : atoms(gp.atom_count()) {
  clause_begin.reserve(atoms + 1);
  lit_begin.reserve(gp.clauses.size() + 1);
  std::vector<std::vector<AtomId>> deps(atoms);
  for (AtomId a = 0; a < atoms; ++a) {
    clause_begin.push_back(static_cast<std::uint32_t>(lit_begin.size()));
    if (a >= gp.by_head.size())
      continue;
    for (std::size_t ci : gp.by_head[a]) {
      lit_begin.push_back(static_cast<std::uint32_t>(lits.size()));
      for (const GroundLiteral &l : gp.clauses[ci].body) {
        lits.push_back(l);
        if (l.kind == GroundLiteral::Kind::Pos)
          deps[l.atom].push_back(a);
      }
    }
  }
  clause_begin.push_back(static_cast<std::uint32_t>(lit_begin.size()));
  lit_begin.push_back(static_cast<std::uint32_t>(lits.size()));

  pinned.assign(atoms, 0);
  for (AtomId a = 0; a < atoms && a < gp.frontier.size(); ++a)
    pinned[a] = gp.frontier[a];

  dep_begin.reserve(atoms + 1);
  for (AtomId a = 0; a < atoms; ++a) {
    dep_begin.push_back(static_cast<std::uint32_t>(dependents.size()));
    AtomId last = static_cast<AtomId>(-1);
    for (AtomId h : deps[a])
      if (h != last) {
        dependents.push_back(h);
        last = h;
      }
  }
  dep_begin.push_back(static_cast<std::uint32_t>(dependents.size()));
}

TruthValue theta_at(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                    const std::vector<TruthValue> &i, AtomId a) {
  if (cp.pinned[a])
    return TruthValue::Zero;
  bool every_clause_false = true;
  for (std::uint32_t c = cp.clause_begin[a]; c < cp.clause_begin[a + 1]; ++c) {
    bool all_true = true;
    bool some_false = false;
    for (std::uint32_t l = cp.lit_begin[c]; l < cp.lit_begin[c + 1]; ++l) {
      const GroundLiteral &lit = cp.lits[l];
      bool t = false, f = false;
      switch (lit.kind) {
      case GroundLiteral::Kind::Pos:
        t = j[lit.atom] == TruthValue::True || i[lit.atom] == TruthValue::True;
        f = j[lit.atom] == TruthValue::False || i[lit.atom] == TruthValue::False;
        break;
      case GroundLiteral::Kind::Neg:
        t = j[lit.atom] == TruthValue::False;
        f = j[lit.atom] == TruthValue::True;
        break;
      case GroundLiteral::Kind::True:
        t = true;
        break;
      case GroundLiteral::Kind::False:
        f = true;
        break;
      }
      all_true = all_true && t;
      some_false = some_false || f;
    }
    if (all_true)
      return TruthValue::True;
    every_clause_false = every_clause_false && some_false;
  }
  return every_clause_false ? TruthValue::False : TruthValue::Zero;
}

void theta_kernel(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                  const std::vector<TruthValue> &i, std::vector<TruthValue> &out,
                  Exec exec) {
  out.resize(cp.atoms);
  const std::int64_t n = static_cast<std::int64_t>(cp.atoms);
  if (exec == Exec::Serial) {
    for (std::int64_t a = 0; a < n; ++a)
      out[a] = theta_at(cp, j, i, static_cast<AtomId>(a));
    return;
  }
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t a = 0; a < n; ++a)
    out[a] = theta_at(cp, j, i, static_cast<AtomId>(a));
}

bool psi_at(const CompiledProgram &cp, const std::vector<TruthValue> &j,
            const std::vector<std::uint8_t> &i, AtomId a) {
  if (cp.pinned[a])
    return false;
  for (std::uint32_t c = cp.clause_begin[a]; c < cp.clause_begin[a + 1]; ++c) {
    bool all = true;
    for (std::uint32_t l = cp.lit_begin[c]; l < cp.lit_begin[c + 1] && all; ++l) {
      const GroundLiteral &lit = cp.lits[l];
      switch (lit.kind) {
      case GroundLiteral::Kind::Pos:
        all = j[lit.atom] == TruthValue::True || i[lit.atom];
        break;
      case GroundLiteral::Kind::Neg:
        all = j[lit.atom] == TruthValue::False;
        break;
      case GroundLiteral::Kind::True:
        break;
      case GroundLiteral::Kind::False:
        all = false;
        break;
      }
    }
    if (all)
      return true;
  }
  return false;
}

void psi_kernel(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                const std::vector<std::uint8_t> &i,
                std::vector<std::uint8_t> &out, Exec exec) {
  out.resize(cp.atoms);
  const std::int64_t n = static_cast<std::int64_t>(cp.atoms);
  if (exec == Exec::Serial) {
    for (std::int64_t a = 0; a < n; ++a)
      out[a] = psi_at(cp, j, i, static_cast<AtomId>(a));
    return;
  }
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t a = 0; a < n; ++a)
    out[a] = psi_at(cp, j, i, static_cast<AtomId>(a));
}

} // namespace hop
