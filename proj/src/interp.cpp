#include "hop/interp.hpp"

#include <algorithm>
#include <cstdint>

namespace hop {

TruthValue negate(TruthValue v) {
  switch (v) {
  case TruthValue::False: return TruthValue::True;
  case TruthValue::True: return TruthValue::False;
  case TruthValue::Zero: return TruthValue::Zero;
  }
  return TruthValue::Zero;
}

std::string_view to_string(TruthValue v) {
  switch (v) {
  case TruthValue::False: return "false";
  case TruthValue::Zero: return "0";
  case TruthValue::True: return "true";
  }
  return "?";
}

bool leq(TruthValue a, TruthValue b, Ordering ord) {
  if (ord == Ordering::Truth)
    return a <= b;
  return a == TruthValue::Zero || a == b;
}

PartialInterpretation::PartialInterpretation(
    std::shared_ptr<const AtomTable> atoms, TruthValue fill)
    : atoms_(std::move(atoms)), values_(atoms_->size(), fill) {}

PartialInterpretation
PartialInterpretation::from_sets(std::shared_ptr<const AtomTable> atoms,
                                 const std::vector<std::string> &t,
                                 const std::vector<std::string> &f) {
  PartialInterpretation out(std::move(atoms));
  auto lookup = [&](const std::string &key) {
    AtomId id;
    if (!out.atoms_->find(key, id))
      throw Error(ErrorKind::UnknownAtom, "'" + key + "' is not in B_P");
    return id;
  };
  for (const std::string &k : t)
    out.values_[lookup(k)] = TruthValue::True;
  for (const std::string &k : f) {
    AtomId id = lookup(k);
    if (out.values_[id] == TruthValue::True)
      throw Error(ErrorKind::Violation,
                  "'" + k + "' is both true and false");
    out.values_[id] = TruthValue::False;
  }
  return out;
}

TruthValue PartialInterpretation::value_of(const std::string &key) const {
  AtomId id;
  if (!atoms_->find(key, id) || id >= values_.size())
    throw Error(ErrorKind::UnknownAtom, "'" + key + "' is not in B_P");
  return values_[id];
}

std::vector<std::string> PartialInterpretation::keys_with(TruthValue v) const {
  std::vector<std::string> out;
  for (AtomId a = 0; a < values_.size(); ++a)
    if (values_[a] == v)
      out.push_back(atoms_->key(a));
  std::sort(out.begin(), out.end());
  return out;
}

bool PartialInterpretation::is_total() const {
  return std::find(values_.begin(), values_.end(), TruthValue::Zero) ==
         values_.end();
}

namespace {

inline TruthValue literal_value(const std::vector<TruthValue> &v,
                                const GroundLiteral &lit) {
  switch (lit.kind) {
  case GroundLiteral::Kind::Pos: return v[lit.atom];
  case GroundLiteral::Kind::Neg: return negate(v[lit.atom]);
  case GroundLiteral::Kind::True: return TruthValue::True;
  case GroundLiteral::Kind::False: return TruthValue::False;
  }
  return TruthValue::Zero;
}

inline TruthValue conj_value(const std::vector<TruthValue> &v,
                             const std::vector<GroundLiteral> &lits) {
  TruthValue out = TruthValue::True;
  for (const GroundLiteral &l : lits) {
    out = std::min(out, literal_value(v, l));
    if (out == TruthValue::False)
      break;
  }
  return out;
}

std::optional<std::size_t> first_violation(const std::vector<TruthValue> &v,
                                           const GroundProgram &gp) {
  for (std::size_t i = 0; i < gp.clauses.size(); ++i)
    if (v[gp.clauses[i].head] < conj_value(v, gp.clauses[i].body))
      return i;
  return std::nullopt;
}

void check_covered(const PartialInterpretation &i, const GroundLiteral &lit) {
  if ((lit.kind == GroundLiteral::Kind::Pos ||
       lit.kind == GroundLiteral::Kind::Neg) &&
      lit.atom >= i.size())
    throw Error(ErrorKind::UnknownAtom,
                "atom #" + std::to_string(lit.atom) +
                    " is outside the interpretation");
}

} // namespace

TruthValue value_of(const PartialInterpretation &i, const GroundLiteral &lit) {
  check_covered(i, lit);
  return literal_value(i.values(), lit);
}

TruthValue value_of_conj(const PartialInterpretation &i,
                         const std::vector<GroundLiteral> &lits) {
  for (const GroundLiteral &l : lits)
    check_covered(i, l);
  return conj_value(i.values(), lits);
}

ModelCheck is_model(const PartialInterpretation &i, const GroundProgram &gp) {
  for (const GroundClause &c : gp.clauses) {
    if (c.head >= i.size())
      throw Error(ErrorKind::UnknownAtom, "interpretation does not cover " +
                                              gp.atoms->key(c.head));
    for (const GroundLiteral &l : c.body)
      check_covered(i, l);
  }
  ModelCheck out;
  out.violated = first_violation(i.values(), gp);
  out.ok = !out.violated;
  return out;
}

bool leq(const PartialInterpretation &a, const PartialInterpretation &b,
         Ordering ord) {
  if (a.size() != b.size())
    return false;
  for (AtomId x = 0; x < a.size(); ++x)
    if (!leq(a[x], b[x], ord))
      return false;
  return true;
}

std::vector<PartialInterpretation>
minimal_models_bruteforce(const GroundProgram &gp, Ordering ord,
                          std::size_t limit) {
  std::size_t n = gp.atom_count();
  if (n > limit)
    throw Error(ErrorKind::TooLarge,
                std::to_string(n) + " atoms exceed the brute-force limit of " +
                    std::to_string(limit));
  std::int64_t total = 1;
  for (std::size_t i = 0; i < n; ++i)
    total *= 3;

  auto decode = [n](std::int64_t code, std::vector<TruthValue> &v) {
    for (std::size_t a = 0; a < n; ++a) {
      v[a] = static_cast<TruthValue>(code % 3);
      code /= 3;
    }
  };

  std::vector<std::int64_t> models;
#pragma omp parallel
  {
    std::vector<TruthValue> v(n);
    std::vector<std::int64_t> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t code = 0; code < total; ++code) {
      decode(code, v);
      if (!first_violation(v, gp))
        local.push_back(code);
    }
#pragma omp critical
    models.insert(models.end(), local.begin(), local.end());
  }
  std::sort(models.begin(), models.end());

  // A rank that strictly decreases along strict descents in the ordering:
  // sum of truth values, or number of defined atoms.
  std::vector<TruthValue> v(n);
  std::vector<std::pair<std::size_t, std::int64_t>> ranked;
  for (std::int64_t code : models) {
    decode(code, v);
    std::size_t rank = 0;
    for (TruthValue t : v)
      rank += ord == Ordering::Truth ? static_cast<std::size_t>(t)
                                     : (t != TruthValue::Zero);
    ranked.emplace_back(rank, code);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto &a, const auto &b) { return a.first < b.first; });

  std::vector<std::vector<TruthValue>> minimal;
  std::vector<std::int64_t> minimal_codes;
  for (const auto &[rank, code] : ranked) {
    decode(code, v);
    bool dominated = false;
    for (const auto &m : minimal) {
      bool below = true;
      for (std::size_t a = 0; a < n && below; ++a)
        below = leq(m[a], v[a], ord);
      if (below) {
        dominated = true;
        break;
      }
    }
    if (!dominated) {
      minimal.push_back(v);
      minimal_codes.push_back(code);
    }
  }
  std::sort(minimal_codes.begin(), minimal_codes.end());
  std::vector<PartialInterpretation> out;
  for (std::int64_t code : minimal_codes) {
    PartialInterpretation i(gp.atoms);
    decode(code, i.values());
    out.push_back(std::move(i));
  }
  return out;
}

nlohmann::ordered_json model_json(const PartialInterpretation &i) {
  nlohmann::ordered_json j;
  j["true"] = i.keys_with(TruthValue::True);
  j["false"] = i.keys_with(TruthValue::False);
  j["undefined"] = i.keys_with(TruthValue::Zero);
  return j;
}

} // namespace hop
