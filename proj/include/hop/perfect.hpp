#pragma once

#include "hop/expr.hpp"
#include "hop/interp.hpp"
#include "hop/kernels.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hop {

/// q -> p: the clause for p has a body literal headed by q (or by a
/// predicate variable whose type q's type is >= to, named in `via`).
/// Strict edges come from negative literals.
struct DependencyEdge {
  std::string from;
  std::string to;
  bool strict = false;
  std::string via;
  std::size_t clause = 0;
};

/// Ordered partition S_1 .. S_r of the predicate constants.
struct Stratification {
  std::vector<std::vector<std::string>> strata;
  std::map<std::string, std::size_t> stratum; // 1-based

  static Stratification from_strata(std::vector<std::vector<std::string>> s);
  std::size_t size() const { return strata.size(); }
};

struct StratifyResult {
  std::optional<Stratification> stratification;
  /// When unstratifiable: a dependency cycle starting with a strict edge.
  std::vector<DependencyEdge> cycle;

  bool ok() const { return stratification.has_value(); }
};

std::vector<DependencyEdge> dependency_edges(const Program &program);

/// The least stratification: each predicate constant at the smallest index
/// the dependency edges allow.
StratifyResult stratify(const Program &program);

/// True when every dependency edge respects `s` and every predicate constant
/// has a stratum.
bool is_valid_stratification(const Program &program, const Stratification &s);

/// Strata of ground atoms, taken from their leftmost predicate constant.
struct LocalStratification {
  std::vector<std::size_t> stratum; // per atom, 1-based
  std::size_t levels = 0;
};

/// Throws Violation when some ground clause breaks local stratification.
LocalStratification localize(const Stratification &s, const GroundProgram &gp);

/// Psi_J(I) as a membership vector.
std::vector<std::uint8_t> psi_step(const PartialInterpretation &j,
                                   const std::vector<std::uint8_t> &i,
                                   const GroundProgram &gp);

struct PerfectResult {
  PartialInterpretation model;
  std::vector<PartialInterpretation> stages; // N_0 .. N_r
  std::vector<std::size_t> inner_lengths;    // Psi steps per stage
  std::size_t strata_used = 0;
};

/// N_0 = <{}, {}>, N_(a+1) = <Psi_(N_a) up to omega, B_(a+1) - that>, where
/// B_a collects the atoms of strata 1..a; returns N_r. Throws NotIncreasing
/// if the stages fail to rise in the Fitting order.
PerfectResult perfect_model(const GroundProgram &gp,
                            const LocalStratification &ls,
                            Exec exec = Exec::Serial);

/// {"strata": [[...], ...]} or {"unstratifiable": {"cycle": [...]}}
nlohmann::ordered_json stratify_json(const Program &program,
                                     const StratifyResult &r);

} // namespace hop
