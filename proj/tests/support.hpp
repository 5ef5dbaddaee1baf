#pragma once

// Generators and independent oracles shared by the unit, property and
// acceptance tests. Nothing here calls into the kernels or the wfs/perfect
// engines, so the oracles can be compared against them.

#include "hop/grounder.hpp"
#include "hop/interp.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace hoptest {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::size_t below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(gen_);
  }
  bool chance(double p) { return std::bernoulli_distribution(p)(gen_); }
  template <class T> const T &pick(const std::vector<T> &v) {
    return v[below(v.size())];
  }
  std::mt19937_64 &engine() { return gen_; }

private:
  std::mt19937_64 gen_;
};

/// A random well-typed program as source text: declarations for several
/// predicate types (some higher-order), constants, an optional unary
/// function symbol, clauses with positive, negative and equality literals.
std::string random_program(Rng &rng, bool function_symbols = true);

/// A random stratified, function-free program: at most three strata, at
/// most two higher-order predicates whose arguments have type i -> o.
/// Negation only looks at strictly lower strata; higher-order predicates
/// sit above every i -> o predicate they can receive.
std::string random_stratified_program(Rng &rng);

/// A random propositional program over atoms p0..p(n-1), as source text.
std::string random_propositional_program(Rng &rng, std::size_t atoms,
                                         std::size_t clauses);

/// Random bytes biased towards the language's tokens.
std::string random_noise(Rng &rng);
/// A valid program with a few token-level edits.
std::string mutate(Rng &rng, const std::string &text);

/// Every ground term of type rho with at most k symbols, by direct
/// enumeration of application spines; sorted by (size, text).
std::vector<std::string> brute_force_terms(const hop::Program &p,
                                           const hop::Type &rho, std::size_t k);

/// Least model of the positive part of gp by naive immediate consequence
/// (negative literals are treated as false).
std::vector<bool> classical_least_model(const hop::GroundProgram &gp);

/// Theta_J(I) written directly from the definition over GroundProgram.
std::vector<hop::TruthValue>
reference_theta(const hop::GroundProgram &gp,
                const std::vector<hop::TruthValue> &j,
                const std::vector<hop::TruthValue> &i);

/// Well-founded model by the alternating fixpoint of the Gelfond-Lifschitz
/// operator. Frontier atoms are left undefined.
hop::PartialInterpretation alternating_fixpoint(const hop::GroundProgram &gp);

/// Stratified least model, stratum by stratum, as an independent check of
/// the perfect model. `stratum` is per atom, 1-based.
hop::PartialInterpretation
iterated_least_model(const hop::GroundProgram &gp,
                     const std::vector<std::size_t> &stratum);

/// Files under the bundled corpus directory, sorted.
std::vector<std::string> corpus_files();
std::string read_file(const std::string &path);

/// A corpus program with its grounding. Header comments pick the grounding:
/// `% depth: k` (default 1) and `% roots: a1, a2` (demand grounding from
/// those atoms; without it, the full instantiation at depth k).
struct CorpusCase {
  std::string name;
  hop::Program program;
  std::size_t depth = 1;
  std::vector<std::string> roots;
  hop::GroundProgram ground;
};

CorpusCase load_case(const std::string &path);
std::vector<CorpusCase> load_corpus();

} // namespace hoptest
