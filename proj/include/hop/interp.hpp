#pragma once

#include "hop/grounder.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hop {

/// Numeric order is the truth order: False < Zero < True.
enum class TruthValue : std::uint8_t { False = 0, Zero = 1, True = 2 };

TruthValue negate(TruthValue v);
/// "false", "0", "true"
std::string_view to_string(TruthValue v);

enum class Ordering { Truth, Fitting };

bool leq(TruthValue a, TruthValue b, Ordering ord);

/// Three-valued interpretation <T, F> over the atoms of a ground program.
/// Atoms in neither set have value 0.
class PartialInterpretation {
public:
  /// Every atom set to `fill`.
  explicit PartialInterpretation(std::shared_ptr<const AtomTable> atoms,
                                 TruthValue fill = TruthValue::Zero);
  /// Throws UnknownAtom for keys outside the table and Violation when a key
  /// is in both sets.
  static PartialInterpretation from_sets(std::shared_ptr<const AtomTable> atoms,
                                         const std::vector<std::string> &t,
                                         const std::vector<std::string> &f);

  const std::shared_ptr<const AtomTable> &atoms() const { return atoms_; }
  std::size_t size() const { return values_.size(); }

  TruthValue operator[](AtomId a) const { return values_[a]; }
  void set(AtomId a, TruthValue v) { values_[a] = v; }
  const std::vector<TruthValue> &values() const { return values_; }
  std::vector<TruthValue> &values() { return values_; }

  /// Throws UnknownAtom.
  TruthValue value_of(const std::string &key) const;

  /// Keys of the atoms with the given value, sorted.
  std::vector<std::string> keys_with(TruthValue v) const;
  bool is_total() const;

  friend bool operator==(const PartialInterpretation &a,
                         const PartialInterpretation &b) {
    return a.values_ == b.values_;
  }

private:
  std::shared_ptr<const AtomTable> atoms_;
  std::vector<TruthValue> values_;
};

/// Throws UnknownAtom when the literal's atom is outside the interpretation.
TruthValue value_of(const PartialInterpretation &i, const GroundLiteral &lit);
/// Minimum in the truth order; true for the empty conjunction.
TruthValue value_of_conj(const PartialInterpretation &i,
                         const std::vector<GroundLiteral> &lits);

struct ModelCheck {
  bool ok = true;
  std::optional<std::size_t> violated; // first clause with head < body
};

ModelCheck is_model(const PartialInterpretation &i, const GroundProgram &gp);

bool leq(const PartialInterpretation &a, const PartialInterpretation &b,
         Ordering ord);

/// All models of gp with no strictly smaller model under `ord`, found by
/// enumerating the 3^n interpretations. Throws TooLarge above `limit` atoms.
/// Results are ordered by encoding (first atom least significant).
std::vector<PartialInterpretation>
minimal_models_bruteforce(const GroundProgram &gp, Ordering ord,
                          std::size_t limit = 12);

/// {"true": [...], "false": [...], "undefined": [...]}, keys sorted.
nlohmann::ordered_json model_json(const PartialInterpretation &i);

} // namespace hop
