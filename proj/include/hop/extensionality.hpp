#pragma once

#include "hop/grounder.hpp"
#include "hop/interp.hpp"
#include "hop/kernels.hpp"

#include <json.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace hop {

/// Unknown: some needed atom lies beyond the grounding budget.
enum class ExtResult { Equal, NotEqual, Unknown };

std::string_view to_string(ExtResult r);

enum class ModelKind { WellFounded, Perfect };

struct ExtOptions {
  std::size_t depth = 3;
  /// Atom-size budget for the demand grounding; 0 picks one large enough
  /// for every atom the check enumerates.
  std::size_t budget = 0;
  ModelKind model = ModelKind::WellFounded;
  Exec exec = Exec::Serial;
  /// Also compute the equivalence classes of every relation.
  bool relations = false;
  /// Extra atoms to seed the demand grounding with.
  std::vector<Expr> extra_roots;
};

/// A failure of E =~ E at type rho: the arguments (left, right) are related
/// at the argument type, yet applying E to them gives atoms with different
/// values.
struct ExtWitness {
  Type type;
  Expr term;
  Expr left;
  Expr right;
  Expr lhs_atom;
  Expr rhs_atom;
  TruthValue lhs_value;
  TruthValue rhs_value;
  bool replayed = false;
};

struct ExtClasses {
  Type type;
  std::vector<std::vector<Expr>> classes; // self-related elements only
};

struct ExtReport {
  enum class Verdict { Extensional, NonExtensional, Inconclusive };

  Verdict verdict = Verdict::Extensional;
  std::size_t depth = 0;
  std::vector<ExtWitness> witnesses;
  std::vector<std::pair<Type, Expr>> unknown;
  std::vector<ExtClasses> relations;
  std::size_t atoms = 0;
};

/// "extensional-at-depth-k", "non-extensional", "inconclusive-at-depth-k"
std::string verdict_text(const ExtReport &r);

/// Bounded extensional equality over a fixed program and depth. Atom values
/// come from a demand grounding seeded with every atom the relations can
/// ask about, solved once.
class ExtChecker {
public:
  ExtChecker(const Program &program, ExtOptions options);
  ~ExtChecker();

  /// Argument types reachable from the predicate constants' types.
  const std::vector<Type> &argument_types() const { return types_; }
  /// U^k at rho; empty where the universe is empty.
  const std::vector<Expr> &universe(const Type &rho);

  ExtResult equal(const Type &rho, const Expr &d, const Expr &d2);
  ExtReport reflexivity_check();

  /// Value of an atom in the model; nullopt when tainted by the budget.
  std::optional<TruthValue> value(const Expr &atom) const;

  const GroundProgram &grounding() const { return gp_; }
  const PartialInterpretation &model() const { return *model_; }

private:
  struct Outcome {
    ExtResult result;
    // For NotEqual: the first related argument pair and the atoms that differ.
    std::optional<Expr> left, right, lhs, rhs;
  };

  const Outcome &compare(const Type &rho, const Expr &d, const Expr &d2);
  bool replay(ExtWitness &w) const;

  const Program program_;
  ExtOptions options_;
  UniverseIndex index_;
  std::vector<Type> types_;
  GroundProgram gp_;
  std::unique_ptr<PartialInterpretation> model_;
  std::map<std::tuple<Type, std::string, std::string>, Outcome> memo_;
};

/// Reflexivity check in one call.
ExtReport reflexivity_check(const Program &program, const ExtOptions &options);

nlohmann::ordered_json report_json(const ExtReport &r, ModelKind model);

} // namespace hop
