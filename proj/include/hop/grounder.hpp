#pragma once

#include "hop/expr.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hop {

using AtomId = std::uint32_t;

/// Interning table for ground atoms, keyed by canonical text. Ids are dense
/// and assigned in first-seen order.
class AtomTable {
public:
  AtomId intern(const Expr &atom);
  /// False when the key is absent.
  bool find(const std::string &key, AtomId &out) const;
  const Expr &atom(AtomId id) const { return atoms_[id]; }
  const std::string &key(AtomId id) const { return atoms_[id].key(); }
  std::size_t size() const { return atoms_.size(); }

private:
  std::vector<Expr> atoms_;
  std::unordered_map<std::string, AtomId> index_;
};

/// Body literal of a ground clause. Equality literals are resolved while
/// grounding and survive only as the constants True and False.
struct GroundLiteral {
  enum class Kind : std::uint8_t { Pos, Neg, True, False };
  Kind kind;
  AtomId atom = 0; // Pos and Neg only

  friend bool operator==(const GroundLiteral &, const GroundLiteral &) =
      default;
};

struct GroundClause {
  AtomId head;
  std::vector<GroundLiteral> body;
  std::size_t source;       // index into Program::clauses
  Substitution theta;       // source clause instantiated by theta gives this
};

/// A finite ground program: clauses over an atom table B_P.
///
/// Atoms larger than the grounding budget are not expanded. They stay in the
/// table as frontier atoms with no clauses and are held at 0 by the
/// evaluators; every atom whose value can depend on one is tainted.
struct GroundProgram {
  std::shared_ptr<AtomTable> atoms = std::make_shared<AtomTable>();
  std::vector<GroundClause> clauses;
  std::vector<std::vector<std::size_t>> by_head; // atom -> clause indices
  std::vector<bool> frontier;                    // atom -> beyond budget
  std::vector<bool> tainted;                     // atom -> depends on frontier

  std::size_t atom_count() const { return atoms->size(); }
  bool has_frontier() const;

  /// Rebuilds by_head and tainted and sizes frontier to the atom table.
  void index();

  std::string literal_text(const GroundLiteral &lit) const;
  std::string clause_text(const GroundClause &c) const;
  /// One ground clause per line, canonical syntax, in clause order.
  std::string dump() const;
};

/// Enumerates U^k_{P,rho}: ground terms of type rho with at most k symbol
/// occurrences, built from the program's constants, function symbols and
/// predicate constants. Order: size, then canonical text.
class UniverseIndex {
public:
  UniverseIndex(const Program &program, std::size_t k);

  std::size_t bound() const { return k_; }
  /// Throws EmptyUniverse for type i when the program has no individual
  /// constants. Other empty universes are returned as empty.
  const std::vector<Expr> &terms(const Type &rho);
  /// Terms of type rho with exactly n symbols, in canonical text order.
  const std::vector<Expr> &terms_of_size(const Type &rho, std::size_t n);

private:
  const Program &program_;
  std::size_t k_;
  std::vector<Type> operator_types_; // suffixes of predicate-constant types
  std::map<std::pair<Type, std::size_t>, std::vector<Expr>> by_size_;
  std::map<Type, std::vector<Expr>> upto_;
};

std::vector<Expr> herbrand_universe(const Program &program, const Type &rho,
                                    std::size_t k);

/// Instantiates clause `source` with a substitution covering all its
/// variables, interning atoms into gp's table (clause is not appended).
GroundClause instantiate(const Program &program, std::size_t source,
                         const Substitution &theta, AtomTable &atoms);

/// Every ground instance whose substituted terms come from U^k.
GroundProgram ground_instantiation(const Program &program, std::size_t k);

/// Default atom-size budget for demand grounding at depth k.
std::size_t default_budget(std::size_t k);

/// Dependency closure from the roots: for every reachable atom, all ground
/// instances whose head is that atom (head formals bound by matching, other
/// variables ranging over U^k), with their body atoms reachable in turn.
/// Atoms with more than `budget` symbols become frontier atoms.
GroundProgram relevant_grounding(const Program &program,
                                 const std::vector<Expr> &roots, std::size_t k,
                                 std::size_t budget);
inline GroundProgram relevant_grounding(const Program &program,
                                        const std::vector<Expr> &roots,
                                        std::size_t k) {
  return relevant_grounding(program, roots, k, default_budget(k));
}

} // namespace hop
