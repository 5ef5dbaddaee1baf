#pragma once

#include "hop/grounder.hpp"
#include "hop/interp.hpp"

#include <cstdint>
#include <vector>

namespace hop {

enum class Exec { Serial, Parallel };

/// Flat, head-grouped copy of a ground program for the operator kernels.
struct CompiledProgram {
  explicit CompiledProgram(const GroundProgram &gp);

  std::size_t atoms = 0;
  std::vector<std::uint32_t> clause_begin; // atom a: clauses [a], [a+1]
  std::vector<std::uint32_t> lit_begin;    // clause c: literals [c], [c+1]
  std::vector<GroundLiteral> lits;
  std::vector<std::uint8_t> pinned;        // frontier atoms, held at 0
  // Heads of clauses with atom a as a positive body literal.
  std::vector<std::uint32_t> dep_begin;
  std::vector<AtomId> dependents;
};

/// Theta_J(I) at one atom.
TruthValue theta_at(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                    const std::vector<TruthValue> &i, AtomId a);

/// out = Theta_J(I) over every atom. The parallel kernel splits the atoms
/// across OpenMP threads; both produce identical results.
void theta_kernel(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                  const std::vector<TruthValue> &i, std::vector<TruthValue> &out,
                  Exec exec);

/// Psi_J(I) at one atom; I is a membership vector.
bool psi_at(const CompiledProgram &cp, const std::vector<TruthValue> &j,
            const std::vector<std::uint8_t> &i, AtomId a);

void psi_kernel(const CompiledProgram &cp, const std::vector<TruthValue> &j,
                const std::vector<std::uint8_t> &i,
                std::vector<std::uint8_t> &out, Exec exec);

} // namespace hop
