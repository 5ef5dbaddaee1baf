#pragma once

#include "hop/interp.hpp"
#include "hop/kernels.hpp"

#include <json.hpp>

#include <vector>

namespace hop {

/// Stages M_0 .. M_lambda of the outer iteration, with the length of each
/// inner Theta iteration (steps until Theta_J^n = Theta_J^(n+1)).
struct ThetaTrace {
  std::vector<PartialInterpretation> stages;
  std::vector<std::size_t> inner_lengths;
  /// Full inner sequences Theta_J^0 .. Theta_J^omega; kept on request.
  std::vector<std::vector<PartialInterpretation>> inner;
  std::size_t lambda = 0;
};

struct WfsOptions {
  Exec exec = Exec::Serial;
  /// Recompute only atoms whose positive body atoms changed in the last step.
  bool semi_naive = true;
  bool keep_inner = false;
};

struct WfsResult {
  PartialInterpretation model;
  ThetaTrace trace;
};

PartialInterpretation theta_step(const PartialInterpretation &j,
                                 const PartialInterpretation &i,
                                 const GroundProgram &gp);

/// Theta_J up to omega, starting from <{}, B_P>. When `sequence` is given it
/// receives every element of the chain, the start included.
PartialInterpretation theta_lfp(const PartialInterpretation &j,
                                const GroundProgram &gp,
                                const WfsOptions &options = {},
                                std::vector<PartialInterpretation> *sequence =
                                    nullptr);

/// M_0 = <{}, {}>, M_(a+1) = Theta_(M_a) up to omega, until M_lambda is a
/// fixpoint. Throws NotIncreasing if an inner chain fails to rise in the
/// truth order or the outer chain fails to rise in the Fitting order.
WfsResult well_founded_model(const GroundProgram &gp,
                             const WfsOptions &options = {});

nlohmann::ordered_json trace_json(const ThetaTrace &trace);

} // namespace hop
