#include "hop/wfs.hpp"

namespace hop {

namespace {

std::vector<TruthValue> lfp_values(const CompiledProgram &cp,
                                   const std::vector<TruthValue> &j,
                                   const WfsOptions &options,
                                   std::vector<std::vector<TruthValue>> *seq,
                                   std::size_t &steps) {
  std::vector<TruthValue> cur(cp.atoms, TruthValue::False);
  if (seq)
    seq->push_back(cur);
  steps = 0;

  auto check_rise = [](TruthValue before, TruthValue after, AtomId) {
    if (after < before)
      throw Error(ErrorKind::NotIncreasing,
                  "inner Theta chain decreased in the truth order");
  };

  if (!options.semi_naive) {
    std::vector<TruthValue> next;
    for (;;) {
      theta_kernel(cp, j, cur, next, options.exec);
      if (next == cur)
        return cur;
      for (AtomId a = 0; a < cp.atoms; ++a)
        check_rise(cur[a], next[a], a);
      cur.swap(next);
      ++steps;
      if (seq)
        seq->push_back(cur);
    }
  }

  std::vector<AtomId> dirty(cp.atoms);
  for (AtomId a = 0; a < cp.atoms; ++a)
    dirty[a] = a;
  std::vector<TruthValue> fresh;
  std::vector<std::uint8_t> mark(cp.atoms, 0);
  for (;;) {
    fresh.resize(dirty.size());
    const std::int64_t n = static_cast<std::int64_t>(dirty.size());
    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 256)
      for (std::int64_t x = 0; x < n; ++x)
        fresh[x] = theta_at(cp, j, cur, dirty[x]);
    } else {
      for (std::int64_t x = 0; x < n; ++x)
        fresh[x] = theta_at(cp, j, cur, dirty[x]);
    }
    std::vector<AtomId> changed;
    for (std::size_t x = 0; x < dirty.size(); ++x)
      if (fresh[x] != cur[dirty[x]]) {
        check_rise(cur[dirty[x]], fresh[x], dirty[x]);
        changed.push_back(dirty[x]);
      }
    if (changed.empty())
      return cur;
    for (std::size_t x = 0; x < dirty.size(); ++x)
      cur[dirty[x]] = fresh[x];
    ++steps;
    if (seq)
      seq->push_back(cur);
    dirty.clear();
    for (AtomId a : changed)
      for (std::uint32_t d = cp.dep_begin[a]; d < cp.dep_begin[a + 1]; ++d) {
        AtomId h = cp.dependents[d];
        if (!mark[h]) {
          mark[h] = 1;
          dirty.push_back(h);
        }
      }
    for (AtomId h : dirty)
      mark[h] = 0;
  }
}

} // namespace

PartialInterpretation theta_step(const PartialInterpretation &j,
                                 const PartialInterpretation &i,
                                 const GroundProgram &gp) {
  CompiledProgram cp(gp);
  PartialInterpretation out(gp.atoms);
  theta_kernel(cp, j.values(), i.values(), out.values(), Exec::Serial);
  return out;
}

PartialInterpretation theta_lfp(const PartialInterpretation &j,
                                const GroundProgram &gp,
                                const WfsOptions &options,
                                std::vector<PartialInterpretation> *sequence) {
  CompiledProgram cp(gp);
  std::vector<std::vector<TruthValue>> seq;
  std::size_t steps = 0;
  PartialInterpretation out(gp.atoms);
  out.values() =
      lfp_values(cp, j.values(), options, sequence ? &seq : nullptr, steps);
  if (sequence)
    for (auto &v : seq) {
      PartialInterpretation p(gp.atoms);
      p.values() = std::move(v);
      sequence->push_back(std::move(p));
    }
  return out;
}

WfsResult well_founded_model(const GroundProgram &gp,
                             const WfsOptions &options) {
  CompiledProgram cp(gp);
  std::vector<TruthValue> m(cp.atoms, TruthValue::Zero);
  ThetaTrace trace;
  auto wrap = [&](std::vector<TruthValue> v) {
    PartialInterpretation p(gp.atoms);
    p.values() = std::move(v);
    return p;
  };
  trace.stages.push_back(wrap(m));
  for (;;) {
    std::vector<std::vector<TruthValue>> seq;
    std::size_t steps = 0;
    std::vector<TruthValue> next =
        lfp_values(cp, m, options, options.keep_inner ? &seq : nullptr, steps);
    trace.inner_lengths.push_back(steps);
    if (options.keep_inner) {
      std::vector<PartialInterpretation> chain;
      for (auto &v : seq)
        chain.push_back(wrap(std::move(v)));
      trace.inner.push_back(std::move(chain));
    }
    if (next == m)
      break;
    for (AtomId a = 0; a < cp.atoms; ++a)
      if (!leq(m[a], next[a], Ordering::Fitting))
        throw Error(ErrorKind::NotIncreasing,
                    "stage M_" + std::to_string(trace.stages.size()) +
                        " is not above its predecessor in the Fitting order "
                        "at " +
                        gp.atoms->key(a));
    m = std::move(next);
    trace.stages.push_back(wrap(m));
  }
  trace.lambda = trace.stages.size() - 1;
  return {trace.stages.back(), std::move(trace)};
}

nlohmann::ordered_json trace_json(const ThetaTrace &trace) {
  nlohmann::ordered_json j;
  j["lambda"] = trace.lambda;
  j["inner_lengths"] = trace.inner_lengths;
  nlohmann::ordered_json stages = nlohmann::ordered_json::array();
  for (const PartialInterpretation &s : trace.stages)
    stages.push_back(model_json(s));
  j["stages"] = std::move(stages);
  return j;
}

} // namespace hop
