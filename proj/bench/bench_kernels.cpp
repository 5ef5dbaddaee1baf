#include "hop/kernels.hpp"
#include "hop/typecheck.hpp"
#include "hop/wfs.hpp"

#include <benchmark/benchmark.h>

#include <map>
#include <random>
#include <sstream>

using namespace hop;

namespace {

// A propositional program with n atoms, three clauses per atom and mixed
// positive and negative bodies. Fixed seed, so every run sees the same input.
const GroundProgram &workload(std::size_t n) {
  static std::map<std::size_t, GroundProgram> cache;
  auto it = cache.find(n);
  if (it != cache.end())
    return it->second;
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::size_t> atom(0, n - 1), len(0, 3), coin(0, 3);
  std::ostringstream text;
  for (std::size_t a = 0; a < n; ++a)
    text << "type p" << a << " : o.\n";
  for (std::size_t a = 0; a < n; ++a) {
    if (coin(rng) == 0)
      text << "p" << a << ".\n";
    for (int c = 0; c < 3; ++c) {
      text << "p" << a << " <- ";
      std::size_t body = 1 + len(rng);
      for (std::size_t l = 0; l < body; ++l)
        text << (l ? ", " : "") << (coin(rng) == 0 ? "~" : "") << "p" << atom(rng);
      text << ".\n";
    }
  }
  return cache.emplace(n, ground_instantiation(load_program(text.str()), 1)).first->second;
}

std::vector<TruthValue> random_values(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<TruthValue> v(n);
  for (TruthValue &x : v)
    x = static_cast<TruthValue>(rng() % 3);
  return v;
}

void BM_Theta(benchmark::State &state, Exec exec) {
  const GroundProgram &gp = workload(static_cast<std::size_t>(state.range(0)));
  CompiledProgram cp(gp);
  auto j = random_values(cp.atoms, 1), i = random_values(cp.atoms, 2);
  std::vector<TruthValue> out(cp.atoms);
  for (auto _ : state) {
    theta_kernel(cp, j, i, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cp.lits.size()));
}

void BM_Psi(benchmark::State &state, Exec exec) {
  const GroundProgram &gp = workload(static_cast<std::size_t>(state.range(0)));
  CompiledProgram cp(gp);
  auto j = random_values(cp.atoms, 3);
  std::vector<std::uint8_t> i(cp.atoms), out(cp.atoms);
  for (std::size_t a = 0; a < cp.atoms; ++a)
    i[a] = a % 2;
  for (auto _ : state) {
    psi_kernel(cp, j, i, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(cp.lits.size()));
}

void BM_Wfs(benchmark::State &state, bool semi_naive, Exec exec) {
  const GroundProgram &gp = workload(static_cast<std::size_t>(state.range(0)));
  WfsOptions o;
  o.semi_naive = semi_naive;
  o.exec = exec;
  for (auto _ : state) {
    WfsResult r = well_founded_model(gp, o);
    benchmark::DoNotOptimize(r.trace.lambda);
  }
}

} // namespace

BENCHMARK_CAPTURE(BM_Theta, serial, Exec::Serial)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_Theta, parallel, Exec::Parallel)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_Psi, serial, Exec::Serial)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_Psi, parallel, Exec::Parallel)->Range(1 << 10, 1 << 16);
BENCHMARK_CAPTURE(BM_Wfs, naive, false, Exec::Serial)->Range(1 << 8, 1 << 12);
BENCHMARK_CAPTURE(BM_Wfs, semi_naive, true, Exec::Serial)->Range(1 << 8, 1 << 12);
BENCHMARK_CAPTURE(BM_Wfs, semi_naive_parallel, true, Exec::Parallel)->Range(1 << 8, 1 << 12);

BENCHMARK_MAIN();
