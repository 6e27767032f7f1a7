#include <benchmark/benchmark.h>

#include <random>

#include "nashpg/best_response.hpp"
#include "nashpg/efg_nfg.hpp"
#include "nashpg/games.hpp"
#include "nashpg/gradients.hpp"
#include "nashpg/rollout.hpp"
#include "nashpg/solver.hpp"

using namespace nashpg;

namespace {

const NormalFormGame& kuhn_reduction() {
  static const NormalFormGame game = efg_to_nfg(build_kuhn()).game;
  return game;
}

const ExtensiveFormGame& leduc() {
  static const ExtensiveFormGame game = build_leduc();
  return game;
}

void BM_MmdStepKuhn64(benchmark::State& state) {
  const NormalFormGame& game = kuhn_reduction();
  const BregmanGeometry geom;
  SolverConfig cfg;
  MixedProfile z = uniform_profile(game.rows, game.cols);
  const MixedProfile rho = z;
  for (auto _ : state) {
    z = mmd_step(game, geom, z, rho, cfg);
    benchmark::DoNotOptimize(z.x.data());
  }
}
BENCHMARK(BM_MmdStepKuhn64);

void BM_SolveRegularizedViKuhn64(benchmark::State& state) {
  const NormalFormGame& game = kuhn_reduction();
  const BregmanGeometry geom;
  SolverConfig cfg;
  cfg.inner_tol = 1e-6;
  const MixedProfile rho = uniform_profile(game.rows, game.cols);
  for (auto _ : state) {
    InnerSolveDiagnostics diag;
    MixedProfile m = solve_regularized_vi(game, geom, rho, cfg, &diag);
    benchmark::DoNotOptimize(m.x.data());
  }
}
BENCHMARK(BM_SolveRegularizedViKuhn64);

void BM_ExpectedPayoffLeduc(benchmark::State& state) {
  const ExtensiveFormGame& game = leduc();
  const BehavioralProfile prof = uniform_behavioral(game);
  for (auto _ : state) {
    const double v = expected_payoff(game, prof);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ExpectedPayoffLeduc);

void BM_ExploitabilityLeduc(benchmark::State& state) {
  const ExtensiveFormGame& game = leduc();
  const BehavioralProfile prof = uniform_behavioral(game);
  for (auto _ : state) {
    const double v = exploitability(game, prof);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ExploitabilityLeduc);

void BM_SampleBatchKuhn(benchmark::State& state) {
  const ExtensiveFormGame game = build_kuhn();
  const JointPolicy joint = zero_joint_policy(game);
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    auto batch = sample_trajectories(game, joint, static_cast<int>(state.range(0)), rng);
    benchmark::DoNotOptimize(batch.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleBatchKuhn)->Arg(128)->Arg(512);

void BM_PolicyGradientKuhn(benchmark::State& state) {
  const ExtensiveFormGame game = build_kuhn();
  const JointPolicy joint = zero_joint_policy(game);
  const auto batch = sample_trajectories(game, joint, 512, std::uint64_t{1});
  for (auto _ : state) {
    PolicyGradient g = estimate_policy_gradient(batch, 0, joint[0]);
    benchmark::DoNotOptimize(g.data());
  }
}
BENCHMARK(BM_PolicyGradientKuhn);

}  // namespace

BENCHMARK_MAIN();
