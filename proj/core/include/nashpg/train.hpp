#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "nashpg/best_response.hpp"
#include "nashpg/gradients.hpp"
#include "nashpg/policy.hpp"
#include "nashpg/solver.hpp"

namespace nashpg {

struct TrainConfig {
  double alpha = 0.2;
  double eta = 0.05;
  int inner_iters = 1000;  // K updates between reference refreshes
  int outer_iters = 50;    // T reference refreshes
  int batch_size = 128;    // trajectories per update
  std::uint64_t seed = 0;
  std::optional<AnnealSchedule> anneal;
  long eval_every = 0;  // 0 picks inner*outer/50
  KlAveraging kl_averaging = KlAveraging::VisitWeighted;

  long total_steps() const { return static_cast<long>(inner_iters) * outer_iters; }
  long resolved_eval_every() const;
  void validate() const;  // throws std::invalid_argument
};

struct TrainCheckpoint {
  long step = 0;
  double exploitability = 0.0;
  double alpha = 0.0;  // values in effect at this step
  double eta = 0.0;
  JointPolicy policies;
};

struct TrainRecord {
  std::vector<TrainCheckpoint> checkpoints;

  // Columns: step, exploitability, alpha, eta.
  void write_csv(std::ostream& out) const;
};

// Self-play regularized policy gradient. Each update samples one batch under
// the joint policy; both players estimate payoff and KL-to-reference
// gradients from it and step logits by eta * (g - alpha * g_reg). Reference
// policies snapshot the current policies after every inner_iters updates.
// Exact exploitability is recorded every eval_every steps.
TrainRecord train_nashpg(const ExtensiveFormGame& game, const TrainConfig& cfg);

// Ablation: the reference stays uniform and alpha (optionally eta) decays
// linearly over the full step budget; no reference refresh. Requires
// cfg.anneal.
TrainRecord train_anneal(const ExtensiveFormGame& game, const TrainConfig& cfg);

}  // namespace nashpg
