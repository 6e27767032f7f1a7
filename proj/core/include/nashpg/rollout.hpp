#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "nashpg/efg.hpp"
#include "nashpg/policy.hpp"

namespace nashpg {

struct TrajectoryStep {
  int player = 0;
  int infoset = 0;
  int action = 0;
  double log_prob = 0.0;  // log probability of the action when sampled
};

// One root-to-terminal playout. The payoff is player 0's terminal value.
struct Trajectory {
  std::vector<TrajectoryStep> steps;
  double payoff = 0.0;
};

Trajectory sample_one(const ExtensiveFormGame& game, const JointPolicy& policies,
                      std::mt19937_64& rng);

// n independent rollouts under chance and both policies, reproducible
// for a fixed seed.
std::vector<Trajectory> sample_trajectories(const ExtensiveFormGame& game,
                                            const JointPolicy& policies, int n,
                                            std::uint64_t seed);

std::vector<Trajectory> sample_trajectories(const ExtensiveFormGame& game,
                                            const JointPolicy& policies, int n,
                                            std::mt19937_64& rng);

}  // namespace nashpg
