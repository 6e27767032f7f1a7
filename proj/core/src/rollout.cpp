#include "nashpg/rollout.hpp"

#include <cmath>
#include <stdexcept>

#include "nashpg/random.hpp"

namespace nashpg {

Trajectory sample_one(const ExtensiveFormGame& game, const JointPolicy& policies,
                      std::mt19937_64& rng) {
  Trajectory traj;
  int idx = game.root;
  for (;;) {
    const EfgNode& n = game.nodes[idx];
    if (n.kind == NodeKind::Terminal) {
      traj.payoff = n.payoff;
      return traj;
    }
    if (n.kind == NodeKind::Chance) {
      idx = n.children[sample_index(n.chance_probs, rng)];
      continue;
    }
    const std::vector<double> dist = policies[n.player].probs(n.infoset);
    const int a = sample_index(dist, rng);
    traj.steps.push_back({n.player, n.infoset, a, std::log(dist[a])});
    idx = n.children[a];
  }
}

std::vector<Trajectory> sample_trajectories(const ExtensiveFormGame& game,
                                            const JointPolicy& policies, int n,
                                            std::mt19937_64& rng) {
  if (n < 0) throw std::invalid_argument("sample_trajectories: negative count");
  for (int p = 0; p < kNumPlayers; ++p)
    if (policies[p].logits.size() != game.infoset_num_actions[p].size())
      throw std::invalid_argument("sample_trajectories: policy does not cover every infoset");
  std::vector<Trajectory> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(sample_one(game, policies, rng));
  return out;
}

std::vector<Trajectory> sample_trajectories(const ExtensiveFormGame& game,
                                            const JointPolicy& policies, int n,
                                            std::uint64_t seed) {
  std::mt19937_64 rng(split_seed(seed, 0));
  return sample_trajectories(game, policies, n, rng);
}

}  // namespace nashpg
