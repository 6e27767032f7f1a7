#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nashpg/efg.hpp"

namespace nashpg {

// Tabular softmax policy for one player: a logit vector per infoset. The
// induced distributions are strictly interior for any finite logits.
struct SoftmaxPolicy {
  std::vector<std::vector<double>> logits;

  std::vector<double> probs(int infoset) const;

  static SoftmaxPolicy zeros(const ExtensiveFormGame& game, int player);
};

using JointPolicy = std::array<SoftmaxPolicy, 2>;

JointPolicy zero_joint_policy(const ExtensiveFormGame& game);

std::vector<double> softmax(std::span<const double> logits);

// Probabilities clamped to the interior floor, for exact evaluation.
BehavioralProfile behavioral_from_policies(const ExtensiveFormGame& game,
                                           const JointPolicy& policies);

// Checkpoint format: one file per player ("<prefix>.p1.policy" and
// "<prefix>.p2.policy"), lines "infoset_id action_index logit".
void save_checkpoint(const std::string& prefix, const JointPolicy& policies);
JointPolicy load_checkpoint(const std::string& prefix, const ExtensiveFormGame& game);

void write_policy(std::ostream& out, const SoftmaxPolicy& policy);
SoftmaxPolicy read_policy(std::istream& in, const ExtensiveFormGame& game, int player,
                          const std::string& source = "<stream>");

}  // namespace nashpg
