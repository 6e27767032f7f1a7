#pragma once

#include <span>
#include <vector>

#include "nashpg/policy.hpp"
#include "nashpg/rollout.hpp"

namespace nashpg {

// Gradient with the same shape as a SoftmaxPolicy's logits.
using PolicyGradient = std::vector<std::vector<double>>;

PolicyGradient zeros_like(const SoftmaxPolicy& policy);

// REINFORCE estimate of d E[R_i] / d logits with a batch-mean baseline:
// every step of `player` contributes (R_i - mean R_i) * (indicator - prob),
// averaged over the batch. Trajectories must have been sampled under
// `policy` (the score uses its current probabilities).
PolicyGradient estimate_policy_gradient(const std::vector<Trajectory>& batch, int player,
                                        const SoftmaxPolicy& policy);

// How sampled observations are averaged in the regularizer gradient.
enum class KlAveraging { VisitWeighted, UniformOverVisited };

// Analytic gradient of KL(softmax(logits) || ref) with respect to the
// logits: g_b = p_b * (log p_b - log ref_b - KL).
std::vector<double> kl_gradient(std::span<const double> logits, std::span<const double> ref);

// Gradient of the visitation-averaged KL to the reference policy, computed
// analytically at every infoset the player visited in the batch; unvisited
// infosets receive zero. Visit-weighted averaging matches sampling
// observations under the joint policy.
PolicyGradient estimate_kl_gradient(const std::vector<Trajectory>& batch, int player,
                                    const SoftmaxPolicy& policy, const SoftmaxPolicy& reference,
                                    KlAveraging averaging = KlAveraging::VisitWeighted);

}  // namespace nashpg
