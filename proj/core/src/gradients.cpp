#include "nashpg/gradients.hpp"

#include <cmath>
#include <stdexcept>

namespace nashpg {

PolicyGradient zeros_like(const SoftmaxPolicy& policy) {
  PolicyGradient g;
  g.reserve(policy.logits.size());
  for (const auto& row : policy.logits) g.emplace_back(row.size(), 0.0);
  return g;
}

PolicyGradient estimate_policy_gradient(const std::vector<Trajectory>& batch, int player,
                                        const SoftmaxPolicy& policy) {
  PolicyGradient grad = zeros_like(policy);
  if (batch.empty()) return grad;

  const double sign = player == 0 ? 1.0 : -1.0;
  double baseline = 0.0;
  for (const Trajectory& traj : batch) baseline += sign * traj.payoff;
  baseline /= static_cast<double>(batch.size());

  for (const Trajectory& traj : batch) {
    const double advantage = sign * traj.payoff - baseline;
    if (advantage == 0.0) continue;
    for (const TrajectoryStep& step : traj.steps) {
      if (step.player != player) continue;
      const std::vector<double> p = policy.probs(step.infoset);
      std::vector<double>& row = grad[step.infoset];
      for (std::size_t b = 0; b < row.size(); ++b)
        row[b] += advantage * ((static_cast<int>(b) == step.action ? 1.0 : 0.0) - p[b]);
    }
  }
  const double inv = 1.0 / static_cast<double>(batch.size());
  for (auto& row : grad)
    for (double& v : row) v *= inv;
  return grad;
}

std::vector<double> kl_gradient(std::span<const double> logits, std::span<const double> ref) {
  if (logits.size() != ref.size())
    throw std::invalid_argument("kl_gradient: size mismatch");
  const std::vector<double> p = softmax(logits);
  double kl = 0.0;
  std::vector<double> diff(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) {
    if (!(ref[a] > 0.0)) throw std::domain_error("kl_gradient: reference must be interior");
    diff[a] = std::log(p[a]) - std::log(ref[a]);
    kl += p[a] * diff[a];
  }
  std::vector<double> g(p.size());
  for (std::size_t a = 0; a < p.size(); ++a) g[a] = p[a] * (diff[a] - kl);
  return g;
}

PolicyGradient estimate_kl_gradient(const std::vector<Trajectory>& batch, int player,
                                    const SoftmaxPolicy& policy, const SoftmaxPolicy& reference,
                                    KlAveraging averaging) {
  if (reference.logits.size() != policy.logits.size())
    throw std::invalid_argument("estimate_kl_gradient: reference does not cover every infoset");
  PolicyGradient grad = zeros_like(policy);

  std::vector<long> visits(policy.logits.size(), 0);
  long total_visits = 0;
  for (const Trajectory& traj : batch)
    for (const TrajectoryStep& step : traj.steps)
      if (step.player == player) {
        ++visits[step.infoset];
        ++total_visits;
      }
  if (total_visits == 0) return grad;

  long visited_count = 0;
  for (long v : visits)
    if (v > 0) ++visited_count;

  for (std::size_t i = 0; i < visits.size(); ++i) {
    if (visits[i] == 0) continue;
    const std::vector<double> ref_probs = softmax(reference.logits[i]);
    const std::vector<double> g = kl_gradient(policy.logits[i], ref_probs);
    const double w = averaging == KlAveraging::VisitWeighted
                         ? static_cast<double>(visits[i]) / static_cast<double>(total_visits)
                         : 1.0 / static_cast<double>(visited_count);
    for (std::size_t a = 0; a < g.size(); ++a) grad[i][a] = w * g[a];
  }
  return grad;
}

}  // namespace nashpg
