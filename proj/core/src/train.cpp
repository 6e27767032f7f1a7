#include "nashpg/train.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "nashpg/random.hpp"

namespace nashpg {

long TrainConfig::resolved_eval_every() const {
  if (eval_every > 0) return eval_every;
  return std::max<long>(1, total_steps() / 50);
}

void TrainConfig::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(eta >= 0.0)) throw std::invalid_argument("eta must be nonnegative");
  if (inner_iters < 1) throw std::invalid_argument("inner_iters must be >= 1");
  if (outer_iters < 1) throw std::invalid_argument("outer_iters must be >= 1");
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  if (eval_every < 0) throw std::invalid_argument("eval_every must be nonnegative");
  if (anneal) {
    if (!(anneal->alpha_final > 0.0))
      throw std::invalid_argument("anneal alpha_final must be positive");
    if (anneal->eta_final && !(*anneal->eta_final >= 0.0))
      throw std::invalid_argument("anneal eta_final must be nonnegative");
  }
}

void TrainRecord::write_csv(std::ostream& out) const {
  out << "step,exploitability,alpha,eta\n";
  for (const auto& cp : checkpoints)
    out << cp.step << ',' << cp.exploitability << ',' << cp.alpha << ',' << cp.eta << '\n';
}

namespace {

void apply_update(SoftmaxPolicy& policy, const PolicyGradient& payoff_grad,
                  const PolicyGradient& kl_grad, double eta, double alpha) {
  for (std::size_t i = 0; i < policy.logits.size(); ++i)
    for (std::size_t a = 0; a < policy.logits[i].size(); ++a)
      policy.logits[i][a] += eta * (payoff_grad[i][a] - alpha * kl_grad[i][a]);
}

TrainRecord train_loop(const ExtensiveFormGame& game, const TrainConfig& cfg,
                       bool refresh_reference) {
  cfg.validate();
  if (!refresh_reference && !cfg.anneal)
    throw std::invalid_argument("train_anneal requires an anneal schedule");

  JointPolicy policies = zero_joint_policy(game);
  JointPolicy reference = policies;
  std::mt19937_64 rng(split_seed(cfg.seed, 0x7261696e));

  const long total = cfg.total_steps();
  const long eval_every = cfg.resolved_eval_every();
  const double alpha0 = cfg.alpha;
  const double alpha1 = cfg.anneal ? cfg.anneal->alpha_final : cfg.alpha;
  const double eta0 = cfg.eta;
  const double eta1 = cfg.anneal && cfg.anneal->eta_final ? *cfg.anneal->eta_final : cfg.eta;

  TrainRecord record;
  long step = 0;
  for (int t = 0; t < cfg.outer_iters; ++t) {
    for (int k = 0; k < cfg.inner_iters; ++k) {
      double alpha = cfg.alpha;
      double eta = cfg.eta;
      if (!refresh_reference) {
        const double frac = total > 1 ? static_cast<double>(step) / (total - 1) : 1.0;
        alpha = alpha0 + (alpha1 - alpha0) * frac;
        eta = eta0 + (eta1 - eta0) * frac;
      }

      const std::vector<Trajectory> batch =
          sample_trajectories(game, policies, cfg.batch_size, rng);
      for (int p = 0; p < kNumPlayers; ++p) {
        const PolicyGradient g = estimate_policy_gradient(batch, p, policies[p]);
        const PolicyGradient g_reg =
            estimate_kl_gradient(batch, p, policies[p], reference[p], cfg.kl_averaging);
        apply_update(policies[p], g, g_reg, eta, alpha);
      }

      ++step;
      if (step % eval_every == 0 || step == total) {
        if (!record.checkpoints.empty() && record.checkpoints.back().step == step) continue;
        TrainCheckpoint cp;
        cp.step = step;
        cp.exploitability = exploitability(game, behavioral_from_policies(game, policies));
        cp.alpha = alpha;
        cp.eta = eta;
        cp.policies = policies;
        record.checkpoints.push_back(std::move(cp));
      }
    }
    if (refresh_reference) reference = policies;
  }
  return record;
}

}  // namespace

TrainRecord train_nashpg(const ExtensiveFormGame& game, const TrainConfig& cfg) {
  return train_loop(game, cfg, true);
}

TrainRecord train_anneal(const ExtensiveFormGame& game, const TrainConfig& cfg) {
  return train_loop(game, cfg, false);
}

}  // namespace nashpg
