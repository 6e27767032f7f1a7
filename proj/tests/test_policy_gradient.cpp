#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "nashpg/games.hpp"
#include "nashpg/gradients.hpp"
#include "nashpg/policy.hpp"
#include "nashpg/rollout.hpp"
#include "nashpg/train.hpp"
#include "test_util.hpp"

using namespace nashpg;
using testutil::cosine;
using testutil::ExactGradientOracle;

namespace {

ExtensiveFormGame two_arm_bandit(double payoff0, double payoff1) {
  EfgBuilder b;
  const int t0 = b.add_terminal(payoff0);
  const int t1 = b.add_terminal(payoff1);
  const int root = b.add_decision(0, "arm", {t0, t1});
  return b.build("bandit", root);
}

JointPolicy seeded_policy(const ExtensiveFormGame& game, std::uint64_t seed, double scale) {
  JointPolicy joint = zero_joint_policy(game);
  std::mt19937_64 rng(seed);
  for (int p = 0; p < 2; ++p)
    for (auto& row : joint[p].logits)
      for (double& v : row) v = scale * (2.0 * uniform_double(rng) - 1.0);
  return joint;
}

}  // namespace

TEST_CASE("softmax policy: zero logits induce uniform interior distributions") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = zero_joint_policy(kuhn);
  const BehavioralProfile prof = behavioral_from_policies(kuhn, joint);
  validate_behavioral(kuhn, prof, /*require_interior=*/true);
  for (const auto& dist : prof.policy[0])
    for (double p : dist) CHECK(p == doctest::Approx(0.5));
}

TEST_CASE("sampling: deterministic given the seed, empty at n=0") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = seeded_policy(kuhn, 5, 0.8);
  const auto a = sample_trajectories(kuhn, joint, 500, std::uint64_t{9});
  const auto b = sample_trajectories(kuhn, joint, 500, std::uint64_t{9});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].payoff == b[i].payoff);
    REQUIRE(a[i].steps.size() == b[i].steps.size());
    for (std::size_t s = 0; s < a[i].steps.size(); ++s) {
      CHECK(a[i].steps[s].action == b[i].steps[s].action);
      CHECK(a[i].steps[s].log_prob == b[i].steps[s].log_prob);
    }
  }
  CHECK(sample_trajectories(kuhn, joint, 0, std::uint64_t{9}).empty());
}

TEST_CASE("sampling: near-deterministic policies only vary with chance") {
  const ExtensiveFormGame kuhn = build_kuhn();
  JointPolicy joint = zero_joint_policy(kuhn);
  std::mt19937_64 rng(6);
  for (int p = 0; p < 2; ++p)
    for (auto& row : joint[p].logits) {
      const std::size_t pick = rng() % row.size();
      for (std::size_t a = 0; a < row.size(); ++a) row[a] = a == pick ? 20.0 : -20.0;
    }
  for (const Trajectory& traj : sample_trajectories(kuhn, joint, 300, std::uint64_t{4})) {
    for (const TrajectoryStep& step : traj.steps) {
      const auto& row = joint[step.player].logits[step.infoset];
      CHECK(row[step.action] == 20.0);
    }
  }
}

TEST_CASE("sampling: empirical mean payoff agrees with exact evaluation") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = seeded_policy(kuhn, 8, 1.0);
  const double exact = expected_payoff(kuhn, behavioral_from_policies(kuhn, joint));

  const int n = 100000;
  const auto batch = sample_trajectories(kuhn, joint, n, std::uint64_t{10});
  double sum = 0.0, sum_sq = 0.0;
  for (const Trajectory& t : batch) {
    sum += t.payoff;
    sum_sq += t.payoff * t.payoff;
  }
  const double mean = sum / n;
  const double se = std::sqrt((sum_sq / n - mean * mean) / n);
  CHECK(std::abs(mean - exact) < 3.0 * se);
}

TEST_CASE("policy gradient: constant payoffs with the mean baseline cancel exactly") {
  NormalFormGame constant;
  constant.rows = 2;
  constant.cols = 2;
  constant.payoff = {0.75, 0.75, 0.75, 0.75};  // representable: the mean is exact
  const ExtensiveFormGame g = efg_from_matrix(constant, "const");
  const JointPolicy joint = seeded_policy(g, 3, 0.5);
  const auto batch = sample_trajectories(g, joint, 200, std::uint64_t{1});
  for (int p = 0; p < 2; ++p) {
    const PolicyGradient grad = estimate_policy_gradient(batch, p, joint[p]);
    for (const auto& row : grad)
      for (double v : row) CHECK(v == 0.0);
  }
}

TEST_CASE("policy gradient: two-arm bandit pushes toward the better arm") {
  const ExtensiveFormGame bandit = two_arm_bandit(1.0, 0.0);
  const JointPolicy joint = zero_joint_policy(bandit);
  const auto batch = sample_trajectories(bandit, joint, 20000, std::uint64_t{2});
  const PolicyGradient grad = estimate_policy_gradient(batch, 0, joint[0]);
  CHECK(grad[0][0] > 0.0);
  CHECK(grad[0][1] < 0.0);
  // Analytic expectation at uniform play with mean baseline: +-1/4.
  CHECK(grad[0][0] == doctest::Approx(0.25).epsilon(0.05));
  CHECK(grad[0][1] == doctest::Approx(-0.25).epsilon(0.05));
}

TEST_CASE("kl gradient: finite differences on a constructed infoset") {
  const std::vector<double> theta{0.0, 0.0};
  const std::vector<double> ref{0.8, 0.2};
  const std::vector<double> analytic = kl_gradient(theta, ref);

  auto kl_of = [&](const std::vector<double>& logits) {
    const std::vector<double> p = softmax(logits);
    double kl = 0.0;
    for (std::size_t a = 0; a < p.size(); ++a) kl += p[a] * std::log(p[a] / ref[a]);
    return kl;
  };
  const double eps = 1e-6;
  for (std::size_t b = 0; b < theta.size(); ++b) {
    std::vector<double> hi = theta, lo = theta;
    hi[b] += eps;
    lo[b] -= eps;
    const double fd = (kl_of(hi) - kl_of(lo)) / (2 * eps);
    CHECK(analytic[b] == doctest::Approx(fd).epsilon(1e-6));
  }
}

TEST_CASE("kl gradient estimator: zero at the reference, zero off the batch support") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = seeded_policy(kuhn, 11, 0.7);
  const auto batch = sample_trajectories(kuhn, joint, 500, std::uint64_t{12});
  for (int p = 0; p < 2; ++p) {
    const PolicyGradient grad = estimate_kl_gradient(batch, p, joint[p], joint[p]);
    for (const auto& row : grad)
      for (double v : row) CHECK(v == 0.0);
  }

  // Opponent who never bets leaves the check-bet infosets unvisited.
  JointPolicy passive = zero_joint_policy(kuhn);
  for (std::size_t i = 0; i < passive[1].logits.size(); ++i)
    passive[1].logits[i] = {40.0, -40.0};
  const auto passive_batch = sample_trajectories(kuhn, passive, 1000, std::uint64_t{13});
  const JointPolicy reference = seeded_policy(kuhn, 14, 0.5);
  const PolicyGradient grad = estimate_kl_gradient(passive_batch, 0, passive[0], reference[0]);
  for (std::size_t i = 0; i < kuhn.infoset_labels[0].size(); ++i) {
    if (kuhn.infoset_labels[0][i].find("cb") != std::string::npos)
      for (double v : grad[i]) CHECK(v == 0.0);
  }
}

TEST_CASE("gradient estimators converge to the exact tree gradient") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = seeded_policy(kuhn, 42, 1.2);

  for (int p = 0; p < 2; ++p) {
    const ExactGradientOracle oracle(kuhn, joint, p);
    double prev_mean = -2.0;
    for (const long batch_size : {100L, 1000L, 10000L, 100000L}) {
      const auto batch =
          sample_trajectories(kuhn, joint, static_cast<int>(batch_size), std::uint64_t{7});
      const PolicyGradient est = estimate_policy_gradient(batch, p, joint[p]);

      std::vector<long> visits(joint[p].logits.size(), 0);
      for (const auto& t : batch)
        for (const auto& s : t.steps)
          if (s.player == p) ++visits[s.infoset];

      double mean_cos = 0.0;
      int counted = 0;
      for (std::size_t i = 0; i < est.size(); ++i) {
        if (visits[i] == 0) continue;
        const double c = cosine(est[i], oracle.grad[i]);
        mean_cos += c;
        ++counted;
        if (batch_size == 100000 && visits[i] >= 500) CHECK(c > 0.95);
      }
      mean_cos /= counted;
      CHECK(mean_cos >= prev_mean - 1e-12);  // monotone in batch size
      prev_mean = mean_cos;
    }
    CHECK(prev_mean > 0.95);
  }
}

TEST_CASE("gradient estimator on a three-action game") {
  const ExtensiveFormGame rps = efg_from_matrix(rock_paper_scissors(), "rps");
  const JointPolicy joint = seeded_policy(rps, 15, 0.9);
  for (int p = 0; p < 2; ++p) {
    const ExactGradientOracle oracle(rps, joint, p);
    const auto batch = sample_trajectories(rps, joint, 100000, std::uint64_t{16});
    const PolicyGradient est = estimate_policy_gradient(batch, p, joint[p]);
    CHECK(cosine(est[0], oracle.grad[0]) > 0.95);
  }
}

TEST_CASE("training: zero step size leaves the policies unchanged") {
  const ExtensiveFormGame kuhn = build_kuhn();
  TrainConfig cfg;
  cfg.eta = 0.0;
  cfg.inner_iters = 1;
  cfg.outer_iters = 1;
  cfg.batch_size = 1;
  cfg.eval_every = 1;
  const TrainRecord rec = train_nashpg(kuhn, cfg);
  REQUIRE_FALSE(rec.checkpoints.empty());
  const double uniform_expl = exploitability(kuhn, uniform_behavioral(kuhn));
  for (const auto& cp : rec.checkpoints) {
    CHECK(cp.exploitability == doctest::Approx(uniform_expl));
    for (int p = 0; p < 2; ++p)
      for (const auto& row : cp.policies[p].logits)
        for (double v : row) CHECK(v == 0.0);
  }
}

TEST_CASE("training: bit-identical records for identical seeds") {
  const ExtensiveFormGame kuhn = build_kuhn();
  TrainConfig cfg;
  cfg.inner_iters = 40;
  cfg.outer_iters = 2;
  cfg.batch_size = 16;
  cfg.eval_every = 20;
  cfg.seed = 123;
  const TrainRecord a = train_nashpg(kuhn, cfg);
  const TrainRecord b = train_nashpg(kuhn, cfg);
  REQUIRE(a.checkpoints.size() == b.checkpoints.size());
  for (std::size_t i = 0; i < a.checkpoints.size(); ++i) {
    CHECK(a.checkpoints[i].step == b.checkpoints[i].step);
    CHECK(a.checkpoints[i].exploitability == b.checkpoints[i].exploitability);
    for (int p = 0; p < 2; ++p)
      CHECK(a.checkpoints[i].policies[p].logits == b.checkpoints[i].policies[p].logits);
  }

  TrainConfig other = cfg;
  other.seed = 124;
  const TrainRecord c = train_nashpg(kuhn, other);
  CHECK(c.checkpoints.back().policies[0].logits != a.checkpoints.back().policies[0].logits);
}

TEST_CASE("training: the reference snapshot zeroes the regularizer at the boundary") {
  const ExtensiveFormGame kuhn = build_kuhn();
  TrainConfig cfg;
  cfg.inner_iters = 25;
  cfg.outer_iters = 1;
  cfg.batch_size = 32;
  cfg.eval_every = 25;
  const TrainRecord rec = train_nashpg(kuhn, cfg);
  const JointPolicy& final_policies = rec.checkpoints.back().policies;
  const auto batch = sample_trajectories(kuhn, final_policies, 200, std::uint64_t{3});
  for (int p = 0; p < 2; ++p) {
    const PolicyGradient grad =
        estimate_kl_gradient(batch, p, final_policies[p], final_policies[p]);
    for (const auto& row : grad)
      for (double v : row) CHECK(v == 0.0);
  }
}

TEST_CASE("train_anneal: requires a schedule and respects frozen-eta endpoints") {
  const ExtensiveFormGame kuhn = build_kuhn();
  TrainConfig cfg;
  cfg.inner_iters = 50;
  cfg.outer_iters = 2;
  cfg.batch_size = 16;
  CHECK_THROWS_AS(train_anneal(kuhn, cfg), std::invalid_argument);

  cfg.anneal = AnnealSchedule{0.001, 0.0};
  cfg.eval_every = 10;
  const TrainRecord rec = train_anneal(kuhn, cfg);
  // Step size hits zero on the final update, so the last recorded eta is 0
  // and the policy drift across the final checkpoints shrinks.
  CHECK(rec.checkpoints.back().eta == doctest::Approx(0.0).epsilon(1e-12));
  const auto& cps = rec.checkpoints;
  REQUIRE(cps.size() >= 3);
  auto drift = [&](std::size_t i) {
    double d = 0.0;
    for (int p = 0; p < 2; ++p)
      for (std::size_t k = 0; k < cps[i].policies[p].logits.size(); ++k)
        for (std::size_t a = 0; a < cps[i].policies[p].logits[k].size(); ++a)
          d += std::abs(cps[i].policies[p].logits[k][a] - cps[i - 1].policies[p].logits[k][a]);
    return d;
  };
  CHECK(drift(cps.size() - 1) < drift(1));
}

TEST_CASE("checkpoint files round-trip") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const JointPolicy joint = seeded_policy(kuhn, 77, 1.5);
  const std::string prefix = "ckpt_roundtrip_test";
  save_checkpoint(prefix, joint);
  const JointPolicy loaded = load_checkpoint(prefix, kuhn);
  for (int p = 0; p < 2; ++p) CHECK(loaded[p].logits == joint[p].logits);
  std::remove((prefix + ".p1.policy").c_str());
  std::remove((prefix + ".p2.policy").c_str());

  CHECK_THROWS_AS(load_checkpoint("no_such_prefix", kuhn), std::invalid_argument);

  std::istringstream bad("0 0 not_a_number\n");
  CHECK_THROWS_AS(read_policy(bad, kuhn, 0, "bad"), std::invalid_argument);
  std::istringstream short_file("0 0 1.5\n");
  CHECK_THROWS_AS(read_policy(short_file, kuhn, 0, "short"), std::invalid_argument);
}

TEST_CASE("train config validation") {
  TrainConfig cfg;
  cfg.batch_size = 0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = TrainConfig{};
  cfg.alpha = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = TrainConfig{};
  cfg.eta = -0.1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg = TrainConfig{};
  CHECK(cfg.resolved_eval_every() == 1000);
}
