#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nashpg/best_response.hpp"
#include "nashpg/efg_nfg.hpp"
#include "nashpg/games.hpp"
#include "test_util.hpp"

using namespace nashpg;

TEST_CASE("best response against uniform kuhn play is profitable and exhaustive-optimal") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const BehavioralProfile uniform = uniform_behavioral(kuhn);
  const NfgConversion conv = efg_to_nfg(kuhn);

  for (int responder = 0; responder < 2; ++responder) {
    const BestResponseResult br =
        best_response(kuhn, uniform.policy[1 - responder], responder);
    CHECK(br.value > 0.0);

    // Exhaustive oracle: sweep all 64 pure plans of the responder.
    double best = -1e9;
    for (long s = 0; s < conv.num_pure[responder]; ++s) {
      BehavioralProfile prof = uniform;
      prof.policy[responder] =
          deterministic_policy(kuhn, responder, decode_pure(conv, responder, s));
      best = std::max(best, expected_payoff_for(kuhn, prof, responder));
    }
    CHECK(br.value == doctest::Approx(best).epsilon(1e-12));

    // The returned plan actually achieves the returned value.
    BehavioralProfile prof = uniform;
    prof.policy[responder] = deterministic_policy(kuhn, responder, br.strategy);
    CHECK(expected_payoff_for(kuhn, prof, responder) == doctest::Approx(br.value));
  }
}

TEST_CASE("best response value against an equilibrium equals the game value") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const BehavioralProfile ne = testutil::kuhn_equilibrium(kuhn, 1.0 / 6.0);
  const double v = -1.0 / 18.0;
  CHECK(best_response(kuhn, ne.policy[1], 0).value == doctest::Approx(v).epsilon(1e-6));
  CHECK(best_response(kuhn, ne.policy[0], 1).value == doctest::Approx(-v).epsilon(1e-6));
}

TEST_CASE("best response dominates every fixed responder strategy") {
  const ExtensiveFormGame kuhn = build_kuhn();
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    BehavioralProfile prof = uniform_behavioral(kuhn);
    for (int p = 0; p < 2; ++p)
      for (auto& dist : prof.policy[p]) {
        dist[1] = uniform_double(rng);
        dist[0] = 1.0 - dist[1];
      }
    for (int responder = 0; responder < 2; ++responder) {
      const double br = best_response(kuhn, prof.policy[1 - responder], responder).value;
      CHECK(br >= expected_payoff_for(kuhn, prof, responder) - 1e-12);
    }
  }
}

TEST_CASE("degenerate game with one action per infoset") {
  EfgBuilder b;
  const int t = b.add_terminal(0.75);
  const int p2 = b.add_decision(1, "only2", {t});
  const int p1 = b.add_decision(0, "only1", {p2});
  const ExtensiveFormGame g = b.build("line", p1);
  const BehavioralProfile prof = uniform_behavioral(g);
  const BestResponseResult br = best_response(g, prof.policy[1], 0);
  CHECK(br.value == expected_payoff(g, prof));
}

TEST_CASE("ties break toward the lowest action index") {
  // Both actions of player 0 lead to identical payoffs.
  EfgBuilder b;
  const int t0 = b.add_terminal(0.5);
  const int t1 = b.add_terminal(0.5);
  const int d = b.add_decision(0, "tie", {t0, t1});
  const int t2 = b.add_terminal(0.5);
  const int root = b.add_chance({0.5, 0.5}, {d, t2});
  const ExtensiveFormGame g = b.build("ties", root);
  const BestResponseResult br = best_response(g, {}, 0);
  CHECK(br.strategy.action[0] == 0);
}

TEST_CASE("exploitability: zero at equilibrium, exact on the skewed wrapper") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const BehavioralProfile ne = testutil::kuhn_equilibrium(kuhn, 0.25);
  CHECK(exploitability(kuhn, ne) < 1e-6);
  CHECK(exploitability(kuhn, ne) >= -1e-9);

  // One-shot matching pennies: x=(0.9,0.1) vs uniform y. The row side
  // cannot gain (uniform y equalizes); the column side gains 0.8.
  const ExtensiveFormGame mp = efg_from_matrix(matching_pennies(), "mp");
  BehavioralProfile prof;
  prof.policy[0] = {{0.9, 0.1}};
  prof.policy[1] = {{0.5, 0.5}};
  CHECK(exploitability(mp, prof) == doctest::Approx(0.4).epsilon(1e-12));
}

TEST_CASE("exploitability of uniform kuhn matches the normal-form reduction") {
  const ExtensiveFormGame kuhn = build_kuhn();
  const NfgConversion conv = efg_to_nfg(kuhn);
  const BehavioralProfile uniform = uniform_behavioral(kuhn);
  const double efg_value = exploitability(kuhn, uniform);

  const MixedProfile lifted = mixed_from_behavioral(conv, kuhn, uniform);
  CHECK(efg_value == doctest::Approx(exploitability(conv.game, lifted)).epsilon(1e-9));
  CHECK(efg_value > 0.0);
}

TEST_CASE("exploitability is invariant under the role swap") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const NormalFormGame g = testutil::random_zero_sum_game(3, 4, rng);
    NormalFormGame swapped;  // -A', seats exchanged
    swapped.rows = g.cols;
    swapped.cols = g.rows;
    swapped.payoff.resize(g.payoff.size());
    for (int i = 0; i < g.rows; ++i)
      for (int j = 0; j < g.cols; ++j) swapped.at(j, i) = -g.at(i, j);

    const ExtensiveFormGame e1 = efg_from_matrix(g, "g");
    const ExtensiveFormGame e2 = efg_from_matrix(swapped, "g_swapped");
    const MixedProfile z = random_interior_profile(3, 4, rng);
    BehavioralProfile p1, p2;
    p1.policy[0] = {z.x};
    p1.policy[1] = {z.y};
    p2.policy[0] = {z.y};
    p2.policy[1] = {z.x};
    CHECK(exploitability(e1, p1) == doctest::Approx(exploitability(e2, p2)).epsilon(1e-12));
  }
}

TEST_CASE("best response rejects malformed opponents") {
  const ExtensiveFormGame kuhn = build_kuhn();
  std::vector<std::vector<double>> short_policy(5, std::vector<double>{0.5, 0.5});
  CHECK_THROWS_AS(best_response(kuhn, short_policy, 0), std::invalid_argument);
  std::vector<std::vector<double>> bad(6, std::vector<double>{0.7, 0.7});
  CHECK_THROWS_AS(best_response(kuhn, bad, 0), std::invalid_argument);
}
