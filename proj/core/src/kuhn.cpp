#include <string>
#include <vector>

#include "nashpg/games.hpp"

namespace nashpg {

namespace {

int showdown_sign(int c1, int c2) { return c1 > c2 ? 1 : -1; }

std::string p1_key(int card, const std::string& hist) {
  return "c" + std::to_string(card) + ":" + hist;
}
std::string p2_key(int card, const std::string& hist) {
  return "c" + std::to_string(card) + ":" + hist;
}

}  // namespace

ExtensiveFormGame build_kuhn() {
  EfgBuilder b;
  std::vector<int> deal_nodes;
  for (int c1 = 0; c1 < 3; ++c1) {
    for (int c2 = 0; c2 < 3; ++c2) {
      if (c1 == c2) continue;
      const int sign = showdown_sign(c1, c2);

      // P1 checks, P2 checks: showdown for the antes.
      const int t_cc = b.add_terminal(sign * 1.0);
      // P1 checks, P2 bets, P1 folds / calls.
      const int t_cbf = b.add_terminal(-1.0);
      const int t_cbc = b.add_terminal(sign * 2.0);
      const int p1_facing = b.add_decision(0, p1_key(c1, "cb"), {t_cbf, t_cbc});
      const int p2_after_check = b.add_decision(1, p2_key(c2, "c"), {t_cc, p1_facing});

      // P1 bets, P2 folds / calls.
      const int t_bf = b.add_terminal(1.0);
      const int t_bc = b.add_terminal(sign * 2.0);
      const int p2_after_bet = b.add_decision(1, p2_key(c2, "b"), {t_bf, t_bc});

      deal_nodes.push_back(b.add_decision(0, p1_key(c1, ""), {p2_after_check, p2_after_bet}));
    }
  }
  const int root =
      b.add_chance(std::vector<double>(deal_nodes.size(), 1.0 / deal_nodes.size()), deal_nodes);
  return b.build("kuhn", root);
}

}  // namespace nashpg
