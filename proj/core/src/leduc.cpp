#include <string>
#include <vector>

#include "nashpg/games.hpp"

namespace nashpg {

namespace {

constexpr int kNumCards = 6;    // two suits, three ranks
constexpr int kAnte = 1;
constexpr int kMaxRaises = 2;
constexpr double kRewardScale = 1.0 / 20.0;

int rank(int card) { return card % 3; }
int raise_size(int round) { return round == 1 ? 2 : 4; }

struct LeducCtx {
  EfgBuilder* b;
  int c0, c1;  // private cards
};

std::string infoset_key(const LeducCtx& ctx, int player, int round, int pub,
                        const std::string& seq1, const std::string& seq2) {
  std::string key = "p" + std::to_string(player == 0 ? ctx.c0 : ctx.c1) + "|" + seq1;
  if (round == 2) key += "|b" + std::to_string(pub) + "|" + seq2;
  return key;
}

int fold_terminal(const LeducCtx& ctx, int folder, int contrib0, int contrib1) {
  const double loss = folder == 0 ? -contrib0 : contrib1;
  return ctx.b->add_terminal(loss * kRewardScale);
}

int showdown_terminal(const LeducCtx& ctx, int pub, int contrib0, int contrib1) {
  const bool pair0 = rank(ctx.c0) == rank(pub);
  const bool pair1 = rank(ctx.c1) == rank(pub);
  int winner;  // -1 for a split
  if (pair0 != pair1)
    winner = pair0 ? 0 : 1;
  else if (rank(ctx.c0) != rank(ctx.c1))
    winner = rank(ctx.c0) > rank(ctx.c1) ? 0 : 1;
  else
    winner = -1;
  double payoff = 0.0;
  if (winner == 0) payoff = contrib1;
  if (winner == 1) payoff = -contrib0;
  return ctx.b->add_terminal(payoff * kRewardScale);
}

int betting_node(const LeducCtx& ctx, int round, int pub, int to_act, int raises,
                 bool outstanding, int contrib0, int contrib1, std::string seq1,
                 std::string seq2);

int round_over(const LeducCtx& ctx, int round, int pub, int contrib0, int contrib1,
               const std::string& seq1) {
  if (round == 2) return showdown_terminal(ctx, pub, contrib0, contrib1);
  // Reveal the public card from the four remaining, then bet again.
  std::vector<int> children;
  std::vector<double> probs;
  for (int card = 0; card < kNumCards; ++card) {
    if (card == ctx.c0 || card == ctx.c1) continue;
    children.push_back(betting_node(ctx, 2, card, 0, 0, false, contrib0, contrib1, seq1, ""));
    probs.push_back(0.25);
  }
  return ctx.b->add_chance(std::move(probs), std::move(children));
}

int betting_node(const LeducCtx& ctx, int round, int pub, int to_act, int raises,
                 bool outstanding, int contrib0, int contrib1, std::string seq1,
                 std::string seq2) {
  std::string& seq = round == 1 ? seq1 : seq2;
  const int other_contrib = to_act == 0 ? contrib1 : contrib0;
  auto with_actor = [&](int amount) {
    return to_act == 0 ? std::pair{amount, contrib1} : std::pair{contrib0, amount};
  };

  std::vector<int> children;
  if (outstanding) {
    children.push_back(fold_terminal(ctx, to_act, contrib0, contrib1));
    {  // call closes the round
      auto [n0, n1] = with_actor(other_contrib);
      std::string done = seq + "c";
      children.push_back(round_over(ctx, round, pub, n0, n1, round == 1 ? done : seq1));
    }
    if (raises < kMaxRaises) {
      auto [n0, n1] = with_actor(other_contrib + raise_size(round));
      std::string cont = seq + "r";
      children.push_back(betting_node(ctx, round, pub, 1 - to_act, raises + 1, true, n0, n1,
                                      round == 1 ? cont : seq1, round == 2 ? cont : seq2));
    }
  } else {
    if (!seq.empty()) {  // second check closes the round
      std::string done = seq + "k";
      children.push_back(round_over(ctx, round, pub, contrib0, contrib1, round == 1 ? done : seq1));
    } else {
      std::string cont = seq + "k";
      children.push_back(betting_node(ctx, round, pub, 1 - to_act, raises, false, contrib0,
                                      contrib1, round == 1 ? cont : seq1, round == 2 ? cont : seq2));
    }
    {
      auto [n0, n1] = with_actor(other_contrib + raise_size(round));
      std::string cont = seq + "r";
      children.push_back(betting_node(ctx, round, pub, 1 - to_act, raises + 1, true, n0, n1,
                                      round == 1 ? cont : seq1, round == 2 ? cont : seq2));
    }
  }
  return ctx.b->add_decision(to_act, infoset_key(ctx, to_act, round, pub, seq1, seq2),
                             std::move(children));
}

}  // namespace

ExtensiveFormGame build_leduc() {
  EfgBuilder b;
  std::vector<int> deal_nodes;
  for (int c0 = 0; c0 < kNumCards; ++c0) {
    for (int c1 = 0; c1 < kNumCards; ++c1) {
      if (c0 == c1) continue;
      LeducCtx ctx{&b, c0, c1};
      deal_nodes.push_back(betting_node(ctx, 1, -1, 0, 0, false, kAnte, kAnte, "", ""));
    }
  }
  const int root =
      b.add_chance(std::vector<double>(deal_nodes.size(), 1.0 / deal_nodes.size()), deal_nodes);
  return b.build("leduc", root);
}

}  // namespace nashpg
