#include "nashpg/best_response.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace nashpg {

namespace {

struct BrContext {
  const ExtensiveFormGame& game;
  const std::vector<std::vector<double>>& opponent;
  int responder;
  std::vector<double> reach;        // chance * opponent probability per node
  std::vector<int> own_depth_node;  // responder actions taken before each node
  std::vector<std::vector<int>> infoset_nodes;  // responder decision nodes per infoset
  std::vector<int> chosen;                      // resolved action per responder infoset
  std::vector<double> memo;
  std::vector<char> memo_set;

  BrContext(const ExtensiveFormGame& g, const std::vector<std::vector<double>>& opp, int r)
      : game(g), opponent(opp), responder(r) {
    reach.assign(g.nodes.size(), 0.0);
    own_depth_node.assign(g.nodes.size(), 0);
    infoset_nodes.resize(g.infoset_num_actions[r].size());
    chosen.assign(g.infoset_num_actions[r].size(), -1);
    memo.assign(g.nodes.size(), 0.0);
    memo_set.assign(g.nodes.size(), 0);
  }

  void index_tree(int idx, double prob, int own_depth) {
    reach[idx] = prob;
    own_depth_node[idx] = own_depth;
    const EfgNode& n = game.nodes[idx];
    switch (n.kind) {
      case NodeKind::Terminal:
        return;
      case NodeKind::Chance:
        for (std::size_t k = 0; k < n.children.size(); ++k)
          index_tree(n.children[k], prob * n.chance_probs[k], own_depth);
        return;
      case NodeKind::Decision:
        if (n.player == responder) {
          infoset_nodes[n.infoset].push_back(idx);
          for (int child : n.children) index_tree(child, prob, own_depth + 1);
        } else {
          const auto& dist = opponent[n.infoset];
          for (std::size_t a = 0; a < n.children.size(); ++a)
            index_tree(n.children[a], prob * dist[a], own_depth);
        }
        return;
    }
  }

  // Responder's expected value below a node, given every responder infoset
  // in the subtree has been resolved. Safe to memoize: infosets below a
  // depth-d action edge all have depth > d and are fixed first.
  double value_below(int idx) {
    if (memo_set[idx]) return memo[idx];
    const EfgNode& n = game.nodes[idx];
    double v = 0.0;
    switch (n.kind) {
      case NodeKind::Terminal:
        v = responder == 0 ? n.payoff : -n.payoff;
        break;
      case NodeKind::Chance:
        for (std::size_t k = 0; k < n.children.size(); ++k)
          v += n.chance_probs[k] * value_below(n.children[k]);
        break;
      case NodeKind::Decision:
        if (n.player == responder) {
          v = value_below(n.children[chosen[n.infoset]]);
        } else {
          const auto& dist = opponent[n.infoset];
          for (std::size_t a = 0; a < n.children.size(); ++a)
            if (dist[a] > 0.0) v += dist[a] * value_below(n.children[a]);
        }
        break;
    }
    memo[idx] = v;
    memo_set[idx] = 1;
    return v;
  }
};

}  // namespace

BestResponseResult best_response(const ExtensiveFormGame& game,
                                 const std::vector<std::vector<double>>& opponent_policy,
                                 int responder) {
  if (responder < 0 || responder >= kNumPlayers)
    throw std::invalid_argument("best_response: bad responder index");
  const int opponent = 1 - responder;
  if (opponent_policy.size() != game.infoset_num_actions[opponent].size())
    throw std::invalid_argument("best_response: opponent policy does not cover every infoset");
  for (std::size_t i = 0; i < opponent_policy.size(); ++i)
    if (static_cast<int>(opponent_policy[i].size()) != game.infoset_num_actions[opponent][i] ||
        !is_distribution(opponent_policy[i]))
      throw std::invalid_argument("best_response: invalid opponent distribution");

  BrContext ctx(game, opponent_policy, responder);
  ctx.index_tree(game.root, 1.0, 0);

  // Resolve infosets deepest-first so every continuation is already chosen.
  const int num_infosets = static_cast<int>(ctx.infoset_nodes.size());
  std::vector<int> order(num_infosets);
  for (int i = 0; i < num_infosets; ++i) order[i] = i;
  auto depth_of = [&](int infoset) {
    return ctx.infoset_nodes[infoset].empty() ? 0
                                              : ctx.own_depth_node[ctx.infoset_nodes[infoset][0]];
  };
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return depth_of(a) > depth_of(b); });

  for (int infoset : order) {
    const auto& nodes = ctx.infoset_nodes[infoset];
    const int num_actions = game.infoset_num_actions[responder][infoset];
    int best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int a = 0; a < num_actions; ++a) {
      double v = 0.0;
      for (int node : nodes) v += ctx.reach[node] * ctx.value_below(game.nodes[node].children[a]);
      if (v > best_value) {
        best_value = v;
        best = a;
      }
    }
    ctx.chosen[infoset] = best;
  }

  BestResponseResult result;
  result.strategy.action = ctx.chosen;
  result.value = ctx.value_below(game.root);
  return result;
}

double exploitability(const ExtensiveFormGame& game, const BehavioralProfile& profile) {
  validate_behavioral(game, profile);
  const double p0_value = expected_payoff(game, profile);
  const double delta0 = best_response(game, profile.policy[1], 0).value - p0_value;
  const double delta1 = best_response(game, profile.policy[0], 1).value - (-p0_value);
  return 0.5 * (delta0 + delta1);
}

}  // namespace nashpg
