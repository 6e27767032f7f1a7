#include "nashpg/efg.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace nashpg {

ExtensiveFormGame::HistoryCounts ExtensiveFormGame::history_counts() const {
  HistoryCounts c;
  for (const EfgNode& n : nodes) {
    switch (n.kind) {
      case NodeKind::Decision: ++c.decision; break;
      case NodeKind::Chance: ++c.chance; break;
      case NodeKind::Terminal: ++c.terminal; break;
    }
  }
  return c;
}

namespace {

using OwnHistory = std::vector<std::pair<int, int>>;  // (infoset, action) of one player

struct RecallChecker {
  const ExtensiveFormGame& game;
  std::vector<char> visited;
  std::array<std::vector<OwnHistory>, 2> signature;   // per infoset
  std::array<std::vector<char>, 2> has_signature;

  explicit RecallChecker(const ExtensiveFormGame& g) : game(g) {
    visited.assign(g.nodes.size(), 0);
    for (int p = 0; p < kNumPlayers; ++p) {
      signature[p].resize(g.infoset_num_actions[p].size());
      has_signature[p].assign(g.infoset_num_actions[p].size(), 0);
    }
  }

  void walk(int idx, std::array<OwnHistory, 2>& hist) {
    if (idx < 0 || idx >= static_cast<int>(game.nodes.size()))
      throw std::invalid_argument("efg: child index out of range");
    if (visited[idx]) throw std::invalid_argument("efg: node reachable twice (not a tree)");
    visited[idx] = 1;
    const EfgNode& n = game.nodes[idx];

    switch (n.kind) {
      case NodeKind::Terminal:
        if (!std::isfinite(n.payoff))
          throw std::invalid_argument("efg: terminal payoff is not finite");
        return;
      case NodeKind::Chance: {
        if (n.children.size() != n.chance_probs.size() || n.children.empty())
          throw std::invalid_argument("efg: chance children/probabilities mismatch");
        double sum = 0.0;
        for (double p : n.chance_probs) {
          if (!(p >= 0.0)) throw std::invalid_argument("efg: negative chance probability");
          sum += p;
        }
        if (std::abs(sum - 1.0) > 1e-12 * static_cast<double>(n.chance_probs.size()))
          throw std::invalid_argument("efg: chance probabilities do not sum to 1");
        for (int child : n.children) walk(child, hist);
        return;
      }
      case NodeKind::Decision: {
        if (n.player < 0 || n.player >= kNumPlayers)
          throw std::invalid_argument("efg: bad player index");
        const auto& table = game.infoset_num_actions[n.player];
        if (n.infoset < 0 || n.infoset >= static_cast<int>(table.size()))
          throw std::invalid_argument("efg: infoset index out of range");
        if (static_cast<int>(n.children.size()) != table[n.infoset])
          throw std::invalid_argument("efg: action count differs within infoset");

        OwnHistory& own = hist[n.player];
        if (has_signature[n.player][n.infoset]) {
          if (signature[n.player][n.infoset] != own)
            throw std::invalid_argument(
                "efg: perfect recall violated at infoset " +
                game.infoset_labels[n.player][n.infoset]);
        } else {
          signature[n.player][n.infoset] = own;
          has_signature[n.player][n.infoset] = 1;
        }

        for (int a = 0; a < static_cast<int>(n.children.size()); ++a) {
          own.emplace_back(n.infoset, a);
          walk(n.children[a], hist);
          own.pop_back();
        }
        return;
      }
    }
  }
};

}  // namespace

void ExtensiveFormGame::validate() const {
  if (nodes.empty()) throw std::invalid_argument("efg: empty game");
  if (root < 0 || root >= static_cast<int>(nodes.size()))
    throw std::invalid_argument("efg: root index out of range");
  for (int p = 0; p < kNumPlayers; ++p)
    if (infoset_labels[p].size() != infoset_num_actions[p].size())
      throw std::invalid_argument("efg: infoset tables inconsistent");

  RecallChecker checker(*this);
  std::array<OwnHistory, 2> hist;
  checker.walk(root, hist);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (!checker.visited[i])
      throw std::invalid_argument("efg: unreachable node in tree");
}

int EfgBuilder::add_terminal(double payoff_to_p0) {
  EfgNode n;
  n.kind = NodeKind::Terminal;
  n.payoff = payoff_to_p0;
  game_.nodes.push_back(std::move(n));
  return static_cast<int>(game_.nodes.size()) - 1;
}

int EfgBuilder::add_chance(std::vector<double> probs, std::vector<int> children) {
  EfgNode n;
  n.kind = NodeKind::Chance;
  n.chance_probs = std::move(probs);
  n.children = std::move(children);
  game_.nodes.push_back(std::move(n));
  return static_cast<int>(game_.nodes.size()) - 1;
}

int EfgBuilder::add_decision(int player, const std::string& infoset_label,
                             std::vector<int> children) {
  if (player < 0 || player >= kNumPlayers)
    throw std::invalid_argument("efg builder: bad player index");
  auto [it, inserted] =
      ids_[player].try_emplace(infoset_label, static_cast<int>(game_.infoset_num_actions[player].size()));
  if (inserted) {
    game_.infoset_num_actions[player].push_back(static_cast<int>(children.size()));
    game_.infoset_labels[player].push_back(infoset_label);
  }
  EfgNode n;
  n.kind = NodeKind::Decision;
  n.player = player;
  n.infoset = it->second;
  n.children = std::move(children);
  game_.nodes.push_back(std::move(n));
  return static_cast<int>(game_.nodes.size()) - 1;
}

int EfgBuilder::infoset_id(int player, const std::string& label) const {
  auto it = ids_[player].find(label);
  return it == ids_[player].end() ? -1 : it->second;
}

ExtensiveFormGame EfgBuilder::build(std::string name, int root) {
  game_.name = std::move(name);
  game_.root = root;
  game_.validate();
  return std::move(game_);
}

BehavioralProfile uniform_behavioral(const ExtensiveFormGame& game) {
  BehavioralProfile prof;
  for (int p = 0; p < kNumPlayers; ++p) {
    prof.policy[p].reserve(game.infoset_num_actions[p].size());
    for (int count : game.infoset_num_actions[p])
      prof.policy[p].push_back(uniform_vector(count));
  }
  return prof;
}

void validate_behavioral(const ExtensiveFormGame& game, const BehavioralProfile& profile,
                         bool require_interior) {
  for (int p = 0; p < kNumPlayers; ++p) {
    if (profile.policy[p].size() != game.infoset_num_actions[p].size())
      throw std::invalid_argument("behavioral profile does not cover every infoset");
    for (std::size_t i = 0; i < profile.policy[p].size(); ++i) {
      const auto& dist = profile.policy[p][i];
      if (static_cast<int>(dist.size()) != game.infoset_num_actions[p][i])
        throw std::invalid_argument("behavioral profile has wrong action count at infoset " +
                                    game.infoset_labels[p][i]);
      if (!is_distribution(dist, require_interior ? kInteriorFloor * 0.5 : 0.0))
        throw std::invalid_argument("behavioral profile entry is not a distribution at infoset " +
                                    game.infoset_labels[p][i]);
    }
  }
}

std::vector<std::vector<double>> deterministic_policy(const ExtensiveFormGame& game,
                                                      int player, const PureStrategy& pure) {
  const auto& table = game.infoset_num_actions[player];
  if (pure.action.size() != table.size())
    throw std::invalid_argument("pure strategy does not cover every infoset");
  std::vector<std::vector<double>> policy(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (pure.action[i] < 0 || pure.action[i] >= table[i])
      throw std::invalid_argument("pure strategy action index out of range");
    policy[i].assign(static_cast<std::size_t>(table[i]), 0.0);
    policy[i][pure.action[i]] = 1.0;
  }
  return policy;
}

namespace {

double node_value(const ExtensiveFormGame& game, const BehavioralProfile& profile, int idx) {
  const EfgNode& n = game.nodes[idx];
  switch (n.kind) {
    case NodeKind::Terminal:
      return n.payoff;
    case NodeKind::Chance: {
      double v = 0.0;
      for (std::size_t k = 0; k < n.children.size(); ++k)
        v += n.chance_probs[k] * node_value(game, profile, n.children[k]);
      return v;
    }
    case NodeKind::Decision: {
      const auto& dist = profile.policy[n.player][n.infoset];
      double v = 0.0;
      for (std::size_t a = 0; a < n.children.size(); ++a)
        if (dist[a] > 0.0) v += dist[a] * node_value(game, profile, n.children[a]);
      return v;
    }
  }
  return 0.0;
}

}  // namespace

double expected_payoff(const ExtensiveFormGame& game, const BehavioralProfile& profile) {
  validate_behavioral(game, profile);
  return node_value(game, profile, game.root);
}

double expected_payoff_for(const ExtensiveFormGame& game, const BehavioralProfile& profile,
                           int player) {
  const double v = expected_payoff(game, profile);
  return player == 0 ? v : -v;
}

}  // namespace nashpg
