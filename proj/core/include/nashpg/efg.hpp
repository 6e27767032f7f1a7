#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <vector>

#include "nashpg/simplex.hpp"

namespace nashpg {

inline constexpr int kNumPlayers = 2;

enum class NodeKind { Decision, Chance, Terminal };

struct EfgNode {
  NodeKind kind = NodeKind::Terminal;
  int player = -1;                   // Decision: 0 or 1
  int infoset = -1;                  // Decision: index into the player's infoset table
  std::vector<int> children;         // Decision/Chance
  std::vector<double> chance_probs;  // Chance: one probability per child
  double payoff = 0.0;               // Terminal: value to player 0
};

// Finite two-player zero-sum game tree with perfect recall. Terminal payoffs
// are stored once, as player 0's value; player 1's payoff is the negation.
struct ExtensiveFormGame {
  std::string name;
  std::vector<EfgNode> nodes;
  int root = 0;
  std::array<std::vector<int>, 2> infoset_num_actions;
  std::array<std::vector<std::string>, 2> infoset_labels;

  int num_infosets(int player) const {
    return static_cast<int>(infoset_num_actions[player].size());
  }

  struct HistoryCounts {
    long decision = 0;
    long chance = 0;
    long terminal = 0;
  };
  HistoryCounts history_counts() const;

  // Structural checks: tree-ness, chance probabilities summing to one,
  // action counts consistent per infoset, and perfect recall (every state
  // in an infoset shares the owner's (infoset, action) history).
  // Throws std::invalid_argument on the first violation.
  void validate() const;
};

// Incremental bottom-up tree construction with infoset interning.
class EfgBuilder {
 public:
  int add_terminal(double payoff_to_p0);
  int add_chance(std::vector<double> probs, std::vector<int> children);
  int add_decision(int player, const std::string& infoset_label, std::vector<int> children);

  // Infoset id for a label without adding a node (for tests and tooling).
  int infoset_id(int player, const std::string& label) const;

  // Validates and returns the finished game.
  ExtensiveFormGame build(std::string name, int root);

 private:
  ExtensiveFormGame game_;
  std::array<std::unordered_map<std::string, int>, 2> ids_;
};

// Per-infoset action distributions for both players.
struct BehavioralProfile {
  std::array<std::vector<std::vector<double>>, 2> policy;

  const std::vector<double>& at(int player, int infoset) const {
    return policy[player][infoset];
  }
};

// One chosen action per infoset of a single player.
struct PureStrategy {
  std::vector<int> action;
};

BehavioralProfile uniform_behavioral(const ExtensiveFormGame& game);

// Checks coverage and distribution validity. With require_interior the
// entries must also sit at or above the interior floor.
void validate_behavioral(const ExtensiveFormGame& game, const BehavioralProfile& profile,
                         bool require_interior = false);

// Behavioral profile placing probability one on pure's actions for `player`,
// leaving the other player's side empty.
std::vector<std::vector<double>> deterministic_policy(const ExtensiveFormGame& game,
                                                      int player, const PureStrategy& pure);

// Exact expectation of player 0's terminal payoff by full tree traversal.
double expected_payoff(const ExtensiveFormGame& game, const BehavioralProfile& profile);

// Same expectation from `player`'s perspective (negated for player 1).
double expected_payoff_for(const ExtensiveFormGame& game, const BehavioralProfile& profile,
                           int player);

}  // namespace nashpg
