#pragma once

#include "nashpg/efg.hpp"

namespace nashpg {

struct BestResponseResult {
  PureStrategy strategy;
  double value = 0.0;  // responder's expected payoff against the opponent
};

// Exact best response for `responder` against a fixed opponent policy
// (one distribution per opponent infoset). Single bottom-up pass: infosets
// are resolved deepest-first by the responder's own action depth, each
// choosing the action that maximizes the opponent-and-chance reach-weighted
// continuation value. Ties break toward the lowest action index.
BestResponseResult best_response(const ExtensiveFormGame& game,
                                 const std::vector<std::vector<double>>& opponent_policy,
                                 int responder);

// (delta_0 + delta_1) / 2, each delta the exact best-response gain of one
// player against the other's fixed strategy. Zero exactly at equilibrium.
double exploitability(const ExtensiveFormGame& game, const BehavioralProfile& profile);

}  // namespace nashpg
