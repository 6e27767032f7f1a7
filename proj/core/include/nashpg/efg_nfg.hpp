#pragma once

#include <array>

#include "nashpg/efg.hpp"
#include "nashpg/matrix_game.hpp"

namespace nashpg {

// Normal-form reduction of an extensive-form game. Pure strategies are
// complete action plans, indexed mixed-radix over the player's infosets:
// strategy `s` plays (s / stride[k]) % num_actions(k) at infoset k.
struct NfgConversion {
  NormalFormGame game;
  std::array<std::vector<long>, 2> strides;
  std::array<std::vector<int>, 2> num_actions;
  std::array<long, 2> num_pure{0, 0};
};

// Enumerates both players' pure-strategy spaces and fills
// A[i][j] = expected payoff to player 0 (expectation over chance only).
// Throws std::invalid_argument when rows*cols would exceed max_entries.
NfgConversion efg_to_nfg(const ExtensiveFormGame& game, long max_entries = 10'000'000);

PureStrategy decode_pure(const NfgConversion& conv, int player, long index);

// Realization-equivalent mixed strategy of a behavioral profile: each pure
// strategy is weighted by the product of its action probabilities over all
// of the player's infosets (valid under perfect recall).
MixedProfile mixed_from_behavioral(const NfgConversion& conv, const ExtensiveFormGame& game,
                                   const BehavioralProfile& profile);

}  // namespace nashpg
