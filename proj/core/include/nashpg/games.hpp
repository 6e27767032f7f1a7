#pragma once

#include <string>

#include "nashpg/efg.hpp"
#include "nashpg/matrix_game.hpp"

namespace nashpg {

// Three-card poker: both players ante one chip, one betting round with a
// one-chip bet. Payoffs are the raw chip delta. Two actions everywhere
// (0 = check/fold, 1 = bet/call); six infosets per player.
ExtensiveFormGame build_kuhn();

// Six-card poker (two suits, three ranks), two betting rounds with fixed
// raises of 2 then 4, at most two raises per round, and a public card dealt
// before the second round. Ante is one chip; terminal payoffs are the chip
// delta divided by 20. Actions in canonical order: fold (only when facing a
// raise), check/call, raise (while raises remain).
ExtensiveFormGame build_leduc();

// One-shot simultaneous-move wrapper: player 0 picks a row, player 1 picks a
// column without observing it, terminal payoff A[i][j].
ExtensiveFormGame efg_from_matrix(const NormalFormGame& game, std::string name = "matrix");

// Maps "kuhn", "leduc", and "matrix:<path>" to constructed games.
// Throws std::invalid_argument for unknown names.
ExtensiveFormGame make_game(const std::string& name);

}  // namespace nashpg
