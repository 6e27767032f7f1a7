#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nashpg/simplex.hpp"

namespace nashpg {

// Two-player zero-sum game in normal form. Entries are the row player's
// payoff; the column player's payoff is the negation and is never stored.
struct NormalFormGame {
  int rows = 0;  // m, row player's pure strategies
  int cols = 0;  // n, column player's pure strategies
  std::vector<double> payoff;  // row-major, rows*cols

  double at(int i, int j) const { return payoff[static_cast<std::size_t>(i) * cols + j]; }
  double& at(int i, int j) { return payoff[static_cast<std::size_t>(i) * cols + j]; }

  static NormalFormGame from_rows(const std::vector<std::vector<double>>& rows);

  // Plain-text format: first line "m n", then m lines of n reals.
  // Throws std::invalid_argument naming the offending line on parse errors.
  static NormalFormGame parse(std::istream& in, const std::string& source = "<stream>");
  static NormalFormGame load(const std::string& path);
};

NormalFormGame matching_pennies();
NormalFormGame rock_paper_scissors();

// x'Ay. Throws std::invalid_argument on dimension mismatch.
double payoff(const NormalFormGame& game, const MixedProfile& z);

// A y (the row player's action values against y).
std::vector<double> row_values(const NormalFormGame& game, const std::vector<double>& y);

// A' x (the column player's per-action payoffs to the row player).
std::vector<double> col_values(const NormalFormGame& game, const std::vector<double>& x);

// Average best-response gain over both players: zero exactly at a Nash
// equilibrium, (max_i (Ay)_i - min_j (A'x)_j) / 2 in general.
double exploitability(const NormalFormGame& game, const MixedProfile& z);

// Largest singular value of A via power iteration on A'A
// (50 iterations, stops early once the estimate moves less than 1e-10).
double spectral_norm(const NormalFormGame& game);

}  // namespace nashpg
