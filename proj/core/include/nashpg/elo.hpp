#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "nashpg/policy.hpp"

namespace nashpg {

struct EloEntry {
  std::string id;
  double rating = 1500.0;
};

struct TournamentConfig {
  int rounds = 100;
  int games_per_match = 100;
  double k_factor = 32.0;
  std::uint64_t seed = 0;

  void validate() const;
};

// E_A = 1 / (1 + 10^((Elo_B - Elo_A) / 400)).
double expected_score(double rating_a, double rating_b);

// Elo_A += K (R_A - E_A) and the mirrored rule for B. outcome must be
// 0, 0.5, or 1 (throws std::invalid_argument otherwise).
void elo_update(EloEntry& a, EloEntry& b, double outcome, double k_factor);

// Plays games_per_match games with seats alternating every game. Game pairs
// (2p, 2p+1) reuse one RNG seed with seats swapped, so identical entrants
// cancel exactly and draw 0.5. Returns R_A in {0, 0.5, 1} by the sign of A's
// cumulative payoff.
double play_match(const ExtensiveFormGame& game, const JointPolicy& a, const JointPolicy& b,
                  int games_per_match, std::uint64_t seed);

struct TournamentEntry {
  std::string id;
  JointPolicy policies;
};

struct MatchRecord {
  int round = 0;
  std::string id_a, id_b;
  double r_a = 0.0;
  double rating_a_after = 0.0;
  double rating_b_after = 0.0;
};

struct TournamentResult {
  std::vector<EloEntry> standings;  // sorted by final rating, descending
  std::vector<MatchRecord> history;

  // Columns: round, id_a, id_b, r_a, rating_a_after, rating_b_after.
  void write_history_csv(std::ostream& out) const;
  // Columns: id, rating.
  void write_standings_csv(std::ostream& out) const;
};

// Swiss pairing: each round sorts entries by rating (ties by id) and pairs
// adjacent entries; an odd entry out sits the round with no rating change.
// Ratings update in a batch after all matches of the round finish.
TournamentResult swiss_tournament(const ExtensiveFormGame& game,
                                  const std::vector<TournamentEntry>& entries,
                                  const TournamentConfig& cfg);

}  // namespace nashpg
