#include "nashpg/elo.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "nashpg/random.hpp"
#include "nashpg/rollout.hpp"

namespace nashpg {

void TournamentConfig::validate() const {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (games_per_match < 1) throw std::invalid_argument("games_per_match must be >= 1");
  if (!(k_factor > 0.0)) throw std::invalid_argument("k_factor must be positive");
}

double expected_score(double rating_a, double rating_b) {
  return 1.0 / (1.0 + std::pow(10.0, (rating_b - rating_a) / 400.0));
}

void elo_update(EloEntry& a, EloEntry& b, double outcome, double k_factor) {
  if (outcome != 0.0 && outcome != 0.5 && outcome != 1.0)
    throw std::invalid_argument("elo_update: outcome must be 0, 0.5, or 1");
  const double ea = expected_score(a.rating, b.rating);
  const double eb = 1.0 - ea;
  a.rating += k_factor * (outcome - ea);
  b.rating += k_factor * ((1.0 - outcome) - eb);
}

double play_match(const ExtensiveFormGame& game, const JointPolicy& a, const JointPolicy& b,
                  int games_per_match, std::uint64_t seed) {
  if (games_per_match < 1) throw std::invalid_argument("play_match: games_per_match must be >= 1");
  double total_to_a = 0.0;
  for (int g = 0; g < games_per_match; ++g) {
    const std::uint64_t pair_seed = split_seed(seed, static_cast<std::uint64_t>(g / 2));
    std::mt19937_64 rng(pair_seed);
    const bool a_first = g % 2 == 0;
    const JointPolicy seats{a_first ? a[0] : b[0], a_first ? b[1] : a[1]};
    const double p0_payoff = sample_one(game, seats, rng).payoff;
    total_to_a += a_first ? p0_payoff : -p0_payoff;
  }
  if (total_to_a > 0.0) return 1.0;
  if (total_to_a < 0.0) return 0.0;
  return 0.5;
}

TournamentResult swiss_tournament(const ExtensiveFormGame& game,
                                  const std::vector<TournamentEntry>& entries,
                                  const TournamentConfig& cfg) {
  cfg.validate();
  if (entries.size() < 2)
    throw std::invalid_argument("swiss_tournament: need at least two entries");

  std::vector<EloEntry> table;
  table.reserve(entries.size());
  for (const auto& e : entries) table.push_back({e.id, 1500.0});

  TournamentResult result;
  for (int round = 1; round <= cfg.rounds; ++round) {
    std::vector<int> order(table.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int lhs, int rhs) {
      if (table[lhs].rating != table[rhs].rating) return table[lhs].rating > table[rhs].rating;
      return table[lhs].id < table[rhs].id;
    });

    struct Pending {
      int a, b;
      double r_a;
    };
    std::vector<Pending> pending;
    for (std::size_t q = 0; q + 1 < order.size(); q += 2) {
      const int ia = order[q];
      const int ib = order[q + 1];
      const std::uint64_t match_seed =
          split_seed(split_seed(cfg.seed, static_cast<std::uint64_t>(round)), q / 2);
      const double r_a = play_match(game, entries[ia].policies, entries[ib].policies,
                                    cfg.games_per_match, match_seed);
      pending.push_back({ia, ib, r_a});
    }
    // Odd entry out takes a bye with no rating change.

    for (const Pending& m : pending) elo_update(table[m.a], table[m.b], m.r_a, cfg.k_factor);
    for (const Pending& m : pending)
      result.history.push_back({round, table[m.a].id, table[m.b].id, m.r_a, table[m.a].rating,
                                table[m.b].rating});
  }

  result.standings = table;
  std::sort(result.standings.begin(), result.standings.end(), [](const EloEntry& l, const EloEntry& r) {
    if (l.rating != r.rating) return l.rating > r.rating;
    return l.id < r.id;
  });
  return result;
}

void TournamentResult::write_history_csv(std::ostream& out) const {
  out << "round,id_a,id_b,r_a,rating_a_after,rating_b_after\n";
  for (const auto& m : history)
    out << m.round << ',' << m.id_a << ',' << m.id_b << ',' << m.r_a << ',' << m.rating_a_after
        << ',' << m.rating_b_after << '\n';
}

void TournamentResult::write_standings_csv(std::ostream& out) const {
  out << "id,rating\n";
  for (const auto& e : standings) out << e.id << ',' << e.rating << '\n';
}

}  // namespace nashpg
