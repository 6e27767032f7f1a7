#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace nashpg {

// Smallest probability kept by simplex projections. Updates clamp to this
// floor and renormalize so iterates stay strictly interior.
inline constexpr double kInteriorFloor = 1e-12;

// Tolerance for "sums to one" checks on stored distributions.
inline constexpr double kSimplexSumTol = 1e-12;

// A pair of mixed strategies, one probability vector per player.
struct MixedProfile {
  std::vector<double> x;  // row player, length m
  std::vector<double> y;  // column player, length n

  int dim() const { return static_cast<int>(x.size() + y.size()); }

  // Concatenated (x, y) view used by the stacked operators.
  std::vector<double> stacked() const;
};

// True iff v sums to 1 within kSimplexSumTol and every entry >= floor.
bool is_distribution(std::span<const double> v, double floor = 0.0);

bool is_interior(std::span<const double> v);
bool is_interior(const MixedProfile& z);

// Clamps entries to kInteriorFloor and renormalizes in place.
void clamp_to_interior(std::vector<double>& v);
void clamp_to_interior(MixedProfile& z);

// Throws std::invalid_argument unless both vectors are valid interior
// distributions of the requested sizes (size checks skipped when m/n == 0).
void validate_profile(const MixedProfile& z, int m = 0, int n = 0);

std::vector<double> uniform_vector(int n);
MixedProfile uniform_profile(int m, int n);

// Random interior point via exponentially-distributed weights.
std::vector<double> random_interior_vector(int n, std::mt19937_64& rng);
MixedProfile random_interior_profile(int m, int n, std::mt19937_64& rng);

double l1_distance(std::span<const double> a, std::span<const double> b);
double l1_distance(const MixedProfile& a, const MixedProfile& b);

// Euclidean projection onto the probability simplex (sort-based).
std::vector<double> project_to_simplex(std::span<const double> v);

}  // namespace nashpg
