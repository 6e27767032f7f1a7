#include "nashpg/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "nashpg/random.hpp"

namespace nashpg {

std::vector<double> MixedProfile::stacked() const {
  std::vector<double> z;
  z.reserve(x.size() + y.size());
  z.insert(z.end(), x.begin(), x.end());
  z.insert(z.end(), y.begin(), y.end());
  return z;
}

bool is_distribution(std::span<const double> v, double floor) {
  if (v.empty()) return false;
  double sum = 0.0;
  for (double p : v) {
    if (!std::isfinite(p) || p < floor) return false;
    sum += p;
  }
  return std::abs(sum - 1.0) <= kSimplexSumTol * static_cast<double>(v.size());
}

bool is_interior(std::span<const double> v) {
  return is_distribution(v, kInteriorFloor * 0.5) &&
         std::all_of(v.begin(), v.end(), [](double p) { return p > 0.0; });
}

bool is_interior(const MixedProfile& z) {
  return is_interior(z.x) && is_interior(z.y);
}

void clamp_to_interior(std::vector<double>& v) {
  double sum = 0.0;
  for (double& p : v) {
    if (!(p > kInteriorFloor)) p = kInteriorFloor;
    sum += p;
  }
  for (double& p : v) p /= sum;
}

void clamp_to_interior(MixedProfile& z) {
  clamp_to_interior(z.x);
  clamp_to_interior(z.y);
}

void validate_profile(const MixedProfile& z, int m, int n) {
  if (m > 0 && static_cast<int>(z.x.size()) != m)
    throw std::invalid_argument("profile x has wrong dimension");
  if (n > 0 && static_cast<int>(z.y.size()) != n)
    throw std::invalid_argument("profile y has wrong dimension");
  if (!is_interior(z.x) || !is_interior(z.y))
    throw std::invalid_argument("profile is not an interior distribution pair");
}

std::vector<double> uniform_vector(int n) {
  return std::vector<double>(static_cast<std::size_t>(n), 1.0 / n);
}

MixedProfile uniform_profile(int m, int n) {
  return MixedProfile{uniform_vector(m), uniform_vector(n)};
}

std::vector<double> random_interior_vector(int n, std::mt19937_64& rng) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (double& p : v) p = -std::log(1.0 - uniform_double(rng));
  double sum = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& p : v) p /= sum;
  clamp_to_interior(v);
  return v;
}

MixedProfile random_interior_profile(int m, int n, std::mt19937_64& rng) {
  MixedProfile z;
  z.x = random_interior_vector(m, rng);
  z.y = random_interior_vector(n, rng);
  return z;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("l1_distance: size mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double l1_distance(const MixedProfile& a, const MixedProfile& b) {
  return l1_distance(a.x, b.x) + l1_distance(a.y, b.y);
}

std::vector<double> project_to_simplex(std::span<const double> v) {
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<double>());
  double cum = 0.0, theta = 0.0;
  int support = 0;
  for (int i = 0; i < static_cast<int>(u.size()); ++i) {
    cum += u[i];
    double t = (cum - 1.0) / (i + 1);
    if (u[i] - t > 0.0) {
      support = i + 1;
      theta = t;
    }
  }
  (void)support;
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = std::max(0.0, v[i] - theta);
  return out;
}

}  // namespace nashpg
