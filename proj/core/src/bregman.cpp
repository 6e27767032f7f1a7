#include "nashpg/bregman.hpp"

#include <cmath>
#include <stdexcept>

namespace nashpg {

double negative_entropy(std::span<const double> p) {
  double s = 0.0;
  for (double v : p)
    if (v > 0.0) s += v * std::log(v);
  return s;
}

std::vector<double> grad_negative_entropy(std::span<const double> p) {
  std::vector<double> g(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!(p[i] > 0.0))
      throw std::domain_error("grad_negative_entropy requires an interior point");
    g[i] = 1.0 + std::log(p[i]);
  }
  return g;
}

double kl_divergence(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("kl_divergence: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0.0) continue;
    if (!(b[i] > 0.0))
      throw std::domain_error("kl_divergence: reference point not interior");
    s += a[i] * (std::log(a[i]) - std::log(b[i]));
  }
  return s < 0.0 && s > -1e-15 ? 0.0 : s;
}

double bregman_divergence(const BregmanGeometry& geom, const MixedProfile& a,
                          const MixedProfile& b) {
  (void)geom;  // single geometry kind for now
  if (!is_interior(b))
    throw std::domain_error("bregman_divergence: second argument must be interior");
  if (a.x.size() != b.x.size() || a.y.size() != b.y.size())
    throw std::invalid_argument("bregman_divergence: profile dimensions differ");
  return kl_divergence(a.x, b.x) + kl_divergence(a.y, b.y);
}

}  // namespace nashpg
