#pragma once

#include <span>
#include <vector>

#include "nashpg/simplex.hpp"

namespace nashpg {

// Mirror-map geometry for the product of simplices. Negative entropy is the
// only kind for now; the enum leaves room for alternates without API change.
struct BregmanGeometry {
  enum class Kind { NegativeEntropy };

  Kind kind = Kind::NegativeEntropy;

  // Strong-convexity modulus of the generator. Negative entropy on the
  // simplex is 1-strongly convex with respect to the 1-norm (Pinsker).
  double strong_convexity_mu = 1.0;
};

// psi(p) = sum_i p_i log p_i, with 0 log 0 = 0.
double negative_entropy(std::span<const double> p);

// Componentwise gradient of psi: 1 + log p_i. Requires p interior.
std::vector<double> grad_negative_entropy(std::span<const double> p);

// KL(a || b) = sum_i a_i log(a_i / b_i). Requires b interior; a may touch
// the boundary (terms with a_i = 0 contribute zero).
double kl_divergence(std::span<const double> a, std::span<const double> b);

// B_psi(a; b) summed over both players; the KL divergence for negative
// entropy. Throws std::domain_error when b is not strictly interior.
double bregman_divergence(const BregmanGeometry& geom, const MixedProfile& a,
                          const MixedProfile& b);

}  // namespace nashpg
