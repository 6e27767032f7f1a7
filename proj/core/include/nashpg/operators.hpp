#pragma once

#include <vector>

#include "nashpg/bregman.hpp"
#include "nashpg/matrix_game.hpp"
#include "nashpg/simplex.hpp"

namespace nashpg {

// Stacked gradient field whose solutions in VI(Z, F) are the Nash equilibria:
// first m entries -Ay, last n entries A'x.
std::vector<double> operator_f(const NormalFormGame& game, const MixedProfile& z);

// Regularized field F(z) + alpha * (grad psi(z) - grad psi(rho)),
// strongly monotone for alpha > 0. Both profiles must be interior.
std::vector<double> operator_g(const NormalFormGame& game, const BregmanGeometry& geom,
                               const MixedProfile& z, const MixedProfile& rho,
                               double alpha);

// Step-size condition sufficient for the magnetic mirror step to converge:
// alpha >= mu * eta * L^2.
bool check_mmd_condition(double alpha, double eta, double mu, double smoothness);

}  // namespace nashpg
