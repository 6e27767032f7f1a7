#include "nashpg/operators.hpp"

#include <cmath>
#include <stdexcept>

namespace nashpg {

std::vector<double> operator_f(const NormalFormGame& game, const MixedProfile& z) {
  if (static_cast<int>(z.x.size()) != game.rows || static_cast<int>(z.y.size()) != game.cols)
    throw std::invalid_argument("operator_f: profile dimensions do not match game");
  const std::vector<double> ay = row_values(game, z.y);
  const std::vector<double> atx = col_values(game, z.x);
  std::vector<double> out(static_cast<std::size_t>(game.rows + game.cols));
  for (int i = 0; i < game.rows; ++i) out[i] = -ay[i];
  for (int j = 0; j < game.cols; ++j) out[game.rows + j] = atx[j];
  return out;
}

std::vector<double> operator_g(const NormalFormGame& game, const BregmanGeometry& geom,
                               const MixedProfile& z, const MixedProfile& rho,
                               double alpha) {
  (void)geom;
  if (!is_interior(z) || !is_interior(rho))
    throw std::domain_error("operator_g: profiles must be strictly interior");
  std::vector<double> out = operator_f(game, z);
  // grad psi(z) - grad psi(rho) reduces to log(z/rho) componentwise.
  for (int i = 0; i < game.rows; ++i)
    out[i] += alpha * (std::log(z.x[i]) - std::log(rho.x[i]));
  for (int j = 0; j < game.cols; ++j)
    out[game.rows + j] += alpha * (std::log(z.y[j]) - std::log(rho.y[j]));
  return out;
}

bool check_mmd_condition(double alpha, double eta, double mu, double smoothness) {
  return alpha >= mu * eta * smoothness * smoothness;
}

}  // namespace nashpg
