#include "nashpg/solver.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace nashpg {

void SolverConfig::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(eta > 0.0)) throw std::invalid_argument("eta must be positive");
  if (!(inner_tol > 0.0)) throw std::invalid_argument("inner_tol must be positive");
  if (inner_max_iters < 1) throw std::invalid_argument("inner_max_iters must be >= 1");
  if (outer_iters < 1) throw std::invalid_argument("outer_iters must be >= 1");
  if (anneal && !(anneal->alpha_final > 0.0))
    throw std::invalid_argument("anneal alpha_final must be positive");
}

void RunRecord::write_csv(std::ostream& out) const {
  out << "t,exploitability,bregman_step,bregman_to_star,inner_iters\n";
  for (const auto& row : iterations) {
    out << row.t << ',' << row.exploitability << ',' << row.bregman_step << ',';
    if (std::isnan(row.bregman_to_star))
      out << "nan";
    else
      out << row.bregman_to_star;
    out << ',' << row.inner_iters << '\n';
  }
}

namespace {

void entropic_mirror_update(std::vector<double>& next, const std::vector<double>& cur,
                            const std::vector<double>& grad, const std::vector<double>& magnet,
                            double alpha, double eta) {
  const std::size_t n = cur.size();
  next.resize(n);
  const double damp = 1.0 / (1.0 + eta * alpha);
  double max_logit = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < n; ++a) {
    next[a] = (std::log(cur[a]) + eta * grad[a] + eta * alpha * std::log(magnet[a])) * damp;
    if (next[a] > max_logit) max_logit = next[a];
  }
  double sum = 0.0;
  for (double& v : next) {
    v = std::exp(v - max_logit);
    sum += v;
  }
  for (double& v : next) v /= sum;
  clamp_to_interior(next);
}

MixedProfile mmd_step_raw(const NormalFormGame& game, const MixedProfile& z,
                          const MixedProfile& rho, double alpha, double eta) {
  const std::vector<double> ay = row_values(game, z.y);
  std::vector<double> neg_atx = col_values(game, z.x);
  for (double& v : neg_atx) v = -v;

  MixedProfile next;
  entropic_mirror_update(next.x, z.x, ay, rho.x, alpha, eta);
  entropic_mirror_update(next.y, z.y, neg_atx, rho.y, alpha, eta);
  return next;
}

double natural_residual(const NormalFormGame& game, const BregmanGeometry& geom,
                        const MixedProfile& z, const MixedProfile& rho,
                        double alpha, double gamma) {
  const std::vector<double> g = operator_g(game, geom, z, rho, alpha);
  std::vector<double> xs(z.x.begin(), z.x.end());
  std::vector<double> ys(z.y.begin(), z.y.end());
  for (int i = 0; i < game.rows; ++i) xs[i] -= gamma * g[i];
  for (int j = 0; j < game.cols; ++j) ys[j] -= gamma * g[game.rows + j];
  const std::vector<double> px = project_to_simplex(xs);
  const std::vector<double> py = project_to_simplex(ys);
  return l1_distance(z.x, px) + l1_distance(z.y, py);
}

}  // namespace

MixedProfile mmd_step(const NormalFormGame& game, const BregmanGeometry& geom,
                      const MixedProfile& z, const MixedProfile& rho,
                      const SolverConfig& cfg) {
  (void)geom;
  cfg.validate();
  validate_profile(z, game.rows, game.cols);
  validate_profile(rho, game.rows, game.cols);
  return mmd_step_raw(game, z, rho, cfg.alpha, cfg.eta);
}

MixedProfile solve_regularized_vi(const NormalFormGame& game, const BregmanGeometry& geom,
                                  const MixedProfile& rho, const SolverConfig& cfg,
                                  InnerSolveDiagnostics* diag) {
  cfg.validate();
  validate_profile(rho, game.rows, game.cols);

  const bool condition_ok =
      check_mmd_condition(cfg.alpha, cfg.eta, geom.strong_convexity_mu, spectral_norm(game));
  if (!condition_ok && diag == nullptr)
    std::fprintf(stderr,
                 "nashpg: step-size condition alpha >= mu*eta*L^2 violated "
                 "(alpha=%g eta=%g); continuing\n",
                 cfg.alpha, cfg.eta);

  MixedProfile z = rho;
  int iters = 0;
  double step_norm = 0.0;
  bool converged = false;
  for (; iters < cfg.inner_max_iters; ) {
    MixedProfile next = mmd_step_raw(game, z, rho, cfg.alpha, cfg.eta);
    ++iters;
    step_norm = l1_distance(z, next);
    z = std::move(next);
    if (step_norm < cfg.inner_tol) {
      converged = true;
      break;
    }
  }

  if (diag != nullptr) {
    diag->iterations = iters;
    diag->converged = converged;
    diag->condition_ok = condition_ok;
    diag->last_step_norm = step_norm;
    diag->natural_residual = natural_residual(game, geom, z, rho, cfg.alpha, cfg.eta);
  }
  return z;
}

RunRecord iterative_m(const NormalFormGame& game, const BregmanGeometry& geom,
                      const MixedProfile& z0, const SolverConfig& cfg,
                      const MixedProfile* z_star) {
  cfg.validate();
  validate_profile(z0, game.rows, game.cols);
  if (!check_mmd_condition(cfg.alpha, cfg.eta, geom.strong_convexity_mu, spectral_norm(game)))
    std::fprintf(stderr,
                 "nashpg: step-size condition alpha >= mu*eta*L^2 violated "
                 "(alpha=%g eta=%g); continuing\n",
                 cfg.alpha, cfg.eta);

  RunRecord record;
  MixedProfile z = z0;

  IterationStats init;
  init.t = 0;
  init.exploitability = exploitability(game, z);
  init.bregman_to_star =
      z_star ? bregman_divergence(geom, *z_star, z) : std::numeric_limits<double>::quiet_NaN();
  record.iterations.push_back(init);
  record.profiles.push_back(z);

  for (int t = 1; t <= cfg.outer_iters; ++t) {
    InnerSolveDiagnostics diag;
    MixedProfile next = solve_regularized_vi(game, geom, z, cfg, &diag);

    IterationStats row;
    row.t = t;
    row.exploitability = exploitability(game, next);
    row.bregman_step = bregman_divergence(geom, next, z);
    row.bregman_to_star = z_star ? bregman_divergence(geom, *z_star, next)
                                 : std::numeric_limits<double>::quiet_NaN();
    row.inner_iters = diag.iterations;
    record.iterations.push_back(row);
    record.profiles.push_back(next);
    z = std::move(next);
  }
  return record;
}

RunRecord mmd_anneal(const NormalFormGame& game, const BregmanGeometry& geom,
                     const MixedProfile& z0, const SolverConfig& cfg,
                     const MixedProfile* z_star) {
  cfg.validate();
  if (!cfg.anneal) throw std::invalid_argument("mmd_anneal requires an anneal schedule");
  validate_profile(z0, game.rows, game.cols);

  const MixedProfile magnet = uniform_profile(game.rows, game.cols);
  const long total_steps = static_cast<long>(cfg.outer_iters) * cfg.inner_max_iters;
  const double alpha0 = cfg.alpha;
  const double alpha1 = cfg.anneal->alpha_final;
  const double eta0 = cfg.eta;
  const double eta1 = cfg.anneal->eta_final.value_or(cfg.eta);

  RunRecord record;
  MixedProfile z = z0;

  IterationStats init;
  init.t = 0;
  init.exploitability = exploitability(game, z);
  init.bregman_to_star =
      z_star ? bregman_divergence(geom, *z_star, z) : std::numeric_limits<double>::quiet_NaN();
  record.iterations.push_back(init);
  record.profiles.push_back(z);

  MixedProfile block_start = z;
  for (long s = 0; s < total_steps; ++s) {
    const double frac = total_steps > 1 ? static_cast<double>(s) / (total_steps - 1) : 1.0;
    const double alpha = alpha0 + (alpha1 - alpha0) * frac;
    const double eta = eta0 + (eta1 - eta0) * frac;
    if (eta > 0.0) z = mmd_step_raw(game, z, magnet, alpha, eta);

    if ((s + 1) % cfg.inner_max_iters == 0) {
      IterationStats row;
      row.t = static_cast<int>((s + 1) / cfg.inner_max_iters);
      row.exploitability = exploitability(game, z);
      row.bregman_step = bregman_divergence(geom, z, block_start);
      row.bregman_to_star = z_star ? bregman_divergence(geom, *z_star, z)
                                   : std::numeric_limits<double>::quiet_NaN();
      row.inner_iters = cfg.inner_max_iters;
      record.iterations.push_back(row);
      record.profiles.push_back(z);
      block_start = z;
    }
  }
  return record;
}

}  // namespace nashpg
