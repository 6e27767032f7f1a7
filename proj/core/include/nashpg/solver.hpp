#pragma once

#include <iosfwd>
#include <limits>
#include <optional>
#include <vector>

#include "nashpg/bregman.hpp"
#include "nashpg/matrix_game.hpp"
#include "nashpg/operators.hpp"
#include "nashpg/simplex.hpp"

namespace nashpg {

// Linear decay targets applied over a run's full step budget.
struct AnnealSchedule {
  double alpha_final = 0.001;
  std::optional<double> eta_final;
};

struct SolverConfig {
  double alpha = 0.2;        // regularization strength
  double eta = 0.1;          // mirror step size
  double inner_tol = 1e-9;   // 1-norm step threshold for the inner loop
  int inner_max_iters = 1000;  // K
  int outer_iters = 50;        // T
  std::optional<AnnealSchedule> anneal;

  void validate() const;  // throws std::invalid_argument
};

// One outer iteration's instrumentation.
struct IterationStats {
  int t = 0;
  double exploitability = 0.0;
  double bregman_step = 0.0;     // B(z_t; z_{t-1})
  double bregman_to_star = std::numeric_limits<double>::quiet_NaN();
  int inner_iters = 0;
};

struct RunRecord {
  std::vector<IterationStats> iterations;
  std::vector<MixedProfile> profiles;  // z_t snapshot per row

  // Columns: t, exploitability, bregman_step, bregman_to_star, inner_iters.
  void write_csv(std::ostream& out) const;
};

struct InnerSolveDiagnostics {
  int iterations = 0;
  bool converged = false;
  bool condition_ok = true;     // alpha >= mu * eta * L^2
  double last_step_norm = 0.0;  // 1-norm of the final update
  double natural_residual = 0.0;  // ||z - Proj(z - eta G(z))||_1
};

// One simultaneous magnetic mirror step for both players from the same z.
// Closed form for negative entropy, per action:
//   x'(a) oc exp[(log x(a) + eta g(a) + eta alpha log rho(a)) / (1 + eta alpha)]
// with g = Ay for the row player and g = -A'x for the column player.
// The result is clamped to the interior floor and renormalized.
MixedProfile mmd_step(const NormalFormGame& game, const BregmanGeometry& geom,
                      const MixedProfile& z, const MixedProfile& rho,
                      const SolverConfig& cfg);

// Approximates M(rho), the unique solution of the regularized VI anchored at
// rho, by iterating mmd_step from z0 = rho until the 1-norm step drops below
// cfg.inner_tol or cfg.inner_max_iters is reached. Warns on stderr when the
// step-size condition fails and no diagnostics sink is supplied.
MixedProfile solve_regularized_vi(const NormalFormGame& game, const BregmanGeometry& geom,
                                  const MixedProfile& rho, const SolverConfig& cfg,
                                  InnerSolveDiagnostics* diag = nullptr);

// Outer refinement loop: rho <- M(rho) for cfg.outer_iters rounds, recording
// per-iteration divergences and exploitability. When z_star is supplied the
// record tracks B(z*; z_t), which is non-increasing until convergence.
RunRecord iterative_m(const NormalFormGame& game, const BregmanGeometry& geom,
                      const MixedProfile& z0, const SolverConfig& cfg,
                      const MixedProfile* z_star = nullptr);

// Baseline for comparison: a single magnetic mirror descent loop with the
// magnet fixed at the uniform profile and alpha (optionally eta) decayed
// linearly over outer_iters * inner_max_iters steps. Records one row per
// inner_max_iters steps. Requires cfg.anneal.
RunRecord mmd_anneal(const NormalFormGame& game, const BregmanGeometry& geom,
                     const MixedProfile& z0, const SolverConfig& cfg,
                     const MixedProfile* z_star = nullptr);

}  // namespace nashpg
