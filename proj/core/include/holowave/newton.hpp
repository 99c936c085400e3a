#pragma once

#include <vector>

#include "holowave/steady.hpp"

namespace holowave {

// Even (cosine) coefficient parameterization of real fields on the torus:
// u = sum_{k=k_min}^{n/2-1} a_k cos(xi_k alpha). Restricting to even
// profiles removes the translation invariance of the steady equations, so
// Newton systems need no phase constraint.
class CosineBasis {
 public:
  CosineBasis(const PeriodicGrid& grid, long k_min);

  std::size_t size() const { return count_; }
  long mode(std::size_t i) const { return k_min_ + static_cast<long>(i); }
  const PeriodicGrid& grid() const { return grid_; }

  RealField synth(const std::vector<double>& a) const;
  // Exact on even fields; the odd part is discarded.
  std::vector<double> analyze(const RealField& u) const;

 private:
  PeriodicGrid grid_;
  long k_min_;
  std::size_t count_;
};

enum class LinearSolverKind { automatic, dense, iterative };

struct NewtonConfig {
  int max_iters = 30;
  double abs_tol = 1e-11;  // on the L2 norm of the residual field
  double rel_tol = 0.0;    // optional: additionally accept below rel_tol*||R0||
  double damping = 1.0;    // initial line-search factor in (0, 1]
  LinearSolverKind linear_solver = LinearSolverKind::automatic;
  int iter_cap = 500;      // iterative linear solver iterations
  double lin_tol = 1e-12;  // iterative linear solver tolerance
  double delta = 1e-3;     // admissibility floor for |1 + W_alpha|
  double fd_eps = 1e-6;    // finite-difference Jacobian step

  void validate() const;
};

enum class NewtonStatus { converged, diverged, stagnated, degenerate_profile };

const char* to_string(NewtonStatus s);

struct NewtonResult {
  NewtonStatus status = NewtonStatus::diverged;
  int iterations = 0;
  double residual_norm = 0.0;  // re-evaluated at the final state
  std::vector<double> step_norms;
  std::vector<double> coeffs;  // cosine coefficients of the final unknown
  double bernoulli = 0.0;      // full kind only

  bool converged() const { return status == NewtonStatus::converged; }
};

// Solves sigma T_h(u_a) = 2 c^2 sinh(u) for an even u (cosine modes
// 0..n/2-1) with an analytic Jacobian.
NewtonResult newton_solve_sinh(const RealField& u0,
                               const WaveParameters& params,
                               const NewtonConfig& cfg);

// Solves the full steady equation for even Re(W_alpha) (cosine modes
// 1..n/2-1) together with the Bernoulli constant b: the system is
// residual_full(profile) = b. On the line b = 0 is forced by decay; on the
// torus periodic waves need it free, and for solitary-type profiles it
// converges to the finite-size remnant.
NewtonResult newton_solve_full(const SteadyProfile& guess,
                               const WaveParameters& params,
                               const NewtonConfig& cfg);

// Small-amplitude guess a cos(k alpha) with c set from the dispersion
// relation; k must sit on the grid.
struct DispersionSeed {
  SteadyProfile profile;
  WaveParameters params;
};
DispersionSeed seed_from_dispersion(double k, double a,
                                    const WaveParameters& params,
                                    const PeriodicGrid& grid,
                                    double delta = 1e-3);

// a exp(-alpha^2 / (2 w^2)): localized even seed for solitary searches.
RealField gaussian_bump(const PeriodicGrid& grid, double amplitude,
                        double width);

// sech^2-shaped long-wave seed for the gravity solitary branch, with
// c^2 = g h (1 + a/h) and Re(W_alpha) recovered from the elevation at
// linear order.
DispersionSeed seed_kdv(double amplitude, const WaveParameters& params,
                        const PeriodicGrid& grid, double delta = 1e-3);

}  // namespace holowave
