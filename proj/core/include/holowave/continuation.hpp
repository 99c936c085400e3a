#pragma once

#include <optional>
#include <string>
#include <vector>

#include "holowave/certificate.hpp"
#include "holowave/newton.hpp"

namespace holowave {

enum class ResidualKind { full, sinh };

const char* to_string(ResidualKind k);

// A converged solution with its diagnostics; the data is sufficient to
// rebuild the profile and replay the residual evaluation.
struct BranchPoint {
  ResidualKind kind = ResidualKind::full;
  WaveParameters params;
  std::size_t grid_n = 0;
  double grid_length = 0.0;
  std::vector<double> coeffs;  // cosine coefficients of the unknown
  double bernoulli = 0.0;      // full kind: torus Bernoulli constant
  double residual_norm = 0.0;
  double amplitude = 0.0;      // sup of the surface elevation (full) / sup|u|
  bool overhang = false;
  double arclength = 0.0;
  std::optional<CertificateReport> certificate;

  PeriodicGrid grid() const { return PeriodicGrid(grid_n, grid_length); }
};

SteadyProfile branch_point_profile(const BranchPoint& pt, double delta = 1e-6);
RealField branch_point_u(const BranchPoint& pt);

// Re-evaluates the stored point's residual through the public residual
// operations (nothing from the solver's internal state).
double replay_residual_norm(const BranchPoint& pt);

// Assembles a BranchPoint from a converged Newton result; certificates are
// attached for pure-capillary parameters. Full-kind points are certified in
// the scaled-speed convention c_sinh^2 = c^2 / 2 that the logarithmic
// reduction of the g = 0 equation carries.
BranchPoint make_branch_point(ResidualKind kind, const PeriodicGrid& grid,
                              const WaveParameters& params,
                              const NewtonResult& result,
                              bool with_certificate = true);

struct ContinuationConfig {
  double ds = 0.02;
  double ds_min = 1e-5;
  double ds_max = 0.2;
  int max_points = 200;
  bool detect_folds = true;
  int max_folds = 16;
  bool stop_on_overhang = false;
  double target_amplitude = 0.0;  // 0 disables the amplitude target
  double c_min = 0.0;             // c_min >= c_max disables the range check
  double c_max = 0.0;

  void validate() const;
};

struct Branch {
  std::vector<BranchPoint> points;
  std::string termination;
  int fold_count = 0;
};

// Pseudo-arclength continuation in (profile, c) from a converged seed:
// secant predictor, Newton corrector on the bordered system. Records
// overhang onset and certificate diagnostics along the way.
Branch continue_branch(const BranchPoint& seed, const ContinuationConfig& cfg,
                       const NewtonConfig& ncfg);

}  // namespace holowave
