#include "holowave/continuation.hpp"

#include <cmath>

#include "solver_detail.hpp"

namespace holowave {

using detail::CurveProblem;
using detail::EvalResult;
using detail::MatrixXd;
using detail::to_eigen;
using detail::to_std;
using detail::VectorXd;

const char* to_string(ResidualKind k) {
  return k == ResidualKind::full ? "full" : "sinh";
}

void ContinuationConfig::validate() const {
  if (!(ds_min > 0.0) || !(ds >= ds_min) || !(ds_max >= ds))
    throw ConfigError("continuation: require 0 < ds_min <= ds <= ds_max");
  if (max_points < 1) throw ConfigError("continuation: max_points must be >= 1");
  if (max_folds < 1) throw ConfigError("continuation: max_folds must be >= 1");
  if (target_amplitude < 0.0)
    throw ConfigError("continuation: target_amplitude must be >= 0");
}

SteadyProfile branch_point_profile(const BranchPoint& pt, double delta) {
  if (pt.kind != ResidualKind::full)
    throw UsageError("branch_point_profile: point is not of the full kind");
  CosineBasis basis(pt.grid(), 1);
  return profile_from_re_w_alpha(basis.synth(pt.coeffs), pt.params.h, delta);
}

RealField branch_point_u(const BranchPoint& pt) {
  if (pt.kind != ResidualKind::sinh)
    throw UsageError("branch_point_u: point is not of the sinh kind");
  CosineBasis basis(pt.grid(), 0);
  return basis.synth(pt.coeffs);
}

double replay_residual_norm(const BranchPoint& pt) {
  if (pt.kind == ResidualKind::sinh)
    return l2_norm(residual_sinh(branch_point_u(pt), pt.params));
  SteadyProfile p = branch_point_profile(pt);
  RealField r = residual_full(p, pt.params);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= pt.bernoulli;
  return l2_norm(r);
}

BranchPoint make_branch_point(ResidualKind kind, const PeriodicGrid& grid,
                              const WaveParameters& params,
                              const NewtonResult& result,
                              bool with_certificate) {
  BranchPoint pt;
  pt.kind = kind;
  pt.params = params;
  pt.grid_n = grid.size();
  pt.grid_length = grid.length();
  pt.coeffs = result.coeffs;
  pt.bernoulli = result.bernoulli;

  const bool capillary = params.g == 0.0 && params.sigma > 0.0;
  if (kind == ResidualKind::sinh) {
    RealField u = branch_point_u(pt);
    pt.amplitude = sup_norm(u);
    pt.overhang = false;
    pt.residual_norm = l2_norm(residual_sinh(u, params));
    if (with_certificate && capillary)
      pt.certificate = nonexistence_certificate(u, params);
  } else {
    SteadyProfile profile = branch_point_profile(pt);
    pt.amplitude = elevation_amplitude(profile);
    pt.overhang = reconstruct_surface(profile).overhang;
    RealField r = residual_full(profile, params);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= pt.bernoulli;
    pt.residual_norm = l2_norm(r);
    if (with_certificate && capillary) {
      // The logarithmic reduction of the g = 0 equation carries the scaled
      // speed c_s^2 = c^2 / 2.
      WaveParameters scaled = params;
      scaled.c = params.c / std::sqrt(2.0);
      pt.certificate =
          nonexistence_certificate(log_reduce(profile).u, scaled);
    }
  }
  return pt;
}

namespace {

struct WeightedMetric {
  double c_weight;  // 1 / c_scale^2
  double dot(const VectorXd& x1, double c1, const VectorXd& x2,
             double c2) const {
    return x1.dot(x2) + c_weight * c1 * c2;
  }
  double norm(const VectorXd& x, double c) const {
    return std::sqrt(dot(x, c, x, c));
  }
};

VectorXd dres_dc(const CurveProblem& curve, const VectorXd& x, double c,
                 double eps) {
  auto rp = curve.eval(x, c + eps);
  auto rm = curve.eval(x, c - eps);
  if (!rp || !rm)
    throw DegenerateProfileError("continuation: dR/dc stencil inadmissible");
  return (rp->residual - rm->residual) / (2.0 * eps);
}

}  // namespace

Branch continue_branch(const BranchPoint& seed, const ContinuationConfig& cfg,
                       const NewtonConfig& ncfg) {
  cfg.validate();
  ncfg.validate();
  seed.params.validate();
  const PeriodicGrid grid = seed.grid();
  const WaveParameters base = seed.params;

  CurveProblem curve = seed.kind == ResidualKind::sinh
                           ? detail::make_sinh_curve(grid, base, ncfg)
                           : detail::make_full_curve(grid, base, ncfg);

  Branch branch;
  branch.points.push_back(seed);

  // Arclength metric: coefficients count as-is, the speed is scaled by the
  // parameter-built velocity sqrt(sigma/h + g h).
  const double c_scale =
      std::sqrt(base.sigma / base.h + base.g * base.h);
  WeightedMetric metric{1.0 / (c_scale * c_scale)};

  VectorXd x(static_cast<long>(curve.dim));
  {
    for (std::size_t i = 0; i < seed.coeffs.size(); ++i)
      x(static_cast<long>(i)) = seed.coeffs[i];
    if (seed.kind == ResidualKind::full)
      x(static_cast<long>(curve.dim - 1)) = seed.bernoulli;
  }
  double c = base.c;

  // First tangent from the Jacobian: J dx = -dR/dc.
  VectorXd tau_x;
  double tau_c;
  {
    MatrixXd J = curve.jacobian(x, c);
    VectorXd rhs = -dres_dc(curve, x, c, ncfg.fd_eps);
    VectorXd dx = J.partialPivLu().solve(rhs);
    if (!dx.allFinite()) dx = VectorXd::Zero(x.size());
    if (x.norm() < 1e-14 && dx.norm() < 1e-14) {
      branch.termination = "trivial-tangent";
      return branch;
    }
    const double nrm = metric.norm(dx, 1.0);
    tau_x = dx / nrm;
    tau_c = 1.0 / nrm;
    // walk away from the flat state
    if (x.norm() > 1e-12 && tau_x.dot(x) < 0.0) {
      tau_x = -tau_x;
      tau_c = -tau_c;
    }
  }

  double ds = cfg.ds;
  double s = seed.arclength;
  double prev_dc = 0.0;
  NewtonConfig corr = ncfg;
  corr.max_iters = std::min(ncfg.max_iters, 12);
  corr.linear_solver = LinearSolverKind::dense;

  while (static_cast<int>(branch.points.size()) < cfg.max_points) {
    const VectorXd x_pred = x + ds * tau_x;
    const double c_pred = c + ds * tau_c;

    detail::NewtonProblem bordered;
    bordered.eval = [&](const VectorXd& z) -> std::optional<EvalResult> {
      VectorXd zx = z.head(z.size() - 1);
      const double zc = z(z.size() - 1);
      auto r = curve.eval(zx, zc);
      if (!r) return std::nullopt;
      const double constraint =
          metric.dot(tau_x, tau_c, zx - x_pred, zc - c_pred);
      VectorXd full(z.size());
      full.head(z.size() - 1) = r->residual;
      full(z.size() - 1) = constraint;
      return EvalResult{full, std::hypot(r->field_norm, constraint)};
    };
    bordered.jacobian = [&](const VectorXd& z) {
      VectorXd zx = z.head(z.size() - 1);
      const double zc = z(z.size() - 1);
      MatrixXd J(z.size(), z.size());
      J.topLeftCorner(z.size() - 1, z.size() - 1) = curve.jacobian(zx, zc);
      J.topRightCorner(z.size() - 1, 1) = dres_dc(curve, zx, zc, ncfg.fd_eps);
      J.bottomLeftCorner(1, z.size() - 1) = tau_x.transpose();
      J(z.size() - 1, z.size() - 1) = metric.c_weight * tau_c;
      return J;
    };

    VectorXd z0(x.size() + 1);
    z0.head(x.size()) = x_pred;
    z0(x.size()) = c_pred;
    NewtonResult corrected = detail::run_newton(bordered, z0, corr);

    if (!corrected.converged()) {
      ds *= 0.5;
      if (ds < cfg.ds_min) {
        branch.termination = "corrector-failed";
        break;
      }
      continue;
    }

    VectorXd x_new = to_eigen(corrected.coeffs).head(x.size());
    const double c_new = corrected.coeffs.back();

    // new point accepted
    WaveParameters p_new = base;
    p_new.c = c_new;
    NewtonResult as_result;
    as_result.status = NewtonStatus::converged;
    as_result.coeffs = to_std(x_new);
    if (seed.kind == ResidualKind::full) {
      as_result.bernoulli = as_result.coeffs.back();
      as_result.coeffs.pop_back();
    }
    BranchPoint pt = make_branch_point(seed.kind, grid, p_new, as_result);
    s += ds;
    pt.arclength = s;
    branch.points.push_back(pt);

    if (cfg.detect_folds && prev_dc != 0.0 &&
        (c_new - c) * prev_dc < 0.0) {
      ++branch.fold_count;
      if (branch.fold_count >= cfg.max_folds) {
        branch.termination = "fold-accumulation";
        break;
      }
    }
    prev_dc = c_new - c;

    // secant tangent for the next step
    VectorXd dx = x_new - x;
    const double dc = c_new - c;
    const double nrm = metric.norm(dx, dc);
    if (nrm > 0.0) {
      tau_x = dx / nrm;
      tau_c = dc / nrm;
    }
    x = x_new;
    c = c_new;

    if (cfg.stop_on_overhang && pt.overhang) {
      branch.termination = "overhang";
      break;
    }
    if (cfg.target_amplitude > 0.0 && pt.amplitude >= cfg.target_amplitude) {
      branch.termination = "target-amplitude";
      break;
    }
    if (cfg.c_min < cfg.c_max && (c < cfg.c_min || c > cfg.c_max)) {
      branch.termination = "speed-range";
      break;
    }

    if (corrected.iterations <= 4) ds = std::min(ds * 1.3, cfg.ds_max);
  }

  if (branch.termination.empty()) branch.termination = "point-cap";
  return branch;
}

}  // namespace holowave
