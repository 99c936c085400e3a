#include "holowave/newton.hpp"

#include <cmath>

#include "solver_detail.hpp"

namespace holowave {

namespace detail {

std::vector<double> to_std(const VectorXd& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}
VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const VectorXd>(v.data(), static_cast<long>(v.size()));
}

namespace {

// Right-preconditioned full-memory GMRES for the matrix-free path. The
// preconditioner is a positive diagonal in the cosine basis.
VectorXd gmres(const std::function<VectorXd(const VectorXd&)>& apply,
               const VectorXd& rhs, const VectorXd& precond_diag, int max_iter,
               double tol) {
  const long n = rhs.size();
  const double beta0 = rhs.norm();
  VectorXd x = VectorXd::Zero(n);
  if (beta0 == 0.0) return x;
  const int m = static_cast<int>(std::min<long>(max_iter, n));

  MatrixXd V(n, m + 1);
  MatrixXd H = MatrixXd::Zero(m + 1, m);
  VectorXd cs = VectorXd::Zero(m), sn = VectorXd::Zero(m);
  VectorXd g = VectorXd::Zero(m + 1);
  V.col(0) = rhs / beta0;
  g(0) = beta0;

  int k = 0;
  for (; k < m; ++k) {
    VectorXd w = apply(V.col(k).cwiseQuotient(precond_diag));
    for (int i = 0; i <= k; ++i) {
      H(i, k) = w.dot(V.col(i));
      w -= H(i, k) * V.col(i);
    }
    H(k + 1, k) = w.norm();
    if (H(k + 1, k) > 0.0) V.col(k + 1) = w / H(k + 1, k);
    for (int i = 0; i < k; ++i) {
      const double t = cs(i) * H(i, k) + sn(i) * H(i + 1, k);
      H(i + 1, k) = -sn(i) * H(i, k) + cs(i) * H(i + 1, k);
      H(i, k) = t;
    }
    const double denom = std::hypot(H(k, k), H(k + 1, k));
    if (denom == 0.0) break;
    cs(k) = H(k, k) / denom;
    sn(k) = H(k + 1, k) / denom;
    H(k, k) = denom;
    H(k + 1, k) = 0.0;
    g(k + 1) = -sn(k) * g(k);
    g(k) = cs(k) * g(k);
    if (std::abs(g(k + 1)) <= tol * beta0) {
      ++k;
      break;
    }
  }
  if (k == 0) return x;
  VectorXd y =
      H.topLeftCorner(k, k).triangularView<Eigen::Upper>().solve(g.head(k));
  x = V.leftCols(k) * y;
  return x.cwiseQuotient(precond_diag);
}

}  // namespace

NewtonResult run_newton(NewtonProblem& prob, VectorXd x,
                        const NewtonConfig& cfg) {
  cfg.validate();
  NewtonResult out;
  const long n = x.size();
  const bool dense = cfg.linear_solver == LinearSolverKind::dense ||
                     (cfg.linear_solver == LinearSolverKind::automatic &&
                      n <= 1024);

  auto first = prob.eval(x);
  if (!first) {
    out.status = NewtonStatus::degenerate_profile;
    out.coeffs = to_std(x);
    return out;
  }
  double rnorm = first->field_norm;
  VectorXd r = first->residual;
  const double r0 = rnorm;

  auto converged = [&] {
    return rnorm <= cfg.abs_tol ||
           (cfg.rel_tol > 0.0 && rnorm <= cfg.rel_tol * r0);
  };

  while (true) {
    if (!std::isfinite(rnorm) || rnorm > 1e8 * (r0 + 1.0)) {
      out.status = NewtonStatus::diverged;
      break;
    }
    if (converged()) {
      out.status = NewtonStatus::converged;
      break;
    }
    if (out.iterations >= cfg.max_iters) {
      out.status =
          rnorm <= r0 ? NewtonStatus::stagnated : NewtonStatus::diverged;
      break;
    }

    VectorXd dx;
    if (dense) {
      dx = prob.jacobian(x).partialPivLu().solve(-r);
    } else {
      auto apply = [&](const VectorXd& v) { return prob.apply_jacobian(x, v); };
      dx = gmres(apply, -r, prob.precond_diag, cfg.iter_cap, cfg.lin_tol);
    }
    if (!dx.allFinite()) {
      out.status = NewtonStatus::stagnated;
      break;
    }

    double lambda = cfg.damping;
    bool accepted = false;
    while (lambda >= 1.0 / 4096.0) {
      VectorXd xt = x + lambda * dx;
      auto trial = prob.eval(xt);
      if (trial && std::isfinite(trial->field_norm) &&
          trial->field_norm <= (1.0 - 0.25 * lambda) * rnorm) {
        out.step_norms.push_back(lambda * dx.norm());
        x = xt;
        r = trial->residual;
        rnorm = trial->field_norm;
        accepted = true;
        break;
      }
      lambda *= 0.5;
    }
    ++out.iterations;
    if (!accepted) {
      out.status = NewtonStatus::stagnated;
      break;
    }
  }

  out.residual_norm = rnorm;
  out.coeffs = to_std(x);
  return out;
}

CurveProblem make_sinh_curve(const PeriodicGrid& grid,
                             const WaveParameters& base,
                             const NewtonConfig& cfg) {
  (void)cfg;
  CosineBasis basis(grid, 0);
  CurveProblem prob;
  prob.dim = basis.size();

  auto params_at = [base](double c) {
    WaveParameters p = base;
    p.c = c;
    return p;
  };

  prob.eval = [basis, params_at](const VectorXd& x,
                                 double c) -> std::optional<EvalResult> {
    RealField u = basis.synth(to_std(x));
    if (sup_norm(u) > 700.0) return std::nullopt;
    RealField r = residual_sinh(u, params_at(c));
    return EvalResult{to_eigen(basis.analyze(r)), l2_norm(r)};
  };
  prob.jacobian = [basis, params_at](const VectorXd& x, double c) {
    RealField u = basis.synth(to_std(x));
    const std::size_t n = basis.size();
    const WaveParameters p = params_at(c);
    MatrixXd J(n, n);
    std::vector<double> e(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      e[k] = 1.0;
      RealField col = sinh_jacobian_apply(u, basis.synth(e), p);
      e[k] = 0.0;
      auto a = basis.analyze(col);
      for (std::size_t i = 0; i < n; ++i) J(i, k) = a[i];
    }
    return J;
  };
  prob.apply_jacobian = [basis, params_at](const VectorXd& x, double c,
                                           const VectorXd& v) {
    RealField u = basis.synth(to_std(x));
    RealField dv = basis.synth(to_std(v));
    return to_eigen(basis.analyze(sinh_jacobian_apply(u, dv, params_at(c))));
  };

  VectorXd d(basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const double xi = grid.wavenumber(basis.mode(i));
    d(static_cast<long>(i)) = base.sigma * xi * std::tanh(base.h * xi) +
                              2.0 * base.c * base.c;
  }
  prob.precond_diag = d.cwiseAbs().cwiseMax(1e-12);
  return prob;
}

CurveProblem make_full_curve(const PeriodicGrid& grid,
                             const WaveParameters& base,
                             const NewtonConfig& cfg) {
  CosineBasis unknowns(grid, 1);
  CosineBasis equations(grid, 0);
  const std::size_t m = unknowns.size();
  const double h = base.h;
  const double delta = cfg.delta;
  const double fd_eps = cfg.fd_eps;

  auto params_at = [base](double c) {
    WaveParameters p = base;
    p.c = c;
    return p;
  };

  CurveProblem prob;
  prob.dim = m + 1;  // + Bernoulli constant

  prob.eval = [unknowns, equations, params_at, h, delta, m](
                  const VectorXd& x, double c) -> std::optional<EvalResult> {
    std::vector<double> a(x.data(), x.data() + m);
    RealField re = unknowns.synth(a);
    const double b = x(static_cast<long>(m));
    try {
      SteadyProfile p = profile_from_re_w_alpha(re, h, delta);
      RealField field = residual_full(p, params_at(c));
      for (std::size_t j = 0; j < field.size(); ++j) field[j] -= b;
      auto r = equations.analyze(field);
      return EvalResult{to_eigen(r), l2_norm(field)};
    } catch (const DegenerateProfileError&) {
      return std::nullopt;
    }
  };
  prob.jacobian = [prob, fd_eps](const VectorXd& x, double c) {
    const long n = x.size();
    MatrixXd J(n, n);
    for (long k = 0; k < n; ++k) {
      const double eps = fd_eps * std::max(1.0, std::abs(x(k)));
      VectorXd xp = x, xm = x;
      xp(k) += eps;
      xm(k) -= eps;
      auto rp = prob.eval(xp, c);
      auto rm = prob.eval(xm, c);
      if (!rp || !rm)
        throw DegenerateProfileError(
            "full-kind Jacobian stencil leaves the admissible set");
      J.col(k) = (rp->residual - rm->residual) / (2.0 * eps);
    }
    return J;
  };
  prob.apply_jacobian = [prob, fd_eps](const VectorXd& x, double c,
                                       const VectorXd& v) {
    const double eps = fd_eps / std::max(1.0, v.norm());
    auto rp = prob.eval(x + eps * v, c);
    auto rm = prob.eval(x - eps * v, c);
    if (!rp || !rm)
      throw DegenerateProfileError(
          "full-kind directional stencil leaves the admissible set");
    return VectorXd((rp->residual - rm->residual) / (2.0 * eps));
  };

  VectorXd d(m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    const double k = grid.wavenumber(unknowns.mode(i));
    d(static_cast<long>(i)) =
        std::abs((base.g / k + base.sigma * k) * std::tanh(h * k) -
                 base.c * base.c) +
        0.1 * (1.0 + base.c * base.c);
  }
  d(static_cast<long>(m)) = 1.0;
  prob.precond_diag = d;
  return prob;
}

}  // namespace detail

using detail::to_eigen;
using detail::to_std;
using detail::VectorXd;

CosineBasis::CosineBasis(const PeriodicGrid& grid, long k_min)
    : grid_(grid), k_min_(k_min) {
  if (k_min < 0 || k_min > 1)
    throw ParameterError("CosineBasis: k_min must be 0 or 1");
  count_ = static_cast<std::size_t>(grid.max_mode() - k_min_);
}

RealField CosineBasis::synth(const std::vector<double>& a) const {
  if (a.size() != count_)
    throw ParameterError("CosineBasis: coefficient count mismatch");
  SpectralField c(grid_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long k = mode(i);
    if (k == 0) {
      c.coeff(0) = a[i];
    } else {
      c.coeff(k) = 0.5 * a[i];
      c.coeff(-k) = 0.5 * a[i];
    }
  }
  return to_real(c);
}

std::vector<double> CosineBasis::analyze(const RealField& u) const {
  SpectralField c = to_spectral(u);
  std::vector<double> a(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    const long k = mode(i);
    a[i] = k == 0 ? c.coeff(0).real() : 2.0 * c.coeff(k).real();
  }
  return a;
}

void NewtonConfig::validate() const {
  if (max_iters < 1) throw ConfigError("newton: max_iters must be >= 1");
  if (!(abs_tol > 0.0)) throw ConfigError("newton: abs_tol must be positive");
  if (rel_tol < 0.0) throw ConfigError("newton: rel_tol must be >= 0");
  if (!(damping > 0.0) || damping > 1.0)
    throw ConfigError("newton: damping must lie in (0, 1]");
  if (iter_cap < 1) throw ConfigError("newton: iter_cap must be >= 1");
  if (!(lin_tol > 0.0)) throw ConfigError("newton: lin_tol must be positive");
  if (!(delta > 0.0)) throw ConfigError("newton: delta must be positive");
  if (!(fd_eps > 0.0)) throw ConfigError("newton: fd_eps must be positive");
}

const char* to_string(NewtonStatus s) {
  switch (s) {
    case NewtonStatus::converged:
      return "converged";
    case NewtonStatus::diverged:
      return "diverged";
    case NewtonStatus::stagnated:
      return "stagnated";
    case NewtonStatus::degenerate_profile:
      return "degenerate-profile";
  }
  return "unknown";
}

NewtonResult newton_solve_sinh(const RealField& u0,
                               const WaveParameters& params,
                               const NewtonConfig& cfg) {
  params.validate();
  if (!(params.sigma > 0.0))
    throw ParameterError("newton_solve_sinh: requires sigma > 0");
  CosineBasis basis(u0.grid(), 0);
  detail::CurveProblem curve = detail::make_sinh_curve(u0.grid(), params, cfg);
  detail::NewtonProblem prob;
  const double c = params.c;
  prob.eval = [&curve, c](const VectorXd& x) { return curve.eval(x, c); };
  prob.jacobian = [&curve, c](const VectorXd& x) {
    return curve.jacobian(x, c);
  };
  prob.apply_jacobian = [&curve, c](const VectorXd& x, const VectorXd& v) {
    return curve.apply_jacobian(x, c, v);
  };
  prob.precond_diag = curve.precond_diag;
  return detail::run_newton(prob, to_eigen(basis.analyze(u0)), cfg);
}

NewtonResult newton_solve_full(const SteadyProfile& guess,
                               const WaveParameters& params,
                               const NewtonConfig& cfg) {
  params.validate();
  const PeriodicGrid grid = guess.grid();
  CosineBasis unknowns(grid, 1);
  detail::CurveProblem curve = detail::make_full_curve(grid, params, cfg);
  detail::NewtonProblem prob;
  const double c = params.c;
  prob.eval = [&curve, c](const VectorXd& x) { return curve.eval(x, c); };
  prob.jacobian = [&curve, c](const VectorXd& x) {
    return curve.jacobian(x, c);
  };
  prob.apply_jacobian = [&curve, c](const VectorXd& x, const VectorXd& v) {
    return curve.apply_jacobian(x, c, v);
  };
  prob.precond_diag = curve.precond_diag;

  VectorXd x0(unknowns.size() + 1);
  auto a = unknowns.analyze(guess.w_alpha().re());
  for (std::size_t i = 0; i < a.size(); ++i) x0(static_cast<long>(i)) = a[i];
  x0(static_cast<long>(unknowns.size())) = 0.0;

  NewtonResult result = detail::run_newton(prob, x0, cfg);
  result.bernoulli = result.coeffs.back();
  result.coeffs.pop_back();
  return result;
}

DispersionSeed seed_from_dispersion(double k, double a,
                                    const WaveParameters& params,
                                    const PeriodicGrid& grid, double delta) {
  params.validate();
  const double m_real = k * grid.length() / (2.0 * pi);
  const long m = std::lround(m_real);
  if (m < 1 || m >= grid.max_mode() ||
      std::abs(m_real - static_cast<double>(m)) > 1e-9)
    throw ParameterError("seed_from_dispersion: k is not a grid wavenumber");
  WaveParameters out = params;
  out.c = std::sqrt(dispersion_speed(k, params));
  RealField re = RealField::from_function(
      grid, [&](double alpha) { return a * std::cos(k * alpha); });
  return DispersionSeed{profile_from_re_w_alpha(re, params.h, delta), out};
}

RealField gaussian_bump(const PeriodicGrid& grid, double amplitude,
                        double width) {
  if (!(width > 0.0))
    throw ParameterError("gaussian_bump: width must be positive");
  return RealField::from_function(grid, [&](double alpha) {
    return amplitude * std::exp(-0.5 * alpha * alpha / (width * width));
  });
}

DispersionSeed seed_kdv(double amplitude, const WaveParameters& params,
                        const PeriodicGrid& grid, double delta) {
  params.validate();
  if (!(params.g > 0.0))
    throw ParameterError("seed_kdv: requires g > 0");
  if (!(amplitude > 0.0))
    throw ParameterError("seed_kdv: amplitude must be positive");
  const double h = params.h;
  const double kappa = std::sqrt(0.75 * amplitude / (h * h * h));
  RealField eta = RealField::from_function(grid, [&](double alpha) {
    const double s = 1.0 / std::cosh(kappa * alpha);
    return amplitude * s * s;
  });
  const double eta_mean = mean(eta);
  for (std::size_t j = 0; j < eta.size(); ++j) eta[j] -= eta_mean;
  // Re(W_alpha) = -T_h^{-1} d_alpha eta at linear order; the symbol
  // xi coth(h xi) extends continuously by 1/h through xi = 0.
  RealField re = apply_multiplier(
      eta, MultiplierSymbol("xi_coth", [h](double xi) {
        const double v = xi == 0.0 ? 1.0 / h : xi / std::tanh(h * xi);
        return std::complex<double>(v, 0.0);
      }));
  WaveParameters out = params;
  out.c = std::sqrt(params.g * h * (1.0 + amplitude / h));
  return DispersionSeed{profile_from_re_w_alpha(re, h, delta), out};
}

}  // namespace holowave
