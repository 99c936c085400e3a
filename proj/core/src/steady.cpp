#include "holowave/steady.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace holowave {

namespace {

constexpr std::complex<double> kI(0.0, 1.0);

double min_abs_one_plus(const ComplexField& w) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < w.size(); ++j)
    m = std::min(m, std::abs(1.0 + w[j]));
  return m;
}

void require_delta(const ComplexField& w_alpha, double delta,
                   const char* where) {
  if (min_abs_one_plus(w_alpha) < delta)
    throw DegenerateProfileError(std::string(where) +
                                 ": |1 + W_alpha| dips below delta");
}

}  // namespace

void WaveParameters::validate() const {
  if (!(g >= 0.0)) throw ParameterError("params: g must be non-negative");
  if (!(sigma >= 0.0))
    throw ParameterError("params: sigma must be non-negative");
  if (!(h > 0.0)) throw ParameterError("params: h must be positive");
  if (g == 0.0 && sigma == 0.0)
    throw ParameterError("params: g and sigma cannot both vanish");
  if (!std::isfinite(c)) throw ParameterError("params: c must be finite");
}

SteadyProfile::SteadyProfile(HolomorphicBoundaryFunction w_alpha, double delta)
    : w_alpha_(std::move(w_alpha)), delta_(delta) {
  if (!(delta_ > 0.0))
    throw ParameterError("profile: delta must be positive");
  min_modulus_ = min_abs_one_plus(w_alpha_.complex_trace());
  if (min_modulus_ < delta_)
    throw DegenerateProfileError(
        "profile: |1 + W_alpha| = " + std::to_string(min_modulus_) +
        " dips below delta = " + std::to_string(delta_));
}

SteadyProfile profile_from_re_w_alpha(const RealField& re, double h,
                                      double delta) {
  return SteadyProfile(make_holomorphic(re, h), delta);
}

SteadyProfile profile_from_log_data(const RealField& t, double h,
                                    double delta) {
  HolomorphicBoundaryFunction T = make_holomorphic(t, h);
  // exp on a 2x grid, then truncate; the real part is completed canonically
  // so the result is exactly in the holomorphic class.
  ComplexField Tf(pad_resample(T.re(), 2), pad_resample(T.im(), 2));
  ComplexField ef(Tf.grid());
  for (std::size_t j = 0; j < Tf.size(); ++j) ef[j] = std::exp(Tf[j]) - 1.0;
  RealField re = truncate_to(ef.real_part(), t.grid());
  return profile_from_re_w_alpha(re, h, delta);
}

double log_profile_holomorphy_defect(const LogProfile& lp) {
  return l2_norm(lp.v + tilbert(lp.u, lp.h));
}

HolomorphicBoundaryFunction compute_F(const DynamicPair& pair,
                                      const WaveParameters& params,
                                      double delta) {
  const PeriodicGrid& grid = pair.w.grid();
  ComplexField w_alpha = derivative(pair.w.complex_trace());
  ComplexField q_alpha = derivative(pair.q.complex_trace());
  require_delta(w_alpha, delta, "compute_F");

  ComplexField wf = pad_resample(w_alpha, 2);
  ComplexField qf = pad_resample(q_alpha, 2);
  ComplexField bracket(wf.grid());
  for (std::size_t j = 0; j < wf.size(); ++j) {
    const double J = std::norm(1.0 + wf[j]);
    bracket[j] = (qf[j] - std::conj(qf[j])) / J;
  }
  return project_Ph(truncate_to(bracket, grid), params.h);
}

std::pair<RealField, RealField> traveling_system_residual(
    const DynamicPair& pair, const WaveParameters& params, double delta) {
  params.validate();
  const PeriodicGrid& grid = pair.w.grid();
  const double h = params.h;
  const double c = params.c;

  ComplexField w_alpha = derivative(pair.w.complex_trace());
  ComplexField q_alpha = derivative(pair.q.complex_trace());
  require_delta(w_alpha, delta, "traveling_system_residual");

  HolomorphicBoundaryFunction F0 = compute_F(pair, params, delta);

  // Fix the real constant of F to the line's decay normalization: for
  // travelling pairs F = c W_alpha / (1 + W_alpha) - c mean(Re(...)) under
  // the mean-preserving projection, so the correction is computable from W.
  ComplexField wfm = pad_resample(w_alpha, 2);
  ComplexField ratio(wfm.grid());
  for (std::size_t j = 0; j < wfm.size(); ++j)
    ratio[j] = wfm[j] / (1.0 + wfm[j]);
  const double f_const = c * mean(truncate_to(ratio, grid).real_part());

  ComplexField F_trace = F0.complex_trace();
  for (std::size_t j = 0; j < F_trace.size(); ++j) F_trace[j] += f_const;

  // Equation 1: -c W_alpha + F (1 + W_alpha), product on the fine grid.
  ComplexField Ff = pad_resample(F_trace, 2);
  ComplexField eq1f(Ff.grid());
  for (std::size_t j = 0; j < Ff.size(); ++j)
    eq1f[j] = Ff[j] * (1.0 + wfm[j]);
  ComplexField eq1 = truncate_to(eq1f, grid);
  eq1 -= std::complex<double>(c, 0.0) * w_alpha;
  RealField r1 = eq1.real_part();

  // Equation 2: -c Q_alpha + F Q_alpha - g T_h[W] + P_h[|Q_alpha|^2/J]
  //             + sigma P_h[i(W_aa/(J^{1/2}(1+W_a)) - conj)].
  ComplexField qfm = pad_resample(q_alpha, 2);
  ComplexField t1f(Ff.grid());
  for (std::size_t j = 0; j < Ff.size(); ++j)
    t1f[j] = (Ff[j] - c) * qfm[j];
  ComplexField eq2 = truncate_to(t1f, grid);

  if (params.g != 0.0) {
    ComplexField W = pair.w.complex_trace();
    ComplexField tW(tilbert(W.real_part(), h), tilbert(W.imag_part(), h));
    eq2 -= std::complex<double>(params.g, 0.0) * tW;
  }

  RealField quad(grid);
  {
    RealField qf2(qfm.grid());
    for (std::size_t j = 0; j < qfm.size(); ++j)
      qf2[j] = std::norm(qfm[j]) / std::norm(1.0 + wfm[j]);
    quad = truncate_to(qf2, grid);
  }
  eq2 += project_Ph(ComplexField(quad, RealField(grid)), h).complex_trace();

  if (params.sigma != 0.0) {
    ComplexField w_aa = derivative(w_alpha);
    ComplexField waaf = pad_resample(w_aa, 2);
    RealField capf(waaf.grid());
    for (std::size_t j = 0; j < waaf.size(); ++j) {
      const std::complex<double> zp = 1.0 + wfm[j];
      const std::complex<double> X =
          waaf[j] / (std::abs(zp) * zp);
      capf[j] = -2.0 * X.imag();  // i (X - conj X)
    }
    RealField cap = truncate_to(capf, grid);
    HolomorphicBoundaryFunction capP =
        project_Ph(ComplexField(cap, RealField(grid)), h);
    eq2 += std::complex<double>(params.sigma, 0.0) * capP.complex_trace();
  }

  RealField r2 = eq2.real_part();
  // Quotient the Bernoulli constant: the torus has no spatial infinity to
  // pin it.
  const double r2_mean = mean(r2);
  for (std::size_t j = 0; j < r2.size(); ++j) r2[j] -= r2_mean;

  return {std::move(r1), std::move(r2)};
}

double check_QW_relation(const DynamicPair& pair, double c) {
  ComplexField w_alpha = derivative(pair.w.complex_trace());
  ComplexField q_alpha = derivative(pair.q.complex_trace());
  q_alpha -= std::complex<double>(c, 0.0) * w_alpha;
  return l2_norm(q_alpha);
}

RealField residual_full(const SteadyProfile& profile,
                        const WaveParameters& params) {
  params.validate();
  const PeriodicGrid& grid = profile.grid();
  const double c2 = params.c * params.c;

  ComplexField w = profile.w_alpha().complex_trace();
  ComplexField wf = pad_resample(w, 2);
  require_delta(wf, profile.delta() * 0.5, "residual_full");

  RealField rf(wf.grid());
  for (std::size_t j = 0; j < wf.size(); ++j) {
    const std::complex<double> z = wf[j];
    const double J = std::norm(1.0 + z);
    rf[j] = -0.5 * c2 * (2.0 * z.real() + std::norm(z)) / J;
  }

  if (params.g != 0.0) {
    RealField im_W = antiderivative(profile.w_alpha().im());
    RealField im_Wf = pad_resample(im_W, 2);
    for (std::size_t j = 0; j < rf.size(); ++j)
      rf[j] += params.g * im_Wf[j];
  }

  if (params.sigma != 0.0) {
    ComplexField s(wf.grid());
    for (std::size_t j = 0; j < wf.size(); ++j) {
      const std::complex<double> zp = 1.0 + wf[j];
      s[j] = zp / std::abs(zp);
    }
    ComplexField ds = derivative(s);
    for (std::size_t j = 0; j < rf.size(); ++j) {
      const std::complex<double> term =
          kI * params.sigma * ds[j] / (1.0 + wf[j]);
      rf[j] += term.real();
    }
  }

  return truncate_to(rf, grid);
}

ComplexField residual_scaled(const SteadyProfile& profile,
                             const WaveParameters& params) {
  params.validate();
  if (params.g != 0.0)
    throw UsageError("residual_scaled: requires g = 0 (pure capillary form)");
  const PeriodicGrid& grid = profile.grid();
  const double c2 = params.c * params.c;

  ComplexField w = profile.w_alpha().complex_trace();
  ComplexField wf = pad_resample(w, 2);
  require_delta(wf, profile.delta() * 0.5, "residual_scaled");

  ComplexField s(wf.grid());
  for (std::size_t j = 0; j < wf.size(); ++j) {
    const std::complex<double> zp = 1.0 + wf[j];
    s[j] = zp / std::abs(zp);
  }
  ComplexField ds = derivative(s);
  ComplexField out(wf.grid());
  for (std::size_t j = 0; j < wf.size(); ++j) {
    const std::complex<double> z = wf[j];
    out[j] = kI * params.sigma * ds[j] -
             c2 * (z + std::conj(z) / (1.0 + std::conj(z)));
  }
  return truncate_to(out, grid);
}

LogProfile log_reduce(const SteadyProfile& profile) {
  const PeriodicGrid& grid = profile.grid();
  ComplexField w = profile.w_alpha().complex_trace();
  const std::size_t n = grid.size();

  RealField u(grid);
  RealField v(grid);
  std::complex<double> prev = 1.0 + w[0];
  if (std::abs(prev) < profile.delta())
    throw DegenerateProfileError("log_reduce: delta bound violated");
  double theta = std::arg(prev);  // principal branch at the seam
  const double theta0 = theta;
  u[0] = std::log(std::abs(prev));
  v[0] = theta;
  for (std::size_t j = 1; j < n; ++j) {
    const std::complex<double> z = 1.0 + w[j];
    if (std::abs(z) < profile.delta())
      throw DegenerateProfileError("log_reduce: delta bound violated");
    theta += std::arg(z / prev);
    u[j] = std::log(std::abs(z));
    v[j] = theta;
    prev = z;
  }
  const double closure = theta + std::arg((1.0 + w[0]) / prev) - theta0;
  if (std::abs(closure) > 1e-6)
    throw LogBranchError(
        "log_reduce: 1 + W_alpha winds around the origin; no continuous "
        "logarithm");
  return LogProfile{std::move(u), std::move(v), profile.depth()};
}

RealField residual_sinh(const RealField& u, const WaveParameters& params) {
  params.validate();
  if (!(params.sigma > 0.0))
    throw ParameterError("residual_sinh: requires sigma > 0");
  if (sup_norm(u) > 700.0)
    throw MagnitudeError("residual_sinh: |u| exceeds the range of sinh");
  RealField out = tilbert(derivative(u), params.h);
  out *= params.sigma;
  const double two_c2 = 2.0 * params.c * params.c;
  for (std::size_t j = 0; j < u.size(); ++j) out[j] -= two_c2 * std::sinh(u[j]);
  return out;
}

RealField sinh_jacobian_apply(const RealField& u, const RealField& du,
                              const WaveParameters& params) {
  params.validate();
  RealField out = tilbert(derivative(du), params.h);
  out *= params.sigma;
  const double two_c2 = 2.0 * params.c * params.c;
  for (std::size_t j = 0; j < u.size(); ++j)
    out[j] -= two_c2 * std::cosh(u[j]) * du[j];
  return out;
}

double dispersion_speed(double k, const WaveParameters& params) {
  if (!(k > 0.0))
    throw ParameterError("dispersion_speed: wavenumber must be positive");
  return (params.g / k + params.sigma * k) * std::tanh(params.h * k);
}

SurfaceReconstruction reconstruct_surface(const SteadyProfile& profile) {
  const PeriodicGrid& grid = profile.grid();
  ComplexField W = antiderivative(profile.w_alpha().complex_trace());
  SurfaceReconstruction out;
  out.alpha.resize(grid.size());
  out.z.resize(grid.size());
  double min_re = std::numeric_limits<double>::infinity();
  const RealField& re_w = profile.w_alpha().re();
  for (std::size_t j = 0; j < grid.size(); ++j) {
    out.alpha[j] = grid.node(j);
    out.z[j] = grid.node(j) + W[j];
    min_re = std::min(min_re, 1.0 + re_w[j]);
  }
  out.overhang = min_re < 0.0;
  return out;
}

double elevation_amplitude(const SteadyProfile& profile) {
  return sup_norm(antiderivative(profile.w_alpha().im()));
}

}  // namespace holowave
