#include "holowave/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "holowave/littlewood_paley.hpp"

namespace holowave {

namespace {

constexpr int kPad = 4;  // identity integrals carry C^2 cutoffs; pad hard

void guard_cosh_range(const RealField& u, const char* where) {
  if (sup_norm(u) > 700.0)
    throw MagnitudeError(std::string(where) +
                         ": |u| exceeds the range of cosh/sinh");
}

}  // namespace

CutoffFamily::CutoffFamily(double torus_length, double r)
    : CutoffFamily(torus_length, r, torus_length / 16.0) {}

CutoffFamily::CutoffFamily(double torus_length, double r, double fall_width)
    : length_(torus_length), r_(r), fall_width_(fall_width) {
  if (!(length_ > 0.0)) throw ParameterError("cutoff: length must be positive");
  if (!(r_ > 0.0) || r_ > length_ / 8.0)
    throw ParameterError("cutoff: require 0 < r <= L/8");
  if (!(fall_width_ > 0.0) || r_ > 0.5 * length_ - 2.0 * fall_width_)
    throw ParameterError("cutoff: fall window collides with the transition");
}

double CutoffFamily::chi(double x) {
  return smoothstep_quintic(0.5 * (x + 1.0));
}

double CutoffFamily::kappa0() {
  // chi'(x) = s'((x+1)/2)/2 with s the quintic smoothstep; the minimum over
  // (-1/2, 1/2) sits at the window edges t = 1/4, 3/4.
  const double t = 0.25;
  const double sp = 30.0 * t * t * (1.0 - t) * (1.0 - t);
  return 0.5 * sp;
}

double CutoffFamily::value(double alpha) const {
  const double fall_start = 0.5 * length_ - 2.0 * fall_width_;
  if (alpha >= fall_start) {
    // step back down so the periodization is C^2 across the seam
    return 1.0 - chi((alpha - (fall_start + fall_width_)) / fall_width_);
  }
  return chi(alpha / r_);
}

RealField CutoffFamily::sample(const PeriodicGrid& grid) const {
  if (grid.length() != length_)
    throw ParameterError("cutoff: grid length mismatch");
  return RealField::from_function(grid,
                                  [this](double a) { return value(a); });
}

bool CutoffFamily::in_seam_window(double alpha) const {
  return std::abs(alpha) >= 0.5 * length_ - 2.0 * fall_width_;
}

double seam_fraction(const RealField& u, const CutoffFamily& cut) {
  double seam_sup = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (cut.in_seam_window(u.grid().node(j)))
      seam_sup = std::max(seam_sup, std::abs(u[j]));
  const double total = sup_norm(u);
  return total == 0.0 ? 0.0 : seam_sup / total;
}

double cosh_energy(const RealField& u, double c) {
  guard_cosh_range(u, "cosh_energy");
  RealField f(u.grid());
  for (std::size_t j = 0; j < u.size(); ++j) f[j] = std::cosh(u[j]) - 1.0;
  return 2.0 * c * c * integrate(f);
}

double sech_energy(const RealField& u, double h) {
  if (!(h > 0.0)) throw ParameterError("sech_energy: depth must be positive");
  SpectralField c = to_spectral(u);
  const PeriodicGrid& grid = u.grid();
  double sum = 0.0;
  // The Nyquist mode carries no resolvable derivative and is excluded, in
  // step with the multiplier route.
  for (long m = -grid.max_mode() + 1; m < grid.max_mode(); ++m) {
    const double xi = grid.wavenumber(m);
    const double sech = 1.0 / std::cosh(h * xi);
    sum += xi * xi * sech * sech * std::norm(c.coeff(m));
  }
  return 0.5 * h * grid.length() * sum;
}

double sech_energy_physical(const RealField& u, double h) {
  if (!(h > 0.0)) throw ParameterError("sech_energy: depth must be positive");
  RealField w = apply_multiplier(u, MultiplierSymbol::sech_derivative(h));
  return 0.5 * h * inner(w, w);
}

double commutator_identity_defect(const RealField& u, const CutoffFamily& cut,
                                  double h) {
  RealField uf = pad_resample(u, kPad);
  const PeriodicGrid& fine = uf.grid();
  RealField ua = derivative(uf);
  RealField tua = tilbert(ua, h);
  RealField chi = cut.sample(fine);
  RealField tchi = tilbert(chi, h);

  double lhs = 0.0, rhs = 0.0;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    lhs -= chi[j] * ua[j] * tua[j];
    rhs += 0.5 * (ua[j] * ua[j] - tua[j] * tua[j]) * tchi[j];
  }
  const double dx = fine.spacing();
  return std::abs(lhs - rhs) * dx;
}

EnergyIdentitySides truncated_energy_identity(const RealField& u,
                                              const CutoffFamily& cut,
                                              const WaveParameters& params) {
  params.validate();
  guard_cosh_range(u, "truncated_energy_identity");
  const double h = params.h;
  const double sigma = params.sigma;
  const double c2 = params.c * params.c;
  const double r = cut.r();

  RealField uf = pad_resample(u, kPad);
  const PeriodicGrid& fine = uf.grid();
  RealField ua = derivative(uf);
  RealField tua = tilbert(ua, h);
  RealField chi = cut.sample(fine);
  RealField dchi = derivative(chi);
  RealField op_chi = tilbert(chi, h);
  for (std::size_t j = 0; j < op_chi.size(); ++j)
    op_chi[j] += h * dchi[j];

  double lhs = 0.0, rhs = 0.0, pairing = 0.0;
  for (std::size_t j = 0; j < fine.size(); ++j) {
    const double f = std::cosh(uf[j]) - 1.0;
    const double phi = ua[j] * ua[j] - tua[j] * tua[j];
    const double resid = sigma * tua[j] - 2.0 * c2 * std::sinh(uf[j]);
    lhs += 2.0 * c2 * r * dchi[j] * f + 0.5 * sigma * h * r * phi * dchi[j];
    rhs += 0.5 * sigma * r * phi * op_chi[j];
    pairing += r * chi[j] * ua[j] * resid;
  }
  const double dx = fine.spacing();
  return {lhs * dx, rhs * dx, pairing * dx};
}

DecayScan decay_scan(const RealField& u, const std::vector<double>& radii,
                     const WaveParameters& params) {
  if (radii.size() < 3)
    throw UsageError("decay_scan: at least 3 radii are required");
  for (std::size_t i = 0; i + 1 < radii.size(); ++i)
    if (!(radii[i] < radii[i + 1]))
      throw UsageError("decay_scan: radii must be strictly increasing");
  const double L = u.grid().length();
  if (radii.back() > L / 8.0)
    throw ParameterError("decay_scan: largest radius exceeds L/8");

  DecayScan scan;
  scan.radii = radii;
  for (double r : radii) {
    CutoffFamily cut(L, r);
    scan.rhs_values.push_back(truncated_energy_identity(u, cut, params).rhs);
  }

  scan.all_zero = std::all_of(scan.rhs_values.begin(), scan.rhs_values.end(),
                              [](double v) { return v == 0.0; });
  if (scan.all_zero) return scan;

  // least squares of log|rhs| on log r
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(radii.size());
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const double x = std::log(radii[i]);
    const double y = std::log(std::max(std::abs(scan.rhs_values[i]), 1e-300));
    xs.push_back(x);
    ys.push_back(y);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  scan.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double intercept = (sy - scan.exponent * sx) / n;
  double rss = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (intercept + scan.exponent * xs[i]);
    rss += e * e;
  }
  scan.fit_residual = std::sqrt(rss / n);
  return scan;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::trivial:
      return "trivial";
    case Verdict::inconsistent_with_solution:
      return "inconsistent-with-solution";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

CertificateReport nonexistence_certificate(const RealField& u,
                                           const WaveParameters& params,
                                           const CertificateOptions& opts) {
  params.validate();
  if (params.g != 0.0)
    throw UsageError("nonexistence_certificate: requires g = 0");
  if (!(params.sigma > 0.0))
    throw UsageError("nonexistence_certificate: requires sigma > 0");

  CertificateReport report;
  report.cosh_energy = cosh_energy(u, params.c);
  report.sech_energy = sech_energy(u, params.h);
  report.residual_norm = l2_norm(residual_sinh(u, params));
  report.b32_norm = besov_norm(u, 1.5);

  const CutoffFamily cut(u.grid().length(), u.grid().length() / 8.0);
  report.seam_ok = seam_fraction(u, cut) <= opts.seam_tol;
  report.energy_bound =
      opts.margin * report.residual_norm * l2_norm(derivative(u));

  const double energy_sum = report.cosh_energy + report.sech_energy;
  if (sup_norm(u) <= opts.trivial_threshold) {
    report.verdict = Verdict::trivial;
  } else if (report.seam_ok && energy_sum > report.energy_bound) {
    report.verdict = Verdict::inconsistent_with_solution;
  } else {
    report.verdict = Verdict::inconclusive;
  }
  return report;
}

}  // namespace holowave
