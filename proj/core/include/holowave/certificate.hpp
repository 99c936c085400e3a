#pragma once

#include <string>
#include <vector>

#include "holowave/steady.hpp"

namespace holowave {

// Smooth cutoff chi_r(alpha) = chi(alpha/r) rising 0 -> 1 across [-r, r] at
// the torus center, realized with the C^2 quintic smoothstep. On the torus
// the step must come back down: a mirrored transition of width `fall_width`
// sits just inside the seam at +L/2, so the periodized cutoff is C^2 across
// the seam. Profiles are expected to decay inside the fall window; the
// certificate flags the ones that do not.
class CutoffFamily {
 public:
  CutoffFamily(double torus_length, double r);
  CutoffFamily(double torus_length, double r, double fall_width);

  double r() const { return r_; }
  double torus_length() const { return length_; }
  double fall_width() const { return fall_width_; }
  // Slope floor of chi' on (-1/2, 1/2), recorded for the low-frequency
  // limit argument.
  static double kappa0();

  // chi on [-1, 1] (0 below, 1 above).
  static double chi(double x);
  // The periodized cutoff at signed coordinate alpha in [-L/2, L/2).
  double value(double alpha) const;

  RealField sample(const PeriodicGrid& grid) const;
  // True when alpha lies in the seam window where the periodization departs
  // from chi(alpha/r).
  bool in_seam_window(double alpha) const;

 private:
  double length_;
  double r_;
  double fall_width_;
};

// sup |u| over the seam window relative to sup |u| overall (0 when u = 0).
double seam_fraction(const RealField& u, const CutoffFamily& cut);

// 2 c^2 integral of (cosh u - 1); non-negative, zero iff u = 0.
double cosh_energy(const RealField& u, double c);

// (h/2) sum over resolvable modes of |xi|^2 |u_hat|^2 sech^2(h xi), in the
// Parseval normalization matching `integrate`. Non-negative, zero iff u has
// no resolvable non-constant content.
double sech_energy(const RealField& u, double h);
// Same quantity through the physical-space route: (h/2) || D sech(hD) u ||^2
// with the multiplier i xi sech(h xi). Agrees with sech_energy by Plancherel.
double sech_energy_physical(const RealField& u, double h);

// Absolute defect of the cutoff commutator identity
//   -int chi_r u_a T_h u_a = 1/2 int (|u_a|^2 - |T_h u_a|^2) T_h chi_r,
// a pure operator identity that holds for any u (products evaluated on a
// padded grid). Needs no equation.
double commutator_identity_defect(const RealField& u, const CutoffFamily& cut,
                                  double h);

// Both sides of the localized energy identity, and the residual pairing
// r int chi_r u_a R that accounts for their difference when u does not
// solve the equation (R = residual_sinh(u)):
//   lhs = 2 c^2 r int (d chi_r)(cosh u - 1) + (sigma h / 2) r int Phi d chi_r
//   rhs = (sigma r / 2) int Phi (T_h + h d) chi_r,    Phi = u_a^2 - (T_h u_a)^2.
// For solutions the pairing vanishes and rhs = O(r^{-1/2}).
struct EnergyIdentitySides {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual_pairing = 0.0;
};
EnergyIdentitySides truncated_energy_identity(const RealField& u,
                                              const CutoffFamily& cut,
                                              const WaveParameters& params);

// Least-squares slope of log|rhs| against log r over the given radii.
struct DecayScan {
  double exponent = 0.0;
  double fit_residual = 0.0;
  bool all_zero = false;
  std::vector<double> radii;
  std::vector<double> rhs_values;
};
DecayScan decay_scan(const RealField& u, const std::vector<double>& radii,
                     const WaveParameters& params);

enum class Verdict { trivial, inconsistent_with_solution, inconclusive };

std::string to_string(Verdict v);

struct CertificateReport {
  double cosh_energy = 0.0;
  double sech_energy = 0.0;
  double residual_norm = 0.0;
  double b32_norm = 0.0;
  Verdict verdict = Verdict::inconclusive;
  // diagnostics backing the verdict
  double energy_bound = 0.0;
  bool seam_ok = true;
};

struct CertificateOptions {
  double margin = 10.0;            // verdict robustness factor
  double trivial_threshold = 1e-8; // sup|u| below which u counts as zero
  double seam_tol = 1e-6;          // admissible seam fraction
};

// The non-existence certificate for the pure-capillary problem (g = 0,
// sigma > 0): a genuine solution forces both energies to vanish, so a
// nontrivial profile whose energy sum exceeds margin * ||R||_2 ||u_a||_2 is
// inconsistent with being a solution. Profiles without seam decay cannot be
// judged (the identity's line-limit reading fails) and come back
// inconclusive.
CertificateReport nonexistence_certificate(
    const RealField& u, const WaveParameters& params,
    const CertificateOptions& opts = CertificateOptions{});

}  // namespace holowave
