#pragma once

#include <utility>
#include <vector>

#include "holowave/holomorphic.hpp"

namespace holowave {

// Physical parameters of the travelling problem. g and sigma are
// non-negative and not both zero; h is the asymptotic depth; c the wave
// speed in the frame where the fluid rests at infinity.
struct WaveParameters {
  double g = 0.0;
  double sigma = 0.0;
  double h = 1.0;
  double c = 0.0;

  void validate() const;
};

// The unknown of the steady problem: the holomorphic trace W_alpha together
// with a recorded lower bound delta on |1 + W_alpha| (no degeneracies or
// self-intersections of the parameterization).
class SteadyProfile {
 public:
  SteadyProfile(HolomorphicBoundaryFunction w_alpha, double delta);

  const HolomorphicBoundaryFunction& w_alpha() const { return w_alpha_; }
  double delta() const { return delta_; }
  const PeriodicGrid& grid() const { return w_alpha_.grid(); }
  double depth() const { return w_alpha_.depth(); }
  double min_modulus() const { return min_modulus_; }  // min |1 + W_alpha|

 private:
  HolomorphicBoundaryFunction w_alpha_;
  double delta_;
  double min_modulus_;
};

// Shorthand: profile with Re(W_alpha) given and the imaginary part completed
// canonically.
SteadyProfile profile_from_re_w_alpha(const RealField& re, double h,
                                      double delta);

// Profile with 1 + W_alpha = exp(T), T the canonical holomorphic completion
// of t; inverts log_reduce up to resolution. Used to manufacture admissible
// profiles with known logarithm.
SteadyProfile profile_from_log_data(const RealField& t, double h,
                                    double delta);

// The logarithm T = log(1 + W_alpha) = U + i V of an admissible profile.
struct LogProfile {
  RealField u;
  RealField v;
  double h;
};

double log_profile_holomorphy_defect(const LogProfile& lp);

// The pair (W, Q) of the dynamic system: surface displacement and trace of
// the holomorphic velocity potential.
struct DynamicPair {
  HolomorphicBoundaryFunction w;
  HolomorphicBoundaryFunction q;
};

// F = P_h[(Q_alpha - conj(Q_alpha)) / J], J = |1 + W_alpha|^2. Quotients are
// evaluated with 2x padding. The zero-mode convention of project_Ph applies;
// its error is propagated.
HolomorphicBoundaryFunction compute_F(const DynamicPair& pair,
                                      const WaveParameters& params,
                                      double delta = 1e-6);

// Residuals of the two travelling equations
//   -c W_alpha + F (1 + W_alpha) = 0
//   -c Q_alpha + F Q_alpha - g T_h[W] + P_h[|Q_alpha|^2 / J]
//                                     + sigma P_h[i(..)] = 0
// as real fields (imaginary parts follow by holomorphy). On the torus the
// constants that decay at infinity would fix are not determined: F carries
// the correction c mean(Re(W_alpha / (1 + W_alpha))) that reproduces the
// line's normalization for travelling pairs, and the Bernoulli constant is
// quotiented from the second residual by removing its mean.
std::pair<RealField, RealField> traveling_system_residual(
    const DynamicPair& pair, const WaveParameters& params,
    double delta = 1e-6);

// || Q_alpha - c W_alpha ||_2; zero exactly on travelling pairs.
double check_QW_relation(const DynamicPair& pair, double c);

// Left-hand side of the scalar steady equation
//
//   -c^2/2 (W_a + conj(W_a) + W_a conj(W_a)) / J + g Im(W)
//        + Re[ i sigma / (1+W_a) d_alpha( (1+W_a)/|1+W_a| ) ],
//
// sampled on the grid; W is recovered from W_alpha by the zero-mean
// antiderivative. Vanishes identically at the flat state.
RealField residual_full(const SteadyProfile& profile,
                        const WaveParameters& params);

// Pure-capillary scaled form (requires g = 0):
//   i sigma d_alpha((1+W_a)/|1+W_a|) - c^2 [ W_a + conj(W_a)/(1+conj(W_a)) ].
ComplexField residual_scaled(const SteadyProfile& profile,
                             const WaveParameters& params);

// Continuous logarithm of 1 + W_alpha. Fails when |1 + W_alpha| dips below
// delta or when 1 + W_alpha winds around the origin.
LogProfile log_reduce(const SteadyProfile& profile);

// sigma T_h(u_alpha) - 2 c^2 sinh(u): the scalar reduction of the
// pure-capillary problem in the logarithmic variable.
RealField residual_sinh(const RealField& u, const WaveParameters& params);

// Frechet derivative of residual_sinh at u applied to du.
RealField sinh_jacobian_apply(const RealField& u, const RealField& du,
                              const WaveParameters& params);

// c^2(k) = (g/k + sigma k) tanh(h k): the speed at which the flat state's
// linearization is degenerate at wavenumber k.
double dispersion_speed(double k, const WaveParameters& params);

// Free surface Z(alpha) = alpha + W(alpha), with W the zero-mean spectral
// antiderivative of W_alpha. overhang is set when 1 + Re(W_alpha) changes
// sign, i.e. the surface is not a graph.
struct SurfaceReconstruction {
  std::vector<double> alpha;
  std::vector<std::complex<double>> z;
  bool overhang = false;
};

SurfaceReconstruction reconstruct_surface(const SteadyProfile& profile);

// sup |Im W|: the surface elevation amplitude of a profile.
double elevation_amplitude(const SteadyProfile& profile);

}  // namespace holowave
