#pragma once

#include <complex>
#include <functional>
#include <string>

#include "holowave/grid.hpp"

namespace holowave {

// Fourier coefficients c_m of a field on a PeriodicGrid, in the convention
//
//   f(alpha) = sum_m c_m exp(i xi_m alpha),   xi_m = 2 pi m / L,
//
// with m running over {-n/2+1, .., n/2}. Coefficients are stored in FFT
// index order (m >= 0 first, then negative m); use coeff(m) to index by
// wavenumber. A field is real iff c_{-m} = conj(c_m) and c_{n/2} is real.
class SpectralField {
 public:
  explicit SpectralField(const PeriodicGrid& grid)
      : grid_(grid), coeffs_(grid.size(), {0.0, 0.0}) {}

  const PeriodicGrid& grid() const { return grid_; }
  std::size_t size() const { return coeffs_.size(); }

  std::complex<double>& coeff(long m) { return coeffs_[index_of(m)]; }
  std::complex<double> coeff(long m) const { return coeffs_[index_of(m)]; }
  // Mode number for raw storage index p.
  long mode(std::size_t p) const {
    long n = static_cast<long>(grid_.size());
    long lp = static_cast<long>(p);
    return lp <= n / 2 ? lp : lp - n;
  }
  std::vector<std::complex<double>>& raw() { return coeffs_; }
  const std::vector<std::complex<double>>& raw() const { return coeffs_; }

 private:
  std::size_t index_of(long m) const {
    long n = static_cast<long>(grid_.size());
    if (m < -n / 2 + 1 || m > n / 2)
      throw ParameterError("SpectralField: mode out of range");
    return static_cast<std::size_t>(m >= 0 ? m : m + n);
  }
  PeriodicGrid grid_;
  std::vector<std::complex<double>> coeffs_;
};

SpectralField to_spectral(const RealField& u);
SpectralField to_spectral(const ComplexField& u);
RealField to_real(const SpectralField& c);        // discards imaginary residue
ComplexField to_complex(const SpectralField& c);

// Dimensionless Fourier symbol xi -> m(xi). Symbols applied to real fields
// must satisfy m(-xi) = conj(m(xi)); apply_multiplier checks this on the
// grid's wavenumbers.
class MultiplierSymbol {
 public:
  MultiplierSymbol(std::string name,
                   std::function<std::complex<double>(double)> fn)
      : name_(std::move(name)), fn_(std::move(fn)) {}

  std::complex<double> operator()(double xi) const { return fn_(xi); }
  const std::string& name() const { return name_; }

  static MultiplierSymbol identity();
  static MultiplierSymbol derivative();                // i xi
  static MultiplierSymbol antiderivative();            // -i/xi, 0 at xi=0
  static MultiplierSymbol tilbert(double h);           // -i tanh(h xi)
  static MultiplierSymbol tilbert_inverse(double h);   // i coth(h xi), 0 at 0
  static MultiplierSymbol hilbert();                   // -i sgn(xi)
  static MultiplierSymbol sech_derivative(double h);   // i xi sech(h xi)

 private:
  std::string name_;
  std::function<std::complex<double>(double)> fn_;
};

// Applies m(xi) mode by mode. The unpaired Nyquist mode represents the pure
// cosine cos(xi_{n/2} alpha), whose sine image vanishes at the nodes, so it
// is scaled by Re(m) to keep real fields real.
RealField apply_multiplier(const RealField& u, const MultiplierSymbol& m);
ComplexField apply_multiplier(const ComplexField& u,
                              const MultiplierSymbol& m);

RealField tilbert(const RealField& u, double h);
// Requires |mean(u)| <= zero_mean_tol * ||u||_2 (the transform does not see
// constants, so no inverse exists there).
RealField tilbert_inverse(const RealField& u, double h,
                          double zero_mean_tol = 1e-10);
RealField hilbert(const RealField& u);
RealField derivative(const RealField& u);
ComplexField derivative(const ComplexField& u);
// Zero-mean spectral antiderivative: derivative(antiderivative(u)) recovers
// u minus its mean.
RealField antiderivative(const RealField& u);
ComplexField antiderivative(const ComplexField& u);

// Uniform-grid quadrature (L/n) sum(u_j); exact for band-limited integrands.
double integrate(const RealField& u);
double mean(const RealField& u);
double inner(const RealField& u, const RealField& v);  // integrate(u v)
double l2_norm(const RealField& u);
double l2_norm(const ComplexField& u);
double sup_norm(const RealField& u);
double sup_norm(const ComplexField& u);

// Spectral zero-padding onto a grid refined by `factor` (exact on
// band-limited fields) and its left inverse, spectral truncation.
RealField pad_resample(const RealField& u, int factor);
ComplexField pad_resample(const ComplexField& u, int factor);
RealField truncate_to(const RealField& fine, const PeriodicGrid& coarse);
ComplexField truncate_to(const ComplexField& fine, const PeriodicGrid& coarse);

// Pointwise product evaluated on a 2x grid and truncated back; alias-free
// for factors occupying at most half the band each.
RealField aa_product(const RealField& u, const RealField& v);

// Band-limited noise with unit-scale coefficients on 1 <= |m| <= max_mode,
// seeded and reproducible. Used by randomized identity checks.
RealField random_band_limited(const PeriodicGrid& grid, long max_mode,
                              unsigned long long seed);

}  // namespace holowave
