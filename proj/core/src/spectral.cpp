#include "holowave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "holowave/fft.hpp"

namespace holowave {

namespace {

// With centered nodes alpha_j = -L/2 + j L/n we have
// exp(i xi_m alpha_j) = (-1)^m exp(2 pi i m j / n), so coefficients differ
// from the raw DFT by the (-1)^m twist.
void twist(std::vector<std::complex<double>>& coeffs) {
  const std::size_t n = coeffs.size();
  for (std::size_t p = 1; p < n; p += 2) coeffs[p] = -coeffs[p];
}

SpectralField forward_impl(const PeriodicGrid& grid,
                           const std::vector<std::complex<double>>& samples) {
  SpectralField c(grid);
  detail::dft_forward(samples, c.raw());
  const double inv_n = 1.0 / static_cast<double>(grid.size());
  for (auto& z : c.raw()) z *= inv_n;
  twist(c.raw());
  return c;
}

std::vector<std::complex<double>> inverse_impl(const SpectralField& c) {
  std::vector<std::complex<double>> twisted = c.raw();
  twist(twisted);
  std::vector<std::complex<double>> samples;
  detail::dft_inverse(twisted, samples);
  return samples;
}

}  // namespace

RealField& RealField::operator+=(const RealField& o) {
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += o[j];
  return *this;
}
RealField& RealField::operator-=(const RealField& o) {
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] -= o[j];
  return *this;
}
RealField& RealField::operator*=(double s) {
  for (auto& x : samples_) x *= s;
  return *this;
}
RealField operator+(RealField a, const RealField& b) { return a += b; }
RealField operator-(RealField a, const RealField& b) { return a -= b; }
RealField operator*(double s, RealField a) { return a *= s; }

ComplexField::ComplexField(const RealField& re, const RealField& im)
    : grid_(re.grid()), samples_(re.size()) {
  if (!(re.grid() == im.grid()))
    throw ParameterError("ComplexField: re/im grids differ");
  for (std::size_t j = 0; j < samples_.size(); ++j)
    samples_[j] = {re[j], im[j]};
}
RealField ComplexField::real_part() const {
  RealField u(grid_);
  for (std::size_t j = 0; j < samples_.size(); ++j) u[j] = samples_[j].real();
  return u;
}
RealField ComplexField::imag_part() const {
  RealField u(grid_);
  for (std::size_t j = 0; j < samples_.size(); ++j) u[j] = samples_[j].imag();
  return u;
}
ComplexField& ComplexField::operator+=(const ComplexField& o) {
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] += o[j];
  return *this;
}
ComplexField& ComplexField::operator-=(const ComplexField& o) {
  for (std::size_t j = 0; j < samples_.size(); ++j) samples_[j] -= o[j];
  return *this;
}
ComplexField& ComplexField::operator*=(std::complex<double> s) {
  for (auto& z : samples_) z *= s;
  return *this;
}
ComplexField operator+(ComplexField a, const ComplexField& b) { return a += b; }
ComplexField operator-(ComplexField a, const ComplexField& b) { return a -= b; }
ComplexField operator*(std::complex<double> s, ComplexField a) {
  return a *= s;
}

SpectralField to_spectral(const RealField& u) {
  std::vector<std::complex<double>> samples(u.size());
  for (std::size_t j = 0; j < u.size(); ++j) samples[j] = u[j];
  return forward_impl(u.grid(), samples);
}

SpectralField to_spectral(const ComplexField& u) {
  return forward_impl(u.grid(), u.samples());
}

RealField to_real(const SpectralField& c) {
  auto samples = inverse_impl(c);
  RealField u(c.grid());
  for (std::size_t j = 0; j < samples.size(); ++j) u[j] = samples[j].real();
  return u;
}

ComplexField to_complex(const SpectralField& c) {
  return ComplexField(c.grid(), inverse_impl(c));
}

MultiplierSymbol MultiplierSymbol::identity() {
  return {"identity", [](double) { return std::complex<double>(1.0, 0.0); }};
}
MultiplierSymbol MultiplierSymbol::derivative() {
  return {"derivative", [](double xi) { return std::complex<double>(0.0, xi); }};
}
MultiplierSymbol MultiplierSymbol::antiderivative() {
  return {"antiderivative", [](double xi) {
            if (xi == 0.0) return std::complex<double>(0.0, 0.0);
            return std::complex<double>(0.0, -1.0 / xi);
          }};
}
MultiplierSymbol MultiplierSymbol::tilbert(double h) {
  return {"tilbert", [h](double xi) {
            return std::complex<double>(0.0, -std::tanh(h * xi));
          }};
}
MultiplierSymbol MultiplierSymbol::tilbert_inverse(double h) {
  return {"tilbert_inverse", [h](double xi) {
            if (xi == 0.0) return std::complex<double>(0.0, 0.0);
            return std::complex<double>(0.0, 1.0 / std::tanh(h * xi));
          }};
}
MultiplierSymbol MultiplierSymbol::hilbert() {
  return {"hilbert", [](double xi) {
            const double s = xi > 0.0 ? 1.0 : (xi < 0.0 ? -1.0 : 0.0);
            return std::complex<double>(0.0, -s);
          }};
}
MultiplierSymbol MultiplierSymbol::sech_derivative(double h) {
  return {"sech_derivative", [h](double xi) {
            return std::complex<double>(0.0, xi / std::cosh(h * xi));
          }};
}

namespace {

void check_symbol_finite(const MultiplierSymbol& m, const PeriodicGrid& grid) {
  for (long k = -grid.max_mode() + 1; k <= grid.max_mode(); ++k) {
    const std::complex<double> v = m(grid.wavenumber(k));
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw SymbolDomainError("multiplier '" + m.name() +
                              "' is non-finite at a grid wavenumber");
  }
}

void check_reality_symmetry(const MultiplierSymbol& m,
                            const PeriodicGrid& grid) {
  for (long k = 1; k < grid.max_mode(); ++k) {
    const std::complex<double> plus = m(grid.wavenumber(k));
    const std::complex<double> minus = m(grid.wavenumber(-k));
    if (std::abs(minus - std::conj(plus)) >
        1e-12 * (1.0 + std::abs(plus)))
      throw ParameterError("multiplier '" + m.name() +
                           "' violates the reality symmetry");
  }
}

}  // namespace

RealField apply_multiplier(const RealField& u, const MultiplierSymbol& m) {
  const PeriodicGrid& grid = u.grid();
  check_symbol_finite(m, grid);
  check_reality_symmetry(m, grid);
  SpectralField c = to_spectral(u);
  const long nyq = grid.max_mode();
  for (long k = -nyq + 1; k < nyq; ++k) c.coeff(k) *= m(grid.wavenumber(k));
  // Nyquist carries pure cosine content; the sine image is invisible at the
  // nodes, so only Re(m) acts.
  c.coeff(nyq) *= m(grid.wavenumber(nyq)).real();
  return to_real(c);
}

ComplexField apply_multiplier(const ComplexField& u,
                              const MultiplierSymbol& m) {
  const PeriodicGrid& grid = u.grid();
  check_symbol_finite(m, grid);
  SpectralField c = to_spectral(u);
  const long nyq = grid.max_mode();
  for (long k = -nyq + 1; k < nyq; ++k) c.coeff(k) *= m(grid.wavenumber(k));
  c.coeff(nyq) *= m(grid.wavenumber(nyq)).real();
  return to_complex(c);
}

RealField tilbert(const RealField& u, double h) {
  if (!(h > 0.0)) throw ParameterError("tilbert: depth must be positive");
  return apply_multiplier(u, MultiplierSymbol::tilbert(h));
}

RealField tilbert_inverse(const RealField& u, double h, double zero_mean_tol) {
  if (!(h > 0.0))
    throw ParameterError("tilbert_inverse: depth must be positive");
  const double mu = mean(u);
  if (std::abs(mu) > zero_mean_tol * l2_norm(u))
    throw ZeroModeError(
        "tilbert_inverse: input has a non-negligible mean; the transform "
        "does not see constants");
  return apply_multiplier(u, MultiplierSymbol::tilbert_inverse(h));
}

RealField hilbert(const RealField& u) {
  return apply_multiplier(u, MultiplierSymbol::hilbert());
}

RealField derivative(const RealField& u) {
  return apply_multiplier(u, MultiplierSymbol::derivative());
}
ComplexField derivative(const ComplexField& u) {
  return apply_multiplier(u, MultiplierSymbol::derivative());
}
RealField antiderivative(const RealField& u) {
  return apply_multiplier(u, MultiplierSymbol::antiderivative());
}
ComplexField antiderivative(const ComplexField& u) {
  return apply_multiplier(u, MultiplierSymbol::antiderivative());
}

double integrate(const RealField& u) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j];
  return s * u.grid().spacing();
}

double mean(const RealField& u) { return integrate(u) / u.grid().length(); }

double inner(const RealField& u, const RealField& v) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * v[j];
  return s * u.grid().spacing();
}

double l2_norm(const RealField& u) { return std::sqrt(inner(u, u)); }

double l2_norm(const ComplexField& u) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s += std::norm(u[j]);
  return std::sqrt(s * u.grid().spacing());
}

double sup_norm(const RealField& u) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s = std::max(s, std::abs(u[j]));
  return s;
}

double sup_norm(const ComplexField& u) {
  double s = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) s = std::max(s, std::abs(u[j]));
  return s;
}

namespace {

// Zero-pad a spectrum onto a refinement of the grid. The coarse Nyquist
// coefficient represents cosine content and splits evenly between +-n/2.
SpectralField pad_spectrum(const SpectralField& c, int factor) {
  if (factor < 1) throw ParameterError("pad_resample: factor must be >= 1");
  const PeriodicGrid& g = c.grid();
  if (factor == 1) return c;
  PeriodicGrid fine(g.size() * static_cast<std::size_t>(factor), g.length());
  SpectralField out(fine);
  const long nyq = g.max_mode();
  for (long k = -nyq + 1; k < nyq; ++k) out.coeff(k) = c.coeff(k);
  out.coeff(nyq) = 0.5 * c.coeff(nyq);
  out.coeff(-nyq) = 0.5 * c.coeff(nyq);
  return out;
}

SpectralField truncate_spectrum(const SpectralField& c,
                                const PeriodicGrid& coarse) {
  const PeriodicGrid& fine = c.grid();
  if (fine.size() < coarse.size() || fine.length() != coarse.length())
    throw ParameterError("truncate_to: incompatible grids");
  SpectralField out(coarse);
  const long nyq = coarse.max_mode();
  for (long k = -nyq + 1; k < nyq; ++k) out.coeff(k) = c.coeff(k);
  if (fine.size() == coarse.size()) {
    out.coeff(nyq) = c.coeff(nyq);
  } else {
    out.coeff(nyq) = c.coeff(nyq) + c.coeff(-nyq);
  }
  return out;
}

}  // namespace

RealField pad_resample(const RealField& u, int factor) {
  return to_real(pad_spectrum(to_spectral(u), factor));
}
ComplexField pad_resample(const ComplexField& u, int factor) {
  return to_complex(pad_spectrum(to_spectral(u), factor));
}
RealField truncate_to(const RealField& fine, const PeriodicGrid& coarse) {
  return to_real(truncate_spectrum(to_spectral(fine), coarse));
}
ComplexField truncate_to(const ComplexField& fine,
                         const PeriodicGrid& coarse) {
  return to_complex(truncate_spectrum(to_spectral(fine), coarse));
}

RealField aa_product(const RealField& u, const RealField& v) {
  if (!(u.grid() == v.grid()))
    throw ParameterError("aa_product: grids differ");
  RealField uf = pad_resample(u, 2);
  RealField vf = pad_resample(v, 2);
  for (std::size_t j = 0; j < uf.size(); ++j) uf[j] *= vf[j];
  return truncate_to(uf, u.grid());
}

RealField random_band_limited(const PeriodicGrid& grid, long max_mode,
                              unsigned long long seed) {
  if (max_mode < 1 || max_mode >= grid.max_mode())
    throw ParameterError("random_band_limited: max_mode out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  SpectralField c(grid);
  for (long k = 1; k <= max_mode; ++k) {
    const std::complex<double> z(unit(rng), unit(rng));
    c.coeff(k) = 0.5 * z;
    c.coeff(-k) = 0.5 * std::conj(z);
  }
  return to_real(c);
}

}  // namespace holowave
