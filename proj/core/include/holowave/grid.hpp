#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

#include "holowave/errors.hpp"

namespace holowave {

inline constexpr double pi = 3.141592653589793238462643383279502884;

// Uniform collocation grid on a torus of circumference `length`, the
// computational stand-in for the real line. Nodes are centered so that the
// periodization seam sits at alpha = +-L/2 and localized profiles live
// around alpha = 0:
//
//   alpha_j = -L/2 + j L/n,   j = 0..n-1
//
// Resolvable wavenumbers are xi_m = 2 pi m / L for m in {-n/2+1, .., n/2}.
class PeriodicGrid {
 public:
  PeriodicGrid(std::size_t n_points, double length)
      : n_(n_points), length_(length) {
    if (n_ < 8 || n_ % 2 != 0)
      throw ParameterError("grid: n_points must be even and >= 8");
    if (!(length_ > 0.0))
      throw ParameterError("grid: length must be positive");
  }

  std::size_t size() const { return n_; }
  double length() const { return length_; }
  double spacing() const { return length_ / static_cast<double>(n_); }
  double node(std::size_t j) const {
    return -0.5 * length_ + static_cast<double>(j) * spacing();
  }
  // m may be any integer; callers index modes in {-n/2+1, .., n/2}.
  double wavenumber(long m) const {
    return 2.0 * pi * static_cast<double>(m) / length_;
  }
  long max_mode() const { return static_cast<long>(n_) / 2; }

  bool operator==(const PeriodicGrid& o) const {
    return n_ == o.n_ && length_ == o.length_;
  }

 private:
  std::size_t n_;
  double length_;
};

// Real-valued samples at the nodes of a PeriodicGrid.
class RealField {
 public:
  explicit RealField(const PeriodicGrid& grid)
      : grid_(grid), samples_(grid.size(), 0.0) {}
  RealField(const PeriodicGrid& grid, std::vector<double> samples)
      : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.size())
      throw ParameterError("RealField: sample count does not match grid");
  }

  template <class F>
  static RealField from_function(const PeriodicGrid& grid, F&& f) {
    RealField u(grid);
    for (std::size_t j = 0; j < grid.size(); ++j) u[j] = f(grid.node(j));
    return u;
  }

  const PeriodicGrid& grid() const { return grid_; }
  std::size_t size() const { return samples_.size(); }
  double& operator[](std::size_t j) { return samples_[j]; }
  double operator[](std::size_t j) const { return samples_[j]; }
  const std::vector<double>& samples() const { return samples_; }
  std::vector<double>& samples() { return samples_; }

  RealField& operator+=(const RealField& o);
  RealField& operator-=(const RealField& o);
  RealField& operator*=(double s);

 private:
  PeriodicGrid grid_;
  std::vector<double> samples_;
};

RealField operator+(RealField a, const RealField& b);
RealField operator-(RealField a, const RealField& b);
RealField operator*(double s, RealField a);

// Complex-valued samples; used for boundary traces u = Re(u) + i Im(u) and
// for complex residual fields.
class ComplexField {
 public:
  explicit ComplexField(const PeriodicGrid& grid)
      : grid_(grid), samples_(grid.size(), std::complex<double>(0.0, 0.0)) {}
  ComplexField(const PeriodicGrid& grid,
               std::vector<std::complex<double>> samples)
      : grid_(grid), samples_(std::move(samples)) {
    if (samples_.size() != grid_.size())
      throw ParameterError("ComplexField: sample count does not match grid");
  }
  ComplexField(const RealField& re, const RealField& im);

  const PeriodicGrid& grid() const { return grid_; }
  std::size_t size() const { return samples_.size(); }
  std::complex<double>& operator[](std::size_t j) { return samples_[j]; }
  std::complex<double> operator[](std::size_t j) const { return samples_[j]; }
  const std::vector<std::complex<double>>& samples() const { return samples_; }

  RealField real_part() const;
  RealField imag_part() const;

  ComplexField& operator+=(const ComplexField& o);
  ComplexField& operator-=(const ComplexField& o);
  ComplexField& operator*=(std::complex<double> s);

 private:
  PeriodicGrid grid_;
  std::vector<std::complex<double>> samples_;
};

ComplexField operator+(ComplexField a, const ComplexField& b);
ComplexField operator-(ComplexField a, const ComplexField& b);
ComplexField operator*(std::complex<double> s, ComplexField a);

}  // namespace holowave
