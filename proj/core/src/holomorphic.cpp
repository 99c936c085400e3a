#include "holowave/holomorphic.hpp"

#include <cmath>

namespace holowave {

HolomorphicBoundaryFunction HolomorphicBoundaryFunction::from_parts(
    const RealField& re, const RealField& im, double depth, double tol) {
  if (!(depth > 0.0))
    throw ParameterError("holomorphic function: depth must be positive");
  if (!(re.grid() == im.grid()))
    throw ParameterError("holomorphic function: re/im grids differ");
  const double defect = l2_norm(im + tilbert(re, depth));
  if (defect > tol * (1.0 + l2_norm(re)))
    throw ParameterError("holomorphic function: holomorphy defect " +
                         std::to_string(defect) + " exceeds tolerance");
  if (std::abs(mean(im)) > tol * (1.0 + l2_norm(im)))
    throw ZeroModeError("holomorphic function: imaginary part carries a mean");
  return HolomorphicBoundaryFunction(re, im, depth);
}

HolomorphicBoundaryFunction make_holomorphic(const RealField& re, double h) {
  if (!(h > 0.0))
    throw ParameterError("make_holomorphic: depth must be positive");
  RealField im = tilbert(re, h);
  im *= -1.0;
  return HolomorphicBoundaryFunction(re, std::move(im), h);
}

HolomorphicBoundaryFunction project_Ph(const ComplexField& u, double h,
                                       double zero_mean_tol) {
  if (!(h > 0.0)) throw ParameterError("project_Ph: depth must be positive");
  const PeriodicGrid& grid = u.grid();
  RealField a = u.real_part();
  RealField b = u.imag_part();
  if (std::abs(mean(b)) > zero_mean_tol * l2_norm(b))
    throw ZeroModeError(
        "project_Ph: Im(u) has a non-negligible mean; the inverse Tilbert "
        "transform is undefined there");

  SpectralField A = to_spectral(a);
  SpectralField B = to_spectral(b);
  SpectralField R(grid);
  SpectralField I(grid);
  const long nyq = grid.max_mode();
  for (long k = -nyq + 1; k < nyq; ++k) {
    if (k == 0) continue;
    const double t = std::tanh(h * grid.wavenumber(k));
    const std::complex<double> tilb(0.0, -t);       // T_h
    const std::complex<double> tilb_inv(0.0, 1.0 / t);  // T_h^{-1}
    R.coeff(k) = 0.5 * (A.coeff(k) - tilb_inv * B.coeff(k));
    I.coeff(k) = 0.5 * (B.coeff(k) - tilb * A.coeff(k));
  }
  // Unpaired modes: real content is holomorphic on its own and is kept;
  // imaginary content (gated above, or invisible at the Nyquist nodes) is
  // dropped.
  R.coeff(0) = A.coeff(0).real();
  R.coeff(nyq) = A.coeff(nyq).real();
  return HolomorphicBoundaryFunction(to_real(R), to_real(I), h);
}

RealField im_part_of_projection(const ComplexField& u, double h) {
  if (!(h > 0.0))
    throw ParameterError("im_part_of_projection: depth must be positive");
  RealField out = u.imag_part() - tilbert(u.real_part(), h);
  out *= 0.5;
  return out;
}

double tilbert_product_defect(const RealField& u, const RealField& v,
                              double h) {
  if (!(u.grid() == v.grid()))
    throw ParameterError("tilbert_product_defect: grids differ");
  // Everything on the 2x grid so the quadratic terms cannot alias.
  RealField uf = pad_resample(u, 2);
  RealField vf = pad_resample(v, 2);
  RealField tu = tilbert(uf, h);
  RealField tv = tilbert(vf, h);
  RealField lhs(uf.grid());
  RealField inner_arg(uf.grid());
  for (std::size_t j = 0; j < uf.size(); ++j) {
    lhs[j] = uf[j] * tv[j] + tu[j] * vf[j];
    inner_arg[j] = uf[j] * vf[j] - tu[j] * tv[j];
  }
  return l2_norm(lhs - tilbert(inner_arg, h));
}

double holomorphy_defect(const ComplexField& u, double h) {
  return l2_norm(u.imag_part() + tilbert(u.real_part(), h));
}

}  // namespace holowave
