#pragma once

#include "holowave/spectral.hpp"

namespace holowave {

// Boundary trace, on the top of the strip R x (-h, 0), of a holomorphic
// function that is real on the bottom. Such traces satisfy
//
//   Im(u) = -T_h Re(u)
//
// with T_h the Tilbert transform. The imaginary part carries no mean: the
// constant directions of the class are purely real.
class HolomorphicBoundaryFunction {
 public:
  // Validates the holomorphy defect ||im + T_h re||_2 <= tol (1 + ||re||_2)
  // and that im is mean-free.
  static HolomorphicBoundaryFunction from_parts(const RealField& re,
                                                const RealField& im,
                                                double depth,
                                                double tol = 1e-8);

  const RealField& re() const { return re_; }
  const RealField& im() const { return im_; }
  double depth() const { return depth_; }
  const PeriodicGrid& grid() const { return re_.grid(); }
  ComplexField complex_trace() const { return ComplexField(re_, im_); }

 private:
  HolomorphicBoundaryFunction(RealField re, RealField im, double depth)
      : re_(std::move(re)), im_(std::move(im)), depth_(depth) {}
  friend HolomorphicBoundaryFunction make_holomorphic(const RealField&,
                                                      double);
  friend HolomorphicBoundaryFunction project_Ph(const ComplexField&, double,
                                                double);

  RealField re_;
  RealField im_;
  double depth_;
};

// Canonical completion (re, -T_h re); the defect is machine-zero by
// construction.
HolomorphicBoundaryFunction make_holomorphic(const RealField& re, double h);

// Projection onto the holomorphic class,
//
//   P_h u = 1/2 [ (1 - i T_h) Re(u) + i (1 + i T_h^{-1}) Im(u) ],
//
// applied mode by mode. The grid's unpaired modes need a convention: the
// real mean and real Nyquist content are themselves holomorphic and pass
// through unchanged (this is what makes P_h idempotent and fixes constants),
// while imaginary content there cannot belong to the class -- a mean in
// Im(u) above zero_mean_tol * ||Im u||_2 raises ZeroModeError.
HolomorphicBoundaryFunction project_Ph(const ComplexField& u, double h,
                                       double zero_mean_tol = 1e-10);

// Im(P_h u) = 1/2 [ Im(u) - T_h Re(u) ]; needs no inverse transform and so
// no zero-mode gate.
RealField im_part_of_projection(const ComplexField& u, double h);

// L2 defect of the Tilbert product rule
//   u T_h[v] + T_h[u] v = T_h[u v - T_h[u] T_h[v]]
// evaluated with 2x-padded products; small whenever u, v are resolved.
double tilbert_product_defect(const RealField& u, const RealField& v,
                              double h);

// ||Im(u) + T_h Re(u)||_2.
double holomorphy_defect(const ComplexField& u, double h);

}  // namespace holowave
