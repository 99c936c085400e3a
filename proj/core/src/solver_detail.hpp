#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <vector>

#include "holowave/newton.hpp"

namespace holowave::detail {

using Eigen::MatrixXd;
using Eigen::VectorXd;

std::vector<double> to_std(const VectorXd& v);
VectorXd to_eigen(const std::vector<double>& v);

struct EvalResult {
  VectorXd residual;
  double field_norm = 0.0;
};

// A square root-finding problem in one unknown vector; eval returns nullopt
// for inadmissible states (delta violations, transcendental overflow).
struct NewtonProblem {
  std::function<std::optional<EvalResult>(const VectorXd&)> eval;
  std::function<MatrixXd(const VectorXd&)> jacobian;
  std::function<VectorXd(const VectorXd&, const VectorXd&)> apply_jacobian;
  VectorXd precond_diag;
};

NewtonResult run_newton(NewtonProblem& prob, VectorXd x,
                        const NewtonConfig& cfg);

// The steady problems parameterized by the speed c, shared between the
// plain solver and the continuation corrector. For the full kind the state
// vector carries the Bernoulli constant as its last entry.
struct CurveProblem {
  std::size_t dim = 0;
  std::function<std::optional<EvalResult>(const VectorXd&, double)> eval;
  std::function<MatrixXd(const VectorXd&, double)> jacobian;
  std::function<VectorXd(const VectorXd&, double, const VectorXd&)>
      apply_jacobian;
  VectorXd precond_diag;
};

CurveProblem make_sinh_curve(const PeriodicGrid& grid,
                             const WaveParameters& base,
                             const NewtonConfig& cfg);
CurveProblem make_full_curve(const PeriodicGrid& grid,
                             const WaveParameters& base,
                             const NewtonConfig& cfg);

}  // namespace holowave::detail
