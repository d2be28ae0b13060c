#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "langevin/jacobian.hpp"
#include "langevin/potential.hpp"

namespace langevin {

// A target density pi on R^d together with exactly the derivative
// information the proposals consume: the drift f = grad log pi, its Jacobian
// Df, and the Hessian contraction (component i = Laplacian of f_i, since the
// diffusion covariance is fixed to the identity throughout this library).
struct TargetModel {
  long dim = 0;
  std::string label;
  std::function<double(const Eigen::VectorXd&)> log_density_unnorm;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> drift;
  std::function<JacobianRep(const Eigen::VectorXd&)> jacobian;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> hessian_contraction;
  // Records the (fixed) choice of diffusion covariance.
  static constexpr bool identity_covariance = true;
};

// pi(x) proportional to prod_i exp(g(x_i)).
TargetModel make_product_target(const Potential1D& g, long d);

// One-dimensional (by default) member of the exponential tail class.
TargetModel make_exponential_class_target(const ExponentialClassSpec& spec,
                                          long d = 1);

// Non-product AR(1) chain of Cauchy factors:
//   log pi(x) = -sum_i log(1 + (x_i - alpha(x_{i-1}))^2) + const,  x_0 = 0,
// with link alpha(x) = x/2 or sin(x).  Drift, tridiagonal Jacobian, and
// Hessian contraction all cost O(d).
enum class Ar1Link { Half, Sine };

struct Ar1CauchySpec {
  long dim;
  Ar1Link link = Ar1Link::Half;
};

TargetModel make_ar1_target(const Ar1CauchySpec& spec);

struct FdReport {
  double drift_err;        // drift vs finite differences of log-density
  double jacobian_err;     // jacobian columns vs finite differences of drift
  double contraction_err;  // contraction vs finite differences of jacobian
};

// Max relative errors of the analytic derivative chain against central
// finite differences at the given step.  Test plumbing; never used by
// samplers.
FdReport fd_consistency_check(const TargetModel& target,
                              const Eigen::VectorXd& x, double step);

}  // namespace langevin
