#pragma once

#include <functional>
#include <string>

#include "langevin/errors.hpp"

namespace langevin {

// One-dimensional log-density potential g with derivatives up to order 5.
struct Potential1D {
  std::string label;
  // eval_deriv(k, t) = g^(k)(t), k in {0, ..., 5}.
  std::function<double(int, double)> eval_deriv;

  double operator()(int k, double t) const { return eval_deriv(k, t); }
};

// g(t) = -t^2 / 2 (standard Gaussian).
Potential1D gaussian_potential();

// g(t) = -t^4/4 + t^2/2 (bimodal double well).
Potential1D double_well_potential();

// Density with tails proportional to exp(-gamma |x|^beta) outside radius
// r_pi.  Inside, an even quartic bridge matches g, g', g'' at the boundary.
// r_pi = 0 is accepted when beta >= 2 (the pure tail formula is already C^3
// there); for beta < 2 a smoothing radius of 1e-3 is substituted.
struct ExponentialClassSpec {
  double beta;
  double gamma;
  double r_pi = 0.0;
};

Potential1D exponential_class_potential(const ExponentialClassSpec& spec);

// The radius actually used after the r_pi = 0 adjustment above.
double exponential_class_effective_radius(const ExponentialClassSpec& spec);

}  // namespace langevin
