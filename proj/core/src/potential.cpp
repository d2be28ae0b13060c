#include "langevin/potential.hpp"

#include <cmath>

namespace langevin {

Potential1D gaussian_potential() {
  return {"gaussian", [](int k, double t) -> double {
            switch (k) {
              case 0: return -0.5 * t * t;
              case 1: return -t;
              case 2: return -1.0;
              default: return 0.0;
            }
          }};
}

Potential1D double_well_potential() {
  return {"double-well", [](int k, double t) -> double {
            switch (k) {
              case 0: return -0.25 * t * t * t * t + 0.5 * t * t;
              case 1: return -t * t * t + t;
              case 2: return -3.0 * t * t + 1.0;
              case 3: return -6.0 * t;
              case 4: return -6.0;
              default: return 0.0;
            }
          }};
}

double exponential_class_effective_radius(const ExponentialClassSpec& spec) {
  if (spec.r_pi > 0.0) return spec.r_pi;
  return spec.beta >= 2.0 ? 0.0 : 1e-3;
}

namespace {

// Tail derivative: d^k/dx^k of -gamma |x|^beta
//   = -gamma * beta (beta-1) ... (beta-k+1) * |x|^{beta-k} * sign(x)^k.
double tail_deriv(double beta, double gamma, int k, double x) {
  double coeff = -gamma;
  for (int j = 0; j < k; ++j) coeff *= beta - j;
  if (coeff == 0.0) return 0.0;
  const double ax = std::abs(x);
  double mag;
  if (ax == 0.0) {
    if (beta - k > 0.0) return 0.0;
    if (beta - k == 0.0) return coeff;
    // Noninteger beta < k: unbounded at the single point 0; return 0 there
    // (r = 0 is only admitted for beta >= 2, where orders <= 2 are fine).
    return 0.0;
  } else {
    mag = std::pow(ax, beta - k);
  }
  const double s = (k % 2 == 1 && x < 0.0) ? -1.0 : 1.0;
  return coeff * mag * s;
}

}  // namespace

Potential1D exponential_class_potential(const ExponentialClassSpec& spec) {
  if (spec.beta <= 0.0 || spec.gamma <= 0.0)
    throw ConfigError("exponential_class_potential: beta and gamma must be positive");
  const double beta = spec.beta, gamma = spec.gamma;
  const double r = exponential_class_effective_radius(spec);

  // Even quartic bridge c0 + c1 x^2 + c2 x^4 matching g, g', g'' at r.
  double c0 = 0.0, c1 = 0.0, c2 = 0.0;
  if (r > 0.0) {
    const double G = tail_deriv(beta, gamma, 0, r);
    const double G1 = tail_deriv(beta, gamma, 1, r);
    const double G2 = tail_deriv(beta, gamma, 2, r);
    c2 = (G2 - G1 / r) / (8.0 * r * r);
    c1 = (G1 - 4.0 * c2 * r * r * r) / (2.0 * r);
    c0 = G - c1 * r * r - c2 * r * r * r * r;
  }

  return {"exponential", [beta, gamma, r, c0, c1, c2](int k, double t) -> double {
            if (std::abs(t) >= r)
              return tail_deriv(beta, gamma, k, t);
            switch (k) {
              case 0: return c0 + c1 * t * t + c2 * t * t * t * t;
              case 1: return 2.0 * c1 * t + 4.0 * c2 * t * t * t;
              case 2: return 2.0 * c1 + 12.0 * c2 * t * t;
              case 3: return 24.0 * c2 * t;
              case 4: return 24.0 * c2;
              default: return 0.0;
            }
          }};
}

}  // namespace langevin
