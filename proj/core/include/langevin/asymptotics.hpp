#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "langevin/potential.hpp"

namespace langevin {

enum class C5Variant { fM, mO, bO, gbO };

C5Variant parse_c5_variant(const std::string& name);  // "fm", "mo", "bo", "gbo"
std::string c5_variant_name(C5Variant v);

// Fifth-order expansion coefficient C5(x, xi) of the log acceptance ratio,
// a polynomial in xi and the derivatives of g, homogeneous of degree 5 in l
// and odd in xi.  a1/a3/a4 only matter for the gbO variant.
double c5_eval(C5Variant variant, const Potential1D& g, double x, double xi,
               double ell, double a1 = 1.0, double a3 = 1.0, double a4 = 1.0);

// The variant constant K governing the limit curves, estimated as
// K = sqrt(mean of the closed-form integrand over X ~ pi_1).
struct AsymptoticConstants {
  std::string variant;
  double k_value = 0.0;
  double k2_mean = 0.0;      // Monte-Carlo mean of the squared-constant integrand
  double mc_std_error = 0.0; // standard error of k2_mean
  std::size_t n_samples = 0;
};

// Monte-Carlo evaluation of K.  X ~ pi_1 is drawn exactly for the Gaussian
// potential, otherwise by a long thinned auxiliary RWM chain.  Throws
// NegativeEstimate if the mean integrand is negative beyond 3 SE.
AsymptoticConstants k_constant(C5Variant variant, const Potential1D& g,
                               std::size_t n_samples, std::mt19937_64& rng,
                               double a1 = 1.0, double a3 = 1.0,
                               double a4 = 1.0);

// Draw (approximately) from the density proportional to exp(g); exact for
// the Gaussian potential, thinned RWM otherwise.
std::vector<double> sample_potential_1d(const Potential1D& g, std::size_t n,
                                        std::mt19937_64& rng);

// Standard normal CDF via erfc; absolute error < 1e-12.
double normal_cdf(double t);

// Limiting acceptance a(l) = 2 Phi(-k l^5 / 2) and speed
// h(l) = 2 l^2 Phi(-k l^5 / 2).
double limit_acceptance(double ell, double k);
double limit_speed(double ell, double k);

struct OptimalEll {
  double ell_star;
  double acceptance_at_star;  // 0.704343 for every k > 0
};

// Maximizer of the limiting speed curve (golden-section search).
// Throws DegenerateK for k <= 0.
OptimalEll optimal_ell(double k);

}  // namespace langevin
