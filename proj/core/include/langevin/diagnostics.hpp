#pragma once

#include <vector>

#include "langevin/sampler.hpp"

namespace langevin {

enum class CoordMode { First, FullMean };

// First-order efficiency over post-burn-in steps:
//   First    : mean of (x1_{k+1} - x1_k)^2       (requires stride 1)
//   FullMean : mean of ||X_{k+1} - X_k||^2 / d
double first_order_efficiency(const ChainTrace& trace,
                              CoordMode mode = CoordMode::First);

// Fraction of accepted steps after burn-in.
double acceptance_rate(const ChainTrace& trace);

// Fraction of accepted steps among the first n steps (no burn-in exclusion).
double acceptance_rate_first(const ChainTrace& trace, std::size_t n);

// Autocorrelation function, biased estimator (divide by N) with overall mean
// subtraction; acf[0] = 1.
std::vector<double> acf(const std::vector<double>& series, int max_lag);

// Bartlett large-lag standard error of the ACF estimate at the given lag.
double acf_stderr(const std::vector<double>& rho, int lag, std::size_t n);

}  // namespace langevin
