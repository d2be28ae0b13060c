#include "langevin/diagnostics.hpp"

#include <cmath>

namespace langevin {

double first_order_efficiency(const ChainTrace& trace, CoordMode mode) {
  const std::size_t n = trace.accepted.size();
  if (n == 0 || trace.burn_in >= n)
    throw EmptyTrace("first_order_efficiency: no post-burn-in steps");
  if (mode == CoordMode::First) {
    if (trace.recorded_every != 1)
      throw EmptyTrace("first_order_efficiency: First mode needs stride 1");
    double s = 0.0;
    std::size_t count = 0;
    for (std::size_t k = trace.burn_in; k < n; ++k) {
      const double dx = trace.first_coord[k + 1] - trace.first_coord[k];
      s += dx * dx;
      ++count;
    }
    return s / static_cast<double>(count);
  }
  double s = 0.0;
  std::size_t count = 0;
  for (std::size_t k = trace.burn_in; k < n; ++k) {
    s += trace.proposal_sq_jump[k];
    ++count;
  }
  return s / (static_cast<double>(count) * static_cast<double>(trace.dim));
}

double acceptance_rate(const ChainTrace& trace) {
  const std::size_t n = trace.accepted.size();
  if (n == 0 || trace.burn_in >= n)
    throw EmptyTrace("acceptance_rate: no post-burn-in steps");
  std::size_t acc = 0, count = 0;
  for (std::size_t k = trace.burn_in; k < n; ++k) {
    acc += trace.accepted[k];
    ++count;
  }
  return static_cast<double>(acc) / static_cast<double>(count);
}

double acceptance_rate_first(const ChainTrace& trace, std::size_t n) {
  if (trace.accepted.empty()) throw EmptyTrace("acceptance_rate_first: empty");
  n = std::min(n, trace.accepted.size());
  std::size_t acc = 0;
  for (std::size_t k = 0; k < n; ++k) acc += trace.accepted[k];
  return static_cast<double>(acc) / static_cast<double>(n);
}

std::vector<double> acf(const std::vector<double>& series, int max_lag) {
  const std::size_t n = series.size();
  if (n <= static_cast<std::size_t>(max_lag))
    throw EmptyTrace("acf: series shorter than max_lag");
  double mean = 0.0;
  for (double v : series) mean += v;
  mean /= static_cast<double>(n);
  std::vector<double> out(max_lag + 1);
  double c0 = 0.0;
  for (double v : series) c0 += (v - mean) * (v - mean);
  c0 /= static_cast<double>(n);
  out[0] = 1.0;
  for (int lag = 1; lag <= max_lag; ++lag) {
    double c = 0.0;
    for (std::size_t k = 0; k + lag < n; ++k)
      c += (series[k] - mean) * (series[k + lag] - mean);
    c /= static_cast<double>(n);  // biased estimator
    out[lag] = c / c0;
  }
  return out;
}

double acf_stderr(const std::vector<double>& rho, int lag, std::size_t n) {
  // Bartlett's large-lag approximation:
  //   var(rho_hat[lag]) ~ (1 + 2 sum_{j<lag} rho[j]^2) / n.
  double s = 0.0;
  for (int j = 1; j < lag && j < static_cast<int>(rho.size()); ++j)
    s += rho[j] * rho[j];
  return std::sqrt((1.0 + 2.0 * s) / static_cast<double>(n));
}

}  // namespace langevin
