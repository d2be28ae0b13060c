#include "langevin/asymptotics.hpp"

#include <cmath>

namespace langevin {

C5Variant parse_c5_variant(const std::string& name) {
  if (name == "fm" || name == "fmala") return C5Variant::fM;
  if (name == "mo" || name == "moma") return C5Variant::mO;
  if (name == "bo" || name == "boma") return C5Variant::bO;
  if (name == "gbo" || name == "gboma") return C5Variant::gbO;
  throw ConfigError("unknown asymptotic variant: '" + name + "'");
}

std::string c5_variant_name(C5Variant v) {
  switch (v) {
    case C5Variant::fM: return "fm";
    case C5Variant::mO: return "mo";
    case C5Variant::bO: return "bo";
    case C5Variant::gbO: return "gbo";
  }
  return "?";
}

double c5_eval(C5Variant variant, const Potential1D& g, double x, double xi,
               double ell, double a1, double a3, double a4) {
  const double g1 = g(1, x), g2 = g(2, x), g3 = g(3, x), g4 = g(4, x),
               g5 = g(5, x);
  const double xi2 = xi * xi, xi3 = xi2 * xi, xi5 = xi3 * xi2;
  const double l5 = std::pow(ell, 5);
  switch (variant) {
    case C5Variant::fM:
      return l5 / 720.0 *
             (xi5 * g5 + 5.0 * xi3 * g5 + 15.0 * xi3 * g4 * g1 +
              15.0 * xi * g4 * g1 + 30.0 * xi3 * g3 * g2 +
              10.0 * xi * g3 * g2 + 30.0 * xi * g3 * g1 * g1 +
              35.0 * xi * g1 * g2 * g2);
    case C5Variant::mO:
      return l5 * (xi5 * g5 / 720.0 + xi3 * g5 / 144.0 +
                   xi3 * g4 * g1 / 48.0 + xi * g4 * g1 / 48.0 +
                   29.0 / 144.0 * xi3 * g3 * g2 - 7.0 / 48.0 * xi * g3 * g2 +
                   xi * g3 * g1 * g1 / 24.0 + xi * g1 * g2 * g2 / 6.0);
    case C5Variant::bO:
      return l5 * (xi5 * g5 / 720.0 + xi3 * g5 / 144.0 +
                   xi3 * g4 * g1 / 48.0 + xi * g4 * g1 / 48.0 +
                   29.0 / 144.0 * xi3 * g3 * g2 - 19.0 / 144.0 * xi * g3 * g2 +
                   xi * g3 * g1 * g1 / 24.0 + xi * g1 * g2 * g2 / 6.0);
    case C5Variant::gbO: {
      const double a12 = a1 * a1, a42 = a4 * a4;
      return l5 * (xi5 * g5 / 720.0 + xi3 * g5 / 144.0 +
                   xi3 * g4 * g1 / 48.0 + xi * g4 * g1 / 48.0 +
                   a3 * xi * g3 * g2 / 72.0 + a42 * xi3 * g3 * g2 / 6.0 -
                   a42 * xi * g3 * g2 / 6.0 + 5.0 / 144.0 * xi3 * g3 * g2 +
                   xi * g3 * g2 / 48.0 + xi * g3 * g1 * g1 / 24.0 -
                   a12 * xi * g1 * g2 * g2 / 24.0 +
                   a42 * xi * g1 * g2 * g2 / 6.0 + xi * g1 * g2 * g2 / 24.0);
    }
  }
  throw Error("c5_eval: bad variant");
}

namespace {

// Closed-form integrands whose mean over X ~ pi_1 is K^2.
double k2_integrand_fM(double g1, double g2, double g3, double g4, double g5) {
  return 79.0 * g5 * g5 / 17280.0 + 11.0 * g4 * g4 * g1 * g1 / 1152.0 +
         77.0 * g3 * g3 * g2 * g2 / 2592.0 +
         g3 * g3 * g1 * g1 * g1 * g1 / 576.0 +
         49.0 * g1 * g1 * g2 * g2 * g2 * g2 / 20736.0 +
         7.0 * g4 * g5 * g1 / 576.0 + 19.0 * g3 * g5 * g2 / 864.0 +
         g3 * g5 * g1 * g1 / 288.0 + 7.0 * g5 * g1 * g2 * g2 / 1728.0 +
         g3 * g4 * g1 * g1 * g1 / 144.0 +
         7.0 * g4 * g1 * g1 * g2 * g2 / 864.0 +
         7.0 * g3 * g1 * g1 * g1 * g2 * g2 / 1728.0 +
         5.0 * g3 * g3 * g1 * g1 * g2 / 432.0 +
         35.0 * g3 * g1 * g2 * g2 * g2 / 2592.0 +
         29.0 * g3 * g4 * g1 * g2 / 864.0;
}

double k2_integrand_mO(double g1, double g2, double g3, double g4, double g5) {
  return 79.0 * g5 * g5 / 17280.0 + 11.0 * g4 * g4 * g1 * g1 / 1152.0 +
         1567.0 * g3 * g3 * g2 * g2 / 3456.0 +
         g3 * g3 * g1 * g1 * g1 * g1 / 576.0 +
         g1 * g1 * g2 * g2 * g2 * g2 / 36.0 + 7.0 * g4 * g5 * g1 / 576.0 +
         17.0 * g3 * g5 * g2 / 192.0 + g3 * g5 * g1 * g1 / 288.0 +
         g5 * g1 * g2 * g2 / 72.0 + g3 * g4 * g1 * g1 * g1 / 144.0 +
         g4 * g1 * g1 * g2 * g2 / 36.0 +
         g3 * g1 * g1 * g1 * g2 * g2 / 72.0 +
         11.0 * g3 * g3 * g1 * g1 * g2 / 288.0 +
         11.0 * g3 * g1 * g2 * g2 * g2 / 72.0 +
         73.0 * g3 * g4 * g1 * g2 / 576.0;
}

double k2_integrand_gbO(double g1, double g2, double g3, double g4, double g5,
                        double a1, double a3, double a4) {
  const double a12 = a1 * a1, a14 = a12 * a12;
  const double a42 = a4 * a4, a44 = a42 * a42;
  const double g12 = g1 * g1, g13 = g12 * g1, g14 = g12 * g12;
  const double g22 = g2 * g2, g23 = g22 * g2, g24 = g22 * g22;
  const double g32 = g3 * g3;
  return g12 * g24 * a44 / 36.0 + 5.0 * g22 * g32 * a44 / 18.0 +
         g1 * g23 * g3 * a44 / 9.0 - a12 * g12 * g24 * a42 / 72.0 +
         g12 * g24 * a42 / 72.0 + 11.0 * g22 * g32 * a42 / 72.0 +
         a3 * g22 * g32 * a42 / 108.0 + g12 * g2 * g32 * a42 / 36.0 -
         a12 * g1 * g23 * g3 * a42 / 36.0 + 5.0 * g1 * g23 * g3 * a42 / 72.0 +
         a3 * g1 * g23 * g3 * a42 / 216.0 + g13 * g22 * g3 * a42 / 72.0 +
         g12 * g22 * g4 * a42 / 36.0 + 7.0 * g1 * g2 * g3 * g4 * a42 / 72.0 +
         g1 * g22 * g5 * a42 / 72.0 + 5.0 * g2 * g3 * g5 * a42 / 72.0 +
         a14 * g12 * g24 / 576.0 - a12 * g12 * g24 / 288.0 +
         g12 * g24 / 576.0 + g14 * g32 / 576.0 +
         a3 * a3 * g22 * g32 / 5184.0 + a3 * g22 * g32 / 288.0 +
         79.0 * g22 * g32 / 3456.0 + g12 * g2 * g32 / 96.0 +
         a3 * g12 * g2 * g32 / 864.0 + 11.0 * g12 * g4 * g4 / 1152.0 +
         79.0 * g5 * g5 / 17280.0 - a12 * g1 * g23 * g3 / 96.0 +
         g1 * g23 * g3 / 96.0 - a12 * a3 * g1 * g23 * g3 / 864.0 +
         a3 * g1 * g23 * g3 / 864.0 - a12 * g13 * g22 * g3 / 288.0 +
         g13 * g22 * g3 / 288.0 - a12 * g12 * g22 * g4 / 144.0 +
         g12 * g22 * g4 / 144.0 + g13 * g3 * g4 / 144.0 +
         17.0 * g1 * g2 * g3 * g4 / 576.0 + a3 * g1 * g2 * g3 * g4 / 432.0 -
         a12 * g1 * g22 * g5 / 288.0 + g1 * g22 * g5 / 288.0 +
         g12 * g3 * g5 / 288.0 + 11.0 * g2 * g3 * g5 / 576.0 +
         a3 * g2 * g3 * g5 / 864.0 + 7.0 * g1 * g4 * g5 / 576.0;
}

}  // namespace

std::vector<double> sample_potential_1d(const Potential1D& g, std::size_t n,
                                        std::mt19937_64& rng) {
  std::vector<double> out;
  out.reserve(n);
  if (g.label == "gaussian") {
    std::normal_distribution<double> normal;
    for (std::size_t i = 0; i < n; ++i) out.push_back(normal(rng));
    return out;
  }
  // Auxiliary 1D RWM chain: burn-in 1e4, thinning 20.
  const std::size_t burn = 10000, thin = 20;
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double step = 2.4;
  double x = 0.0, gx = g(0, x);
  auto advance = [&]() {
    const double y = x + step * normal(rng);
    const double gy = g(0, y);
    if (std::log(unif(rng)) < gy - gx) {
      x = y;
      gx = gy;
    }
  };
  for (std::size_t k = 0; k < burn; ++k) advance();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < thin; ++k) advance();
    out.push_back(x);
  }
  return out;
}

AsymptoticConstants k_constant(C5Variant variant, const Potential1D& g,
                               std::size_t n_samples, std::mt19937_64& rng,
                               double a1, double a3, double a4) {
  if (n_samples < 2) throw ConfigError("k_constant: n_samples too small");
  std::vector<double> xs = sample_potential_1d(g, n_samples, rng);
  // Welford accumulation of the integrand mean and variance.
  double mean = 0.0, m2 = 0.0;
  std::size_t count = 0;
  for (double x : xs) {
    const double g1 = g(1, x), g2 = g(2, x), g3 = g(3, x), g4 = g(4, x),
                 g5 = g(5, x);
    double v;
    switch (variant) {
      case C5Variant::fM: v = k2_integrand_fM(g1, g2, g3, g4, g5); break;
      case C5Variant::mO: v = k2_integrand_mO(g1, g2, g3, g4, g5); break;
      case C5Variant::bO:
        v = k2_integrand_gbO(g1, g2, g3, g4, g5, 1.0, 1.0, 1.0);
        break;
      case C5Variant::gbO:
        v = k2_integrand_gbO(g1, g2, g3, g4, g5, a1, a3, a4);
        break;
      default: throw Error("k_constant: bad variant");
    }
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  const double se =
      std::sqrt(m2 / static_cast<double>(count - 1) / static_cast<double>(count));
  if (mean < -3.0 * se)
    throw NegativeEstimate("k_constant: mean integrand negative beyond 3 SE");
  AsymptoticConstants out;
  out.variant = c5_variant_name(variant);
  out.k2_mean = mean;
  out.mc_std_error = se;
  out.n_samples = n_samples;
  out.k_value = std::sqrt(std::max(mean, 0.0));
  return out;
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }

double limit_acceptance(double ell, double k) {
  return 2.0 * normal_cdf(-0.5 * k * std::pow(ell, 5));
}

double limit_speed(double ell, double k) {
  return 2.0 * ell * ell * normal_cdf(-0.5 * k * std::pow(ell, 5));
}

OptimalEll optimal_ell(double k) {
  if (k <= 0.0) throw DegenerateK("optimal_ell: k must be positive");
  // The optimum sits where k l^5 / 2 ~ 0.3795, i.e. at l ~ center.  Keep the
  // bracket tight enough that the speed does not underflow at the probes
  // (k l^5 grows fast), which would flatten the search.
  const double center = std::pow(2.0 * 0.3795 / k, 0.2);
  double lo = 0.2 * center, hi = 2.5 * center;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  double fc = limit_speed(c, k), fd = limit_speed(d, k);
  while (b - a > 1e-12 * center) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = limit_speed(c, k);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = limit_speed(d, k);
    }
  }
  const double ell_star = 0.5 * (a + b);
  return {ell_star, limit_acceptance(ell_star, k)};
}

}  // namespace langevin
