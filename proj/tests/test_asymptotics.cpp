#include <doctest.h>

#include <cmath>
#include <random>

#include "langevin/asymptotics.hpp"
#include "langevin/errors.hpp"

using namespace langevin;

TEST_CASE("fifth-order coefficient on the gaussian potential") {
  // With g = -t^2/2 the coefficient collapses to -(7/144) l^5 x xi.
  Potential1D g = gaussian_potential();
  CHECK(c5_eval(C5Variant::fM, g, 2.0, 1.0, 1.0) ==
        doctest::Approx(-7.0 / 144.0 * 2.0).epsilon(1e-12));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int i = 0; i < 50; ++i) {
    const double x = u(rng), xi = u(rng), ell = 0.3 + std::abs(u(rng));
    CHECK(c5_eval(C5Variant::fM, g, x, xi, ell) ==
          doctest::Approx(-7.0 / 144.0 * std::pow(ell, 5) * x * xi)
              .epsilon(1e-10));
  }
}

TEST_CASE("fifth-order coefficient symmetries") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (C5Variant v :
       {C5Variant::fM, C5Variant::mO, C5Variant::bO, C5Variant::gbO}) {
    for (const Potential1D& g :
         {gaussian_potential(), double_well_potential()}) {
      for (int i = 0; i < 30; ++i) {
        const double x = u(rng), xi = u(rng), ell = 0.4 + std::abs(u(rng));
        const double c = c5_eval(v, g, x, xi, ell);
        // Odd in xi.
        CHECK(c5_eval(v, g, x, -xi, ell) ==
              doctest::Approx(-c).epsilon(1e-10));
        // Homogeneous of degree 5 in ell.
        CHECK(c5_eval(v, g, x, xi, 2.0 * ell) ==
              doctest::Approx(32.0 * c).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("gbO at unit parameters reduces to bO") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  Potential1D g = double_well_potential();
  for (int i = 0; i < 40; ++i) {
    const double x = u(rng), xi = u(rng), ell = 0.4 + std::abs(u(rng));
    CHECK(c5_eval(C5Variant::gbO, g, x, xi, ell, 1.0, 1.0, 1.0) ==
          doctest::Approx(c5_eval(C5Variant::bO, g, x, xi, ell))
              .epsilon(1e-11));
  }
}

TEST_CASE("gaussian k constant is 7/144") {
  std::mt19937_64 rng(3);
  AsymptoticConstants c =
      k_constant(C5Variant::fM, gaussian_potential(), 200000, rng);
  const double want = (7.0 / 144.0) * (7.0 / 144.0);
  CHECK(std::abs(c.k2_mean - want) < 3.0 * c.mc_std_error);
  CHECK(c.k_value == doctest::Approx(7.0 / 144.0).epsilon(0.02));
}

TEST_CASE("squared constant matches a direct monte carlo of the coefficient") {
  // E[C5(X, xi)^2] at l = 1 with independent xi ~ N(0,1) should agree with
  // the closed-form integrand average within Monte-Carlo error.
  std::mt19937_64 rng(8);
  Potential1D g = double_well_potential();
  AsymptoticConstants c = k_constant(C5Variant::fM, g, 200000, rng);
  std::mt19937_64 rng2(15);
  std::normal_distribution<double> normal;
  std::vector<double> xs = sample_potential_1d(g, 60000, rng2);
  double mean = 0.0, m2 = 0.0;
  std::size_t n = 0;
  for (double x : xs) {
    const double v = c5_eval(C5Variant::fM, g, x, normal(rng2), 1.0);
    ++n;
    const double d = v * v - mean;
    mean += d / n;
    m2 += d * (v * v - mean);
  }
  const double se = std::sqrt(m2 / (n - 1) / n);
  CHECK(std::abs(mean - c.k2_mean) <
        4.0 * std::sqrt(se * se + c.mc_std_error * c.mc_std_error));
}

TEST_CASE("double-well constants regression") {
  std::mt19937_64 rng(12);
  AsymptoticConstants c =
      k_constant(C5Variant::fM, double_well_potential(), 400000, rng);
  CHECK(c.k2_mean == doctest::Approx(81.44334439178121).epsilon(0.05));
  CHECK(c.k_value == doctest::Approx(9.02459663318983).epsilon(0.03));
  std::mt19937_64 rng2(12);
  AsymptoticConstants cmo =
      k_constant(C5Variant::mO, double_well_potential(), 100000, rng2);
  CHECK(cmo.k_value > 0.0);
  CHECK(std::isfinite(cmo.k_value));
}

TEST_CASE("limit curves and the optimal point") {
  CHECK(normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(normal_cdf(1.96) ==
        doctest::Approx(0.97500210485177957).epsilon(1e-12));
  CHECK(limit_acceptance(0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(limit_speed(1.0, 1.0) ==
        doctest::Approx(2.0 * normal_cdf(-0.5)).epsilon(1e-12));

  OptimalEll opt = optimal_ell(1.0);
  CHECK(opt.ell_star == doctest::Approx(0.94632479).epsilon(1e-6));
  CHECK(opt.acceptance_at_star == doctest::Approx(0.7043419).epsilon(1e-4));
}

TEST_CASE("optimal ell scales as k^(-1/5)") {
  const double base = optimal_ell(1.0).ell_star;
  for (double k : {0.01, 1.0, 100.0}) {
    OptimalEll opt = optimal_ell(k);
    CHECK(opt.ell_star ==
          doctest::Approx(base * std::pow(k, -0.2)).epsilon(1e-6));
    // Universality: acceptance at the maximizer is k-free.
    CHECK(opt.acceptance_at_star ==
          doctest::Approx(0.7043419).epsilon(1e-4));
  }
}

TEST_CASE("error conditions") {
  CHECK_THROWS_AS(optimal_ell(0.0), DegenerateK);
  CHECK_THROWS_AS(optimal_ell(-2.0), DegenerateK);
}

TEST_CASE("variant names") {
  for (const char* n : {"fm", "mo", "bo", "gbo"})
    CHECK(c5_variant_name(parse_c5_variant(n)) == n);
  CHECK_THROWS_AS(parse_c5_variant("zz"), ConfigError);
}

TEST_CASE("potential sampler moments") {
  std::mt19937_64 rng(44);
  std::vector<double> xs =
      sample_potential_1d(double_well_potential(), 200000, rng);
  double mean = 0.0, sq = 0.0;
  for (double x : xs) {
    mean += x;
    sq += x * x;
  }
  mean /= xs.size();
  sq /= xs.size();
  // Symmetric density; second moment 1.0417973 by quadrature for
  // exp(-x^4/4 + x^2/2).
  CHECK(std::abs(mean) < 0.05);
  CHECK(sq == doctest::Approx(1.041797296487157).epsilon(0.05));
}
