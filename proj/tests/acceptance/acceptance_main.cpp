// End-to-end acceptance checks: one PASS/FAIL line per criterion, nonzero
// exit if any fails.  Tolerances are pinned in the code next to each check.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unsupported/Eigen/MatrixFunctions>

#include "langevin/asymptotics.hpp"
#include "langevin/diagnostics.hpp"
#include "langevin/experiments.hpp"

using namespace langevin;

namespace {

int g_failures = 0;

void report(int number, const std::string& name, bool pass,
            const std::string& details) {
  std::printf("criterion %d (%s): %s (%s)\n", number, name.c_str(),
              pass ? "PASS" : "FAIL", details.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

struct SweepPoint {
  double ell, acceptance, efficiency;
};

std::vector<SweepPoint> sweep(const TargetModel& target,
                              const ProposalVariant& v,
                              const std::vector<double>& ells, double gamma0,
                              std::size_t n_steps, std::size_t burn_in,
                              const StartRule& start, std::uint64_t seed,
                              CoordMode mode, std::uint64_t salt_base) {
  std::vector<RunConfig> cfgs;
  for (std::size_t li = 0; li < ells.size(); ++li) {
    RunConfig rc;
    const double h =
        ells[li] * ells[li] * std::pow(double(target.dim), -gamma0);
    rc.kernel = KernelSpec::single(v, h);
    rc.n_steps = n_steps;
    rc.start = start;
    // Common random numbers: seed depends on (dim, ell index), not variant.
    rc.seed = seed ^ (salt_base + 0x9e3779b97f4a7c15ULL * (li + 1));
    rc.burn_in = burn_in;
    cfgs.push_back(rc);
  }
  std::vector<ChainTrace> traces = run_parallel(target, cfgs, 1);
  std::vector<SweepPoint> out;
  for (std::size_t li = 0; li < ells.size(); ++li)
    out.push_back({ells[li], acceptance_rate(traces[li]),
                   first_order_efficiency(traces[li], mode)});
  return out;
}

// ---------------------------------------------------------------------------

void criterion1() {
  // Double-well product target, d = 500, fMALA with h = l^2 d^{-1/5} over a
  // 12-point l grid: the scaled-efficiency maximizer must sit at acceptance
  // 0.704 +/- 0.07.
  const long d = 500;
  TargetModel t = make_product_target(double_well_potential(), d);
  std::vector<double> ells;
  for (int i = 0; i < 12; ++i) ells.push_back(0.30 + 0.06 * i);
  std::vector<SweepPoint> pts =
      sweep(t, ProposalVariant::fmala(), ells, 0.2, 100000, 1000,
            StartRule::origin(), 17, CoordMode::First, 500);
  std::size_t best = 0;
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (pts[i].efficiency > pts[best].efficiency) best = i;
  const double acc = pts[best].acceptance;
  std::ostringstream os;
  os << "argmax ell = " << pts[best].ell << ", acceptance there = " << acc
     << ", want 0.704 +/- 0.07";
  report(1, "double-well optimal acceptance", std::abs(acc - 0.704) <= 0.07,
         os.str());
}

void criterion2() {
  // Stationary Gaussian, d = 1000: fMALA acceptance at l in {0.8, 1.79, 2.5}
  // matches 2 Phi(-(7/144) l^5 / 2) within 0.03, and the Monte-Carlo
  // constant reproduces 7/144 within 3 standard errors.
  const long d = 1000;
  TargetModel t = make_product_target(gaussian_potential(), d);
  const double kg = 7.0 / 144.0;
  std::vector<double> ells{0.8, 1.79, 2.5};
  // Exact stationary start: the Gaussian target is sampled directly.
  Eigen::VectorXd x0(d);
  {
    std::mt19937_64 rng(881);
    std::normal_distribution<double> n;
    for (long i = 0; i < d; ++i) x0[i] = n(rng);
  }
  std::vector<SweepPoint> pts =
      sweep(t, ProposalVariant::fmala(), ells, 0.2, 50000, 2000,
            StartRule::explicit_point(x0), 23, CoordMode::First, 1000);
  // Finite-dimension reference: expected acceptance of one step from an
  // exact stationary draw, by direct Monte Carlo over (x, xi).  A chain
  // estimate matching this but not the limit curve indicates the gap is the
  // asymptotic d -> infinity error, not a sampler defect.
  auto exact_acc = [&](double ell) {
    const double h = ell * ell * std::pow(double(d), -0.2);
    std::mt19937_64 rng(977);
    std::normal_distribution<double> n;
    double mean = 0.0;
    const int reps = 2000;
    for (int r = 0; r < reps; ++r) {
      Eigen::VectorXd x(d), xi(d);
      for (long i = 0; i < d; ++i) {
        x[i] = n(rng);
        xi[i] = n(rng);
      }
      ProposalMoments fwd = moments(ProposalVariant::fmala(), x, h, t);
      Eigen::VectorXd y = sample(fwd, xi);
      ProposalMoments bwd = moments(ProposalVariant::fmala(), y, h, t);
      const double a = t.log_density_unnorm(y) + log_q(bwd, x) -
                       t.log_density_unnorm(x) - log_q(fwd, y);
      mean += std::exp(std::min(0.0, a));
    }
    return mean / reps;
  };
  bool ok = true;
  std::ostringstream os;
  for (const SweepPoint& p : pts) {
    const double want = limit_acceptance(p.ell, kg);
    os << "l=" << p.ell << ": " << p.acceptance << " vs limit " << want
       << " (exact finite-d " << exact_acc(p.ell) << "); ";
    ok = ok && std::abs(p.acceptance - want) <= 0.03;
  }
  std::mt19937_64 rng(71);
  AsymptoticConstants c =
      k_constant(C5Variant::fM, gaussian_potential(), 200000, rng);
  const double want2 = kg * kg;
  os << "k^2 " << c.k2_mean << " vs " << want2 << " (3 se = "
     << 3.0 * c.mc_std_error << ")";
  ok = ok && std::abs(c.k2_mean - want2) <= 3.0 * c.mc_std_error;
  report(2, "gaussian acceptance curve", ok, os.str());
}

void criterion3() {
  // AR(1) target (half link): with h = l^2 d^{-1/5} forced for both
  // variants, the MALA scaled-efficiency maximum collapses as d grows
  // (>= 25% drop from d=100 to d=1000) while the fMALA maxima for
  // d in {100, 500, 1000} stay within a 20% band.
  auto max_eff = [](const ProposalVariant& v, long d) {
    TargetModel t = make_ar1_target({d, Ar1Link::Half});
    std::vector<double> ells;
    for (int i = 0; i < 10; ++i) ells.push_back(0.1 + 0.2 * i);
    std::vector<SweepPoint> pts =
        sweep(t, v, ells, 0.2, 20000, 1000, StartRule::warmstart(), 41,
              CoordMode::FullMean, std::uint64_t(d) * 7919);
    double best = 0.0;
    for (const SweepPoint& p : pts)
      best = std::max(best, std::pow(double(d), 0.2) * p.efficiency);
    return best;
  };
  const double mala100 = max_eff(ProposalVariant::mala(), 100);
  const double mala1000 = max_eff(ProposalVariant::mala(), 1000);
  const double fm100 = max_eff(ProposalVariant::fmala(), 100);
  const double fm500 = max_eff(ProposalVariant::fmala(), 500);
  const double fm1000 = max_eff(ProposalVariant::fmala(), 1000);
  const double fm_lo = std::min({fm100, fm500, fm1000});
  const double fm_hi = std::max({fm100, fm500, fm1000});
  const bool mala_drops = mala1000 <= 0.75 * mala100;
  const bool fm_flat = fm_hi <= 1.20 * fm_lo;
  std::ostringstream os;
  os << "mala max: d=100 " << mala100 << ", d=1000 " << mala1000
     << " (want <= 75%); fmala maxima " << fm100 << ", " << fm500 << ", "
     << fm1000 << " (want within 20%)";
  report(3, "dimension scaling", mala_drops && fm_flat, os.str());
}

void criterion4() {
  // Transient phase, Gaussian d = 1000 from the origin: plain fMALA at its
  // stationary step accepts < 5% of the first 100 proposals, while both
  // hybrid kernels reach the chi-square(1000) 3-sigma band of ||X||^2
  // within 10^4 steps.
  const long d = 1000;
  TargetModel t = make_product_target(gaussian_potential(), d);
  const double lo = double(d) - 3.0 * std::sqrt(2.0 * d);
  const double hi = double(d) + 3.0 * std::sqrt(2.0 * d);

  RunConfig fm;
  const double h_fm = 1.79 * 1.79 * std::pow(double(d), -0.2);
  fm.kernel = KernelSpec::single(ProposalVariant::fmala(), h_fm);
  fm.n_steps = 200;
  fm.start = StartRule::origin();
  fm.seed = 3;
  fm.burn_in = 0;
  ChainTrace fm_trace = run_chain(t, fm);
  const double fm_acc = acceptance_rate_first(fm_trace, 100);

  auto hybrid_hits = [&](const std::string& mate, double h_mate) {
    KernelSpec kernel({{parse_variant(mate), h_mate, 0.5},
                       {ProposalVariant::fmala(), h_fm, 0.5}});
    RunConfig rc;
    rc.kernel = kernel;
    rc.n_steps = 10000;
    rc.start = StartRule::origin();
    rc.seed = 5;
    rc.burn_in = 0;
    ChainTrace trace = run_chain(t, rc);
    for (std::size_t k = 0; k < trace.sq_norm.size(); ++k)
      if (trace.sq_norm[k] >= lo && trace.sq_norm[k] <= hi) return long(k);
    return -1L;
  };
  const long hit_rwm = hybrid_hits("rwm", 2.38 * 2.38 / double(d));
  const long hit_mala = hybrid_hits("mala", 2.0 / std::sqrt(double(d)));

  std::ostringstream os;
  os << "fmala first-100 acceptance " << fm_acc
     << " (want < 0.05); rwm-hybrid hits band at step " << hit_rwm
     << ", mala-hybrid at " << hit_mala << " (want >= 0 within 1e4)";
  report(4, "transient behavior", fm_acc < 0.05 && hit_rwm >= 0 &&
         hit_mala >= 0, os.str());
}

void criterion5() {
  // Stationary Gaussian d = 1000: lag-30 autocorrelation of the first
  // coordinate must order fMALA < MALA < RWM with both gaps exceeding twice
  // the larger Bartlett standard error.
  Config cfg = Config::parse_string(
      "experiment = acf-compare\n"
      "target = gaussian\n"
      "dim = 1000\n"
      "variant = rwm, mala, fmala\n"
      "n_steps = 200000\n"
      "max_lag = 30\n"
      "seed = 11\n");
  CsvReport r = run_acf_compare(cfg);
  double rho[3] = {0, 0, 0}, se[3] = {0, 0, 0};
  const std::string names[3] = {"rwm", "mala", "fmala"};
  std::istringstream is(r.to_string());
  std::string line;
  while (std::getline(is, line)) {
    for (int i = 0; i < 3; ++i)
      if (line.rfind(names[i] + ",30,", 0) == 0) {
        std::istringstream ls(line.substr(names[i].size() + 4));
        std::string acf_s, se_s;
        std::getline(ls, acf_s, ',');
        std::getline(ls, se_s, ',');
        rho[i] = std::stod(acf_s);
        se[i] = std::stod(se_s);
      }
  }
  const double gap1 = rho[0] - rho[1];  // rwm - mala
  const double gap2 = rho[1] - rho[2];  // mala - fmala
  const bool ok = gap1 > 2.0 * std::max(se[0], se[1]) &&
                  gap2 > 2.0 * std::max(se[1], se[2]);
  std::ostringstream os;
  os << "lag-30 acf rwm " << rho[0] << ", mala " << rho[1] << ", fmala "
     << rho[2] << "; gaps " << gap1 << " / " << gap2 << " vs 2se "
     << 2.0 * std::max(se[0], se[1]) << " / " << 2.0 * std::max(se[1], se[2]);
  report(5, "autocorrelation ordering", ok, os.str());
}

void criterion6() {
  // Heavy-tail stability probes: each of the six scripted runs must land in
  // its expected classification.
  Config cfg = Config::parse_string(
      "experiment = ergodicity-probe\n"
      "n_steps = 10000\n"
      "seed = 123\n"
      "probe = fula 4 0.25 0.1 5 diverged\n"
      "probe = fmala 4 0.25 0.1 5 stuck\n"
      "probe = buoa 4 0.25 0.1 5 stable\n"
      "probe = boma 4 0.25 0.1 5 stable\n"
      "probe = fula 2 0.5 0.2 5 stable\n"
      "probe = fula 2 0.5 3.5 5 diverged\n");
  CsvReport r = run_ergodicity_probe(cfg);
  bool ok = true;
  std::ostringstream os;
  std::istringstream is(r.to_string());
  std::string line;
  bool header_seen = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    const std::string& got = cells[5];
    const std::string& want = cells[6];
    os << cells[0] << " b=" << cells[1] << " h=" << cells[3] << ": " << got
       << "/" << want << "; ";
    ok = ok && got == want;
  }
  report(6, "ergodicity probes", ok, os.str());
}

void criterion7() {
  // Condensed property suite.
  bool ok = true;
  std::ostringstream os;

  // Detailed balance of the acceptance rule, 100 random pairs.
  {
    std::mt19937_64 rng(101);
    std::normal_distribution<double> normal;
    double worst = 0.0;
    for (const TargetModel& t :
         {make_product_target(gaussian_potential(), 1),
          make_product_target(double_well_potential(), 3)}) {
      for (ProposalVariant v :
           {ProposalVariant::mala(), ProposalVariant::fmala(),
            ProposalVariant::moma(), ProposalVariant::boma()}) {
        for (int pair = 0; pair < 25; ++pair) {
          Eigen::VectorXd x(t.dim), y(t.dim);
          for (long i = 0; i < t.dim; ++i) {
            x[i] = 1.2 * normal(rng);
            y[i] = 1.2 * normal(rng);
          }
          const double h = 0.1 + 0.1 * std::abs(normal(rng));
          ProposalMoments fwd = moments(v, x, h, t);
          ProposalMoments bwd = moments(v, y, h, t);
          const double a_xy = t.log_density_unnorm(y) + log_q(bwd, x) -
                              t.log_density_unnorm(x) - log_q(fwd, y);
          const double lhs = t.log_density_unnorm(x) + log_q(fwd, y) +
                             std::min(0.0, a_xy);
          const double rhs = t.log_density_unnorm(y) + log_q(bwd, x) +
                             std::min(0.0, -a_xy);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
      }
    }
    os << "detailed balance max err " << worst << " (tol 1e-9); ";
    ok = ok && worst < 1e-9;
  }

  // Series and direct scalar-map branches agree at the switch point.
  {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> uh(0.05, 3.0), us(0.5, 2.0),
        sgn(-1.0, 1.0);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
      const double h = uh(rng), a = uh(rng);
      const double t = std::copysign(us(rng) * series_threshold(h, a),
                                     sgn(rng));
      auto rel = [](double p, double q) {
        return std::abs(p - q) / std::max(1e-300, std::abs(q));
      };
      worst = std::max(worst, rel(t1_scalar_series(t, h, a),
                                  t1_scalar_direct(t, h, a)));
      worst = std::max(worst, rel(t2_scalar_series(t, h, a),
                                  t2_scalar_direct(t, h, a)));
      worst = std::max(worst, rel(t3_scalar_series(t, h, a),
                                  t3_scalar_direct(t, h, a)));
    }
    os << "series/direct max rel err " << worst << " (tol 1e-9); ";
    ok = ok && worst < 1e-9;
  }

  // Spectral application against the dense matrix exponential.
  {
    std::mt19937_64 rng(17);
    std::normal_distribution<double> normal;
    int tested = 0;
    double worst = 0.0;
    for (int trial = 0; trial < 60 && tested < 12; ++trial) {
      Eigen::MatrixXd A(5, 5);
      for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) A(i, j) = normal(rng);
      Eigen::MatrixXd M = 0.5 * (A + A.transpose());
      const double h = 0.3 + 0.2 * std::abs(normal(rng));
      const double a = 0.5 + std::abs(normal(rng));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
      if (es.eigenvalues().cwiseAbs().minCoeff() < 1e-3) continue;
      ++tested;
      Eigen::MatrixXd expM = (0.5 * a * h * M).exp();
      Eigen::MatrixXd want =
          (a * M).inverse() * (expM - Eigen::MatrixXd::Identity(5, 5));
      Eigen::MatrixXd got = apply_spectral(JacobianRep::dense_symmetric(M),
                                           SpectralFunctional::t1(h, a))
                                .dense();
      worst = std::max(worst, (got - want).norm() / want.norm());
    }
    os << "spectral-vs-expm max rel err " << worst << " over " << tested
       << " matrices (tol 1e-8); ";
    ok = ok && tested >= 10 && worst < 1e-8;
  }

  // Fifth-order coefficient symmetries.
  {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0;
    Potential1D g = double_well_potential();
    for (C5Variant v :
         {C5Variant::fM, C5Variant::mO, C5Variant::bO, C5Variant::gbO}) {
      for (int i = 0; i < 40; ++i) {
        const double x = u(rng), xi = u(rng), ell = 0.4 + std::abs(u(rng));
        const double c = c5_eval(v, g, x, xi, ell);
        worst = std::max(worst,
                         std::abs(c5_eval(v, g, x, -xi, ell) + c) /
                             std::max(1.0, std::abs(c)));
        worst = std::max(worst,
                         std::abs(c5_eval(v, g, x, xi, 2.0 * ell) - 32.0 * c) /
                             std::max(1.0, std::abs(32.0 * c)));
      }
    }
    os << "coefficient symmetry max err " << worst << " (tol 1e-9); ";
    ok = ok && worst < 1e-9;
  }

  // Universality of the acceptance at the speed maximizer.
  {
    double worst = 0.0;
    const double base = optimal_ell(1.0).acceptance_at_star;
    for (double k : {0.01, 1.0, 100.0})
      worst = std::max(worst,
                       std::abs(optimal_ell(k).acceptance_at_star - base));
    os << "universal acceptance spread " << worst << " (tol 1e-4); ";
    ok = ok && worst < 1e-4;
  }

  // Stationarity of the adjusted chain (Kolmogorov-Smirnov at level 1e-3).
  {
    TargetModel t = make_product_target(gaussian_potential(), 1);
    RunConfig rc;
    rc.kernel = KernelSpec::single(ProposalVariant::mala(), 0.8);
    rc.n_steps = 120000;
    rc.start = StartRule::warmstart();
    rc.seed = 31;
    rc.burn_in = 2000;
    ChainTrace trace = run_chain(t, rc);
    std::vector<double> s;
    for (std::size_t k = trace.burn_in; k < trace.first_coord.size(); k += 50)
      s.push_back(trace.first_coord[k]);
    std::sort(s.begin(), s.end());
    const std::size_t n = s.size();
    double ks = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double F = normal_cdf(s[i]);
      ks = std::max(ks, std::abs(F - double(i) / n));
      ks = std::max(ks, std::abs(double(i + 1) / n - F));
    }
    const double crit = 1.9494746035204052 / std::sqrt(double(n));
    os << "ks " << ks << " vs crit " << crit;
    ok = ok && ks < crit;
  }

  report(7, "property suite", ok, os.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
