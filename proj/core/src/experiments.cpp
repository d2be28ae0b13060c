#include "langevin/experiments.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "langevin/asymptotics.hpp"
#include "langevin/diagnostics.hpp"

namespace langevin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// splitmix64; used to derive independent per-point seeds from the base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

double step_exponent(const ProposalVariant& v) {
  using M = ProposalVariant::Method;
  switch (v.method) {
    case M::RWM: return 1.0;
    case M::MALA: return 1.0 / 3.0;
    default: return 0.2;
  }
}

TargetModel target_from_config(const Config& cfg, long dim) {
  const std::string name = cfg.get_string("target", "gaussian");
  if (name == "gaussian") return make_product_target(gaussian_potential(), dim);
  if (name == "double-well")
    return make_product_target(double_well_potential(), dim);
  if (name == "ar1-half") return make_ar1_target({dim, Ar1Link::Half});
  if (name == "ar1-sine") return make_ar1_target({dim, Ar1Link::Sine});
  if (name == "exponential") {
    ExponentialClassSpec spec{cfg.get_double("beta"), cfg.get_double("gamma_e"),
                              cfg.get_double("r_pi", 0.0)};
    return make_exponential_class_target(spec, dim);
  }
  throw ConfigError("config: unknown target '" + name + "'");
}

namespace {

std::string build_identifier() {
#if defined(__clang__)
  return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  return std::string("gcc ") + __VERSION__;
#else
  return "unknown-compiler";
#endif
}

void echo_metadata(CsvReport& report, const Config& cfg, std::uint64_t seed) {
  for (const auto& line : cfg.raw_lines()) report.add_metadata(line);
  report.add_metadata("seed = " + std::to_string(seed));
  report.add_metadata("build = " + build_identifier());
}

double default_ell(const ProposalVariant& v) {
  using M = ProposalVariant::Method;
  switch (v.method) {
    case M::RWM: return 2.38;
    case M::MALA: return 1.65;
    default: return 1.79;
  }
}

struct StepRule {
  double gamma_override = -1.0;  // < 0: per-variant exponent
  double h_override = -1.0;      // > 0: fixed step, ignores ell
  bool overridden() const { return gamma_override >= 0.0 || h_override > 0.0; }
  double h(const ProposalVariant& v, double ell, long d) const {
    if (h_override > 0.0) return h_override;
    const double g = gamma_override >= 0.0 ? gamma_override : step_exponent(v);
    return ell * ell * std::pow(static_cast<double>(d), -g);
  }
};

StepRule step_rule_from_config(const Config& cfg) {
  StepRule r;
  r.gamma_override = cfg.get_double("gamma_override", -1.0);
  r.h_override = cfg.get_double("h_override", -1.0);
  return r;
}

StartRule start_rule_from_config(const Config& cfg) {
  const std::string s = cfg.get_string("start", "origin");
  if (s == "origin") return StartRule::origin();
  if (s == "warmstart")
    return StartRule::warmstart(
        static_cast<std::size_t>(cfg.get_long("n_warm", 10000)),
        cfg.get_double("warm_h", 0.0));
  // Otherwise a comma list of coordinates.
  Config point = Config::parse_string("x0 = " + s, "<start>");
  std::vector<double> coords = point.get_double_list("x0");
  Eigen::VectorXd x0(static_cast<long>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i)
    x0[static_cast<long>(i)] = coords[i];
  return StartRule::explicit_point(std::move(x0));
}

// Strategy = named kernel, possibly a mixture; used by the transient and ACF
// experiments.
struct Strategy {
  std::string label;
  KernelSpec kernel;
};

Strategy make_strategy(const std::string& name, long d) {
  auto plain = [d](const ProposalVariant& v, double ell) {
    const double h =
        ell * ell * std::pow(static_cast<double>(d), -step_exponent(v));
    return KernelSpec::single(v, h);
  };
  if (name == "hybrid-rwm-fmala") {
    const double h_rwm = 2.38 * 2.38 / static_cast<double>(d);
    const double h_fm =
        1.79 * 1.79 * std::pow(static_cast<double>(d), -0.2);
    return {name, KernelSpec({{ProposalVariant::rwm(), h_rwm, 0.5},
                              {ProposalVariant::fmala(), h_fm, 0.5}})};
  }
  if (name == "hybrid-mala-fmala") {
    // MALA component at its transient-optimal step 2 d^{-1/2}.
    const double h_mala = 2.0 * std::pow(static_cast<double>(d), -0.5);
    const double h_fm =
        1.79 * 1.79 * std::pow(static_cast<double>(d), -0.2);
    return {name, KernelSpec({{ProposalVariant::mala(), h_mala, 0.5},
                              {ProposalVariant::fmala(), h_fm, 0.5}})};
  }
  ProposalVariant v = parse_variant(name);
  return {name, plain(v, default_ell(v))};
}

}  // namespace

CsvReport run_efficiency_sweep(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const auto dims = cfg.get_long_list("dim");
  const auto ells = cfg.get_double_list("ell");
  const auto variants = cfg.get_string_list("variant");
  const auto n_steps = static_cast<std::size_t>(cfg.get_long("n_steps", 200000));
  const auto burn_in = static_cast<std::size_t>(cfg.get_long("burn_in", 1000));
  const StepRule rule = step_rule_from_config(cfg);
  const StartRule start = start_rule_from_config(cfg);
  const CoordMode mode = cfg.get_string("efficiency", "first") == "full-mean"
                             ? CoordMode::FullMean
                             : CoordMode::First;

  CsvReport report;
  echo_metadata(report, cfg, seed);
  if (rule.overridden()) report.add_metadata("step_rule_override = yes");
  report.set_header({"variant", "d", "ell", "h", "acceptance", "efficiency",
                     "scaled_efficiency", "status"});

  for (const std::string& vname : variants) {
    const ProposalVariant variant = parse_variant(vname);
    for (long d : dims) {
      const TargetModel target = target_from_config(cfg, d);
      const double dpow = std::pow(static_cast<double>(d), 0.2);
      for (std::size_t li = 0; li < ells.size(); ++li) {
        const double ell = ells[li];
        const double h = rule.h(variant, ell, d);
        // Common random numbers: the per-point seed depends on (d, ell
        // index) but not on the variant.
        RunConfig rc;
        rc.kernel = KernelSpec::single(variant, h);
        rc.n_steps = n_steps;
        rc.start = start;
        rc.seed = mix_seed(seed, static_cast<std::uint64_t>(d) * 1009 + li);
        rc.burn_in = burn_in;
        auto row = report.row();
        row.add(vname).add(d).add(ell).add(h);
        try {
          ChainTrace trace = run_chain(target, rc);
          const double acc = acceptance_rate(trace);
          const double eff = first_order_efficiency(trace, mode);
          row.add(acc).add(eff).add(dpow * eff).add("ok");
        } catch (const Error& e) {
          row.add(kNaN).add(kNaN).add(kNaN).add(std::string("error: ") +
                                                e.what());
        }
        row.commit();
      }
    }
  }
  return report;
}

CsvReport run_transient_trace(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const long d = cfg.get_long("dim", 1000);
  const auto n_steps = static_cast<std::size_t>(cfg.get_long("n_steps", 10000));
  std::vector<std::string> names =
      cfg.has("strategy") ? cfg.get_string_list("strategy")
                          : std::vector<std::string>{"rwm", "mala", "fmala",
                                                     "hybrid-rwm-fmala",
                                                     "hybrid-mala-fmala"};
  const TargetModel target = target_from_config(cfg, d);

  CsvReport report;
  echo_metadata(report, cfg, seed);
  report.set_header({"strategy", "step", "sq_norm"});

  for (std::size_t si = 0; si < names.size(); ++si) {
    Strategy strat = make_strategy(names[si], d);
    RunConfig rc;
    rc.kernel = strat.kernel;
    rc.n_steps = n_steps;
    rc.start = StartRule::origin();
    rc.seed = mix_seed(seed, si);
    rc.burn_in = 0;
    ChainTrace trace = run_chain(target, rc);
    std::ostringstream os;
    os << "first100_acceptance " << strat.label << " = "
       << CsvReport::format_double(acceptance_rate_first(trace, 100));
    report.add_metadata(os.str());
    for (std::size_t k = 0; k < trace.sq_norm.size(); ++k)
      report.row().add(strat.label).add(k).add(trace.sq_norm[k]).commit();
  }
  return report;
}

CsvReport run_acf_compare(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const long d = cfg.get_long("dim", 1000);
  const auto n_steps = static_cast<std::size_t>(cfg.get_long("n_steps", 200000));
  const int max_lag = static_cast<int>(cfg.get_long("max_lag", 100));
  std::vector<std::string> names =
      cfg.has("variant") ? cfg.get_string_list("variant")
                         : std::vector<std::string>{"rwm", "mala", "fmala"};
  const TargetModel target = target_from_config(cfg, d);
  const auto n_warm = static_cast<std::size_t>(cfg.get_long("n_warm", 10000));

  CsvReport report;
  echo_metadata(report, cfg, seed);
  report.set_header({"variant", "lag", "acf", "se"});

  for (std::size_t si = 0; si < names.size(); ++si) {
    Strategy strat = make_strategy(names[si], d);
    RunConfig rc;
    rc.kernel = strat.kernel;
    rc.n_steps = n_steps;
    rc.start = StartRule::warmstart(n_warm);
    rc.seed = mix_seed(seed, si);
    rc.burn_in = 0;
    ChainTrace trace = run_chain(target, rc);
    std::vector<double> rho = acf(trace.first_coord, max_lag);
    for (int lag = 0; lag <= max_lag; ++lag)
      report.row()
          .add(strat.label)
          .add(static_cast<long>(lag))
          .add(rho[lag])
          .add(acf_stderr(rho, lag, trace.first_coord.size()))
          .commit();
  }
  return report;
}

CsvReport run_asymptotic(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const auto n_samples =
      static_cast<std::size_t>(cfg.get_long("n_samples", 100000));
  std::vector<std::string> names =
      cfg.has("variant") ? cfg.get_string_list("variant")
                         : std::vector<std::string>{"fm", "mo", "bo"};
  const std::string pot_name = cfg.get_string("target", "gaussian");
  Potential1D g;
  if (pot_name == "gaussian")
    g = gaussian_potential();
  else if (pot_name == "double-well")
    g = double_well_potential();
  else
    throw ConfigError("asymptotic: target must be gaussian or double-well");
  std::vector<double> ells = cfg.has("ell")
                                 ? cfg.get_double_list("ell")
                                 : Config::parse_string("ell = 0.1:3.0:30")
                                       .get_double_list("ell");

  CsvReport report;
  echo_metadata(report, cfg, seed);
  report.set_header({"row_type", "variant", "potential", "k", "se", "n_samples",
                     "ell_star", "acceptance_at_star", "ell", "a_ell", "h_ell",
                     "h_normalized"});

  for (std::size_t vi = 0; vi < names.size(); ++vi) {
    const C5Variant variant = parse_c5_variant(names[vi]);
    std::mt19937_64 rng(mix_seed(seed, vi));
    AsymptoticConstants k = k_constant(variant, g, n_samples, rng);
    OptimalEll opt = optimal_ell(k.k_value);
    report.row()
        .add(std::string("constant"))
        .add(k.variant)
        .add(g.label)
        .add(k.k_value)
        .add(k.mc_std_error)
        .add(k.n_samples)
        .add(opt.ell_star)
        .add(opt.acceptance_at_star)
        .add(std::string(""))
        .add(std::string(""))
        .add(std::string(""))
        .add(std::string(""))
        .commit();
    const double h_star = limit_speed(opt.ell_star, k.k_value);
    for (double ell : ells)
      report.row()
          .add(std::string("curve"))
          .add(k.variant)
          .add(g.label)
          .add(std::string(""))
          .add(std::string(""))
          .add(std::string(""))
          .add(std::string(""))
          .add(std::string(""))
          .add(ell)
          .add(limit_acceptance(ell, k.k_value))
          .add(limit_speed(ell, k.k_value))
          .add(limit_speed(ell, k.k_value) / h_star)
          .commit();
  }
  return report;
}

namespace {

// Standard deviation of the 1D density proportional to exp(g) by Simpson
// quadrature on [-L, L].
double potential_stddev(const Potential1D& g, double L = 30.0, int n = 12000) {
  double z = 0.0, m2 = 0.0;
  const double dx = 2.0 * L / n;
  for (int i = 0; i <= n; ++i) {
    const double x = -L + i * dx;
    const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    const double p = std::exp(g(0, x));
    z += w * p;
    m2 += w * x * x * p;
  }
  return std::sqrt(m2 / z);
}

struct ProbeOutcome {
  std::string classification;
  double acceptance = kNaN;
  double max_abs_x = 0.0;
  double final_abs_x = 0.0;
  long reentries = 0;
  std::size_t steps_run = 0;
  double band = 0.0;
};

ProbeOutcome run_probe(const ProposalVariant& variant, double beta,
                       double gamma, double h, double x0, std::size_t n_steps,
                       double escape, double acc_floor, std::uint64_t seed) {
  const ExponentialClassSpec spec{beta, gamma, 0.0};
  const TargetModel target = make_exponential_class_target(spec, 1);
  const double band = 2.0 * potential_stddev(exponential_class_potential(spec));

  ProbeOutcome out;
  out.band = band;
  Eigen::VectorXd x(1);
  x[0] = x0;
  double log_pi = target.log_density_unnorm(x);
  std::mt19937_64 rng(seed);
  KernelSpec kernel = KernelSpec::single(variant, h);

  bool inside = std::abs(x[0]) <= band;
  bool entered_band = inside;
  bool scale_terminated = false;
  std::size_t accepted = 0;
  out.max_abs_x = std::abs(x[0]);

  std::size_t k = 0;
  for (; k < n_steps; ++k) {
    if (std::abs(x[0]) >= escape) break;
    try {
      if (variant.adjusted) {
        StepResult res = mh_step(x, log_pi, kernel, target, rng);
        if (res.accepted) ++accepted;
      } else {
        x = unadjusted_step(x, variant, h, target, rng);
      }
    } catch (const ScaleNotPositive&) {
      scale_terminated = true;
      break;
    }
    const double ax = std::abs(x[0]);
    out.max_abs_x = std::max(out.max_abs_x, ax);
    const bool now_inside = ax <= band;
    if (now_inside && !inside) {
      ++out.reentries;
      entered_band = true;
    }
    inside = now_inside;
  }
  out.steps_run = k;
  out.final_abs_x = std::abs(x[0]);
  if (variant.adjusted && k > 0)
    out.acceptance = static_cast<double>(accepted) / static_cast<double>(k);

  if (out.max_abs_x >= escape) {
    out.classification = "diverged";
  } else if (scale_terminated) {
    // The scale can only lose positivity once h |g''(x)| is large, which
    // happens far outside the target bulk; a termination out there is
    // divergence evidence, one inside the band is its own category.
    out.classification =
        out.final_abs_x > band ? "diverged" : "scale-failure";
  } else if (out.reentries >= 3) {
    out.classification = "stable";
  } else if (variant.adjusted && out.acceptance < acc_floor && !entered_band) {
    out.classification = "stuck";
  } else {
    out.classification = "inconclusive";
  }
  return out;
}

}  // namespace

CsvReport run_ergodicity_probe(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const auto n_steps = static_cast<std::size_t>(cfg.get_long("n_steps", 10000));
  const double escape = cfg.get_double("escape", 1e6);
  const double acc_floor = cfg.get_double("acceptance_floor", 1e-3);
  const auto probes = cfg.get_all("probe");
  if (probes.empty())
    throw ConfigError("ergodicity-probe: at least one 'probe' line required");

  CsvReport report;
  echo_metadata(report, cfg, seed);
  report.set_header({"variant", "beta", "gamma", "h", "x0", "classification",
                     "expected", "acceptance", "max_abs_x", "final_abs_x",
                     "reentries", "steps_run", "band"});

  for (std::size_t pi = 0; pi < probes.size(); ++pi) {
    std::istringstream is(probes[pi]);
    std::string vname, expected;
    double beta, gamma, h, x0;
    if (!(is >> vname >> beta >> gamma >> h >> x0))
      throw ConfigError(
          "ergodicity-probe: probe line must be "
          "'<variant> <beta> <gamma> <h> <x0> [expected]': '" +
          probes[pi] + "'");
    is >> expected;
    const ProposalVariant variant = parse_variant(vname);
    ProbeOutcome out = run_probe(variant, beta, gamma, h, x0, n_steps, escape,
                                 acc_floor, mix_seed(seed, pi));
    report.row()
        .add(vname)
        .add(beta)
        .add(gamma)
        .add(h)
        .add(x0)
        .add(out.classification)
        .add(expected)
        .add(out.acceptance)
        .add(out.max_abs_x)
        .add(out.final_abs_x)
        .add(out.reentries)
        .add(out.steps_run)
        .add(out.band)
        .commit();
  }
  return report;
}

CsvReport run_single(const Config& cfg) {
  const std::uint64_t seed = cfg.get_seed("seed", 0);
  const long d = cfg.get_long("dim", 1);
  const TargetModel target = target_from_config(cfg, d);
  const ProposalVariant variant =
      parse_variant(cfg.get_string("variant", "mala"));
  const StepRule rule = step_rule_from_config(cfg);
  const double ell = cfg.get_double("ell", default_ell(variant));
  const double h = rule.h(variant, ell, d);

  RunConfig rc;
  rc.kernel = KernelSpec::single(variant, h);
  rc.n_steps = static_cast<std::size_t>(cfg.get_long("n_steps", 10000));
  rc.start = start_rule_from_config(cfg);
  rc.seed = seed;
  rc.burn_in = static_cast<std::size_t>(cfg.get_long("burn_in", 1000));
  rc.record_every = static_cast<int>(cfg.get_long("stride", 1));
  if (rc.burn_in >= rc.n_steps)
    throw ConfigError("single-run: burn_in (" + std::to_string(rc.burn_in) +
                      ") must be smaller than n_steps (" +
                      std::to_string(rc.n_steps) + ")");

  CsvReport report;
  echo_metadata(report, cfg, seed);
  if (rule.overridden()) report.add_metadata("step_rule_override = yes");
  report.set_header({"step", "first_coord", "sq_norm", "accepted"});

  ChainTrace trace = run_chain(target, rc);
  report.add_metadata(
      "acceptance = " +
      CsvReport::format_double(acceptance_rate(trace)));
  for (std::size_t i = 0; i < trace.first_coord.size(); ++i) {
    const std::size_t step = i * static_cast<std::size_t>(rc.record_every);
    auto row = report.row();
    row.add(step).add(trace.first_coord[i]).add(trace.sq_norm[i]);
    if (i == 0)
      row.add(std::string(""));
    else
      row.add(static_cast<long>(trace.accepted[step - 1]));
    row.commit();
  }
  return report;
}

CsvReport run_experiment(const Config& cfg) {
  const std::string name = cfg.get_string("experiment");
  if (name == "efficiency-sweep") return run_efficiency_sweep(cfg);
  if (name == "transient-trace") return run_transient_trace(cfg);
  if (name == "acf-compare") return run_acf_compare(cfg);
  if (name == "asymptotic") return run_asymptotic(cfg);
  if (name == "ergodicity-probe") return run_ergodicity_probe(cfg);
  if (name == "single-run") return run_single(cfg);
  throw ConfigError("config: unknown experiment '" + name + "'");
}

}  // namespace langevin
