#include "langevin/sampler.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace langevin {

KernelSpec::KernelSpec(std::vector<KernelComponent> comps)
    : components(std::move(comps)) {
  if (components.empty()) throw ConfigError("KernelSpec: no components");
  double total = 0.0;
  for (const auto& c : components) {
    if (c.h <= 0.0) throw ConfigError("KernelSpec: h must be positive");
    if (c.weight < 0.0) throw ConfigError("KernelSpec: negative weight");
    total += c.weight;
  }
  if (total <= 0.0) throw ConfigError("KernelSpec: weights sum to zero");
  for (auto& c : components) c.weight /= total;
}

KernelSpec KernelSpec::single(const ProposalVariant& v, double h) {
  return KernelSpec({{v, h, 1.0}});
}

StartRule StartRule::origin() { return {}; }

StartRule StartRule::explicit_point(Eigen::VectorXd x0) {
  StartRule r;
  r.kind = Kind::Explicit;
  r.x0 = std::move(x0);
  return r;
}

StartRule StartRule::warmstart(std::size_t n_warm, double warm_h) {
  StartRule r;
  r.kind = Kind::Warmstart;
  r.n_warm = n_warm;
  r.warm_h = warm_h;
  return r;
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

Eigen::VectorXd draw_normals(long d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::VectorXd xi(d);
  for (long i = 0; i < d; ++i) xi[i] = normal(rng);
  return xi;
}

}  // namespace

StepResult mh_step(Eigen::VectorXd& x, double& log_pi_x,
                   const KernelSpec& kernel, const TargetModel& target,
                   std::mt19937_64& rng) {
  // Draw order: component (mixtures only), then d normals, then the
  // acceptance uniform.  Single-component kernels skip the first draw so a
  // plain kernel consumes the same stream as any other plain kernel (common
  // random numbers across variants).
  std::size_t ci = 0;
  if (kernel.components.size() > 1) {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double u = unif(rng), acc = 0.0;
    for (std::size_t i = 0; i < kernel.components.size(); ++i) {
      acc += kernel.components[i].weight;
      if (u <= acc || i + 1 == kernel.components.size()) {
        ci = i;
        break;
      }
    }
  }
  const KernelComponent& comp = kernel.components[ci];

  ProposalMoments fwd = moments(comp.variant, x, comp.h, target);
  Eigen::VectorXd xi = draw_normals(x.size(), rng);
  Eigen::VectorXd y = sample(fwd, xi);

  StepResult res;
  double log_alpha;
  double log_pi_y = kNegInf;
  if (!comp.variant.adjusted) {
    // Unadjusted chain: always move.
    log_alpha = 0.0;
    log_pi_y = target.log_density_unnorm(y);
  } else {
    log_pi_y = target.log_density_unnorm(y);
    double log_q_bwd;
    try {
      ProposalMoments bwd = moments(comp.variant, y, comp.h, target);
      log_q_bwd = log_q(bwd, x);
    } catch (const ScaleNotPositive&) {
      // Out-of-domain proposal: zero reverse density, certain rejection.
      log_q_bwd = kNegInf;
      res.scale_reject = true;
    }
    if (log_q_bwd == kNegInf || !std::isfinite(log_pi_y)) {
      log_alpha = kNegInf;
    } else {
      const double log_q_fwd = log_q(fwd, y);
      log_alpha = std::min(0.0, (log_pi_y + log_q_bwd) - (log_pi_x + log_q_fwd));
    }
  }

  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double u = unif(rng);
  res.log_alpha = log_alpha;
  if (log_alpha >= 0.0 || std::log(u) < log_alpha) {
    res.accepted = true;
    res.sq_jump = (y - x).squaredNorm();
    x = std::move(y);
    log_pi_x = log_pi_y;
  }
  return res;
}

Eigen::VectorXd unadjusted_step(const Eigen::VectorXd& x,
                                const ProposalVariant& variant, double h,
                                const TargetModel& target,
                                std::mt19937_64& rng) {
  ProposalMoments m = moments(variant, x, h, target);
  return sample(m, draw_normals(x.size(), rng));
}

Eigen::VectorXd warmstart_state(const TargetModel& target, const StartRule& rule,
                                std::uint64_t seed) {
  const long d = target.dim;
  const double h = rule.warm_h > 0.0 ? rule.warm_h : 2.38 * 2.38 / d;
  // Separate stream so the main chain's draws are unaffected.
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(d);
  double log_pi = target.log_density_unnorm(x);
  KernelSpec warm = KernelSpec::single(ProposalVariant::rwm(), h);
  for (std::size_t k = 0; k < rule.n_warm; ++k)
    mh_step(x, log_pi, warm, target, rng);
  return x;
}

ChainTrace run_chain(const TargetModel& target, const RunConfig& cfg) {
  const long d = target.dim;
  if (cfg.record_every < 1) throw ConfigError("run_chain: record_every >= 1");

  Eigen::VectorXd x;
  switch (cfg.start.kind) {
    case StartRule::Kind::Origin:
      x = Eigen::VectorXd::Zero(d);
      break;
    case StartRule::Kind::Explicit:
      if (cfg.start.x0.size() != d)
        throw ConfigError("run_chain: x0 dimension mismatch");
      x = cfg.start.x0;
      break;
    case StartRule::Kind::Warmstart:
      x = warmstart_state(target, cfg.start, cfg.seed);
      break;
  }

  std::mt19937_64 rng(cfg.seed);
  double log_pi = target.log_density_unnorm(x);

  ChainTrace trace;
  trace.dim = d;
  trace.recorded_every = cfg.record_every;
  trace.burn_in = cfg.burn_in;
  trace.first_coord.reserve(cfg.n_steps / cfg.record_every + 1);
  trace.sq_norm.reserve(cfg.n_steps / cfg.record_every + 1);
  trace.accepted.reserve(cfg.n_steps);
  trace.proposal_sq_jump.reserve(cfg.n_steps);
  trace.first_coord.push_back(x[0]);
  trace.sq_norm.push_back(x.squaredNorm());

  for (std::size_t k = 0; k < cfg.n_steps; ++k) {
    StepResult res;
    try {
      res = mh_step(x, log_pi, cfg.kernel, target, rng);
    } catch (const ScaleNotPositive& e) {
      std::ostringstream os;
      os << "run_chain: scale failure at step " << k << ": " << e.what();
      throw ScaleNotPositive(e.eigenvalue, os.str());
    }
    trace.accepted.push_back(res.accepted ? 1 : 0);
    trace.proposal_sq_jump.push_back(res.sq_jump);
    if (res.scale_reject) ++trace.scale_rejections;
    if ((k + 1) % static_cast<std::size_t>(cfg.record_every) == 0) {
      trace.first_coord.push_back(x[0]);
      trace.sq_norm.push_back(x.squaredNorm());
    }
  }
  trace.final_state = std::move(x);
  return trace;
}

std::vector<ChainTrace> run_parallel(const TargetModel& target,
                                     const std::vector<RunConfig>& cfgs,
                                     unsigned max_threads) {
  if (cfgs.empty()) return {};
  unsigned n_threads = max_threads > 0
                           ? max_threads
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, cfgs.size());

  std::vector<ChainTrace> out(cfgs.size());
  std::vector<std::string> errors(cfgs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfgs.size()) return;
      try {
        out[i] = run_chain(target, cfgs[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t i = 0; i < cfgs.size(); ++i)
    if (!errors[i].empty()) {
      std::ostringstream os;
      os << "run_parallel: chain " << i << " failed: " << errors[i];
      throw Error(os.str());
    }
  return out;
}

}  // namespace langevin
