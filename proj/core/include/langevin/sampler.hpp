#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "langevin/proposal.hpp"

namespace langevin {

// One component of a (possibly mixture) Metropolis-Hastings kernel.
struct KernelComponent {
  ProposalVariant variant;
  double h;
  double weight = 1.0;
};

// Mixture kernel; weights are normalized at construction.
struct KernelSpec {
  std::vector<KernelComponent> components;

  KernelSpec() = default;
  explicit KernelSpec(std::vector<KernelComponent> comps);
  static KernelSpec single(const ProposalVariant& v, double h);
};

// Initial-state rule.
struct StartRule {
  enum class Kind { Origin, Explicit, Warmstart };
  Kind kind = Kind::Origin;
  Eigen::VectorXd x0;          // Explicit only
  std::size_t n_warm = 10000;  // Warmstart: auxiliary RWM length
  double warm_h = 0.0;         // Warmstart step; 0 selects 2.38^2 / d

  static StartRule origin();
  static StartRule explicit_point(Eigen::VectorXd x0);
  static StartRule warmstart(std::size_t n_warm = 10000, double warm_h = 0.0);
};

struct RunConfig {
  KernelSpec kernel;
  std::size_t n_steps = 0;
  StartRule start;
  std::uint64_t seed = 0;
  std::size_t burn_in = 1000;  // excluded from summary statistics only
  int record_every = 1;
};

// Scalar summaries of a chain run.  first_coord / sq_norm include the
// initial state, so they have one more entry than accepted /
// proposal_sq_jump (which are per step, recorded at stride 1 regardless of
// record_every).
struct ChainTrace {
  long dim = 0;
  std::vector<double> first_coord;
  std::vector<double> sq_norm;
  std::vector<std::uint8_t> accepted;
  std::vector<double> proposal_sq_jump;  // ||y - x||^2 when accepted, else 0
  int recorded_every = 1;
  std::size_t burn_in = 0;
  std::size_t scale_rejections = 0;  // proposals rejected because the
                                     // reverse scale lost positivity
  Eigen::VectorXd final_state;
};

struct StepResult {
  bool accepted = false;
  double log_alpha = 0.0;
  bool scale_reject = false;
  double sq_jump = 0.0;
};

// One Metropolis-Hastings step, in place.  Per-step draw order from the
// stream: (1) component index, only when the kernel has more than one
// component; (2) d standard normals; (3) the acceptance uniform.  log_pi_x
// caches log pi at the current state and is updated on acceptance.
// ScaleNotPositive at the current state propagates (aborts the run);
// at the proposed point it is a certain rejection (log q = -inf), counted in
// StepResult::scale_reject.
StepResult mh_step(Eigen::VectorXd& x, double& log_pi_x,
                   const KernelSpec& kernel, const TargetModel& target,
                   std::mt19937_64& rng);

// Unadjusted step: the proposal is always taken.
Eigen::VectorXd unadjusted_step(const Eigen::VectorXd& x,
                                const ProposalVariant& variant, double h,
                                const TargetModel& target,
                                std::mt19937_64& rng);

// Run a full chain; deterministic for a fixed seed and build.
ChainTrace run_chain(const TargetModel& target, const RunConfig& cfg);

// Independent chains, one thread each (capped at a small pool); result order
// matches input order and each trace equals its serial counterpart.
std::vector<ChainTrace> run_parallel(const TargetModel& target,
                                     const std::vector<RunConfig>& cfgs,
                                     unsigned max_threads = 0);

// The warmstart state run_chain would use (exposed so sweeps can share it).
Eigen::VectorXd warmstart_state(const TargetModel& target, const StartRule& rule,
                                std::uint64_t seed);

}  // namespace langevin
