#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "langevin/matfun.hpp"
#include "langevin/target.hpp"

namespace langevin {

// Gaussian proposal family y = mu(x, h) + S(x, h) xi, xi ~ N(0, I_d).
struct ProposalVariant {
  enum class Method { RWM, MALA, FMALA, MOMA, BOMA, GBOMA };

  Method method = Method::RWM;
  bool adjusted = true;  // false: the unadjusted chain (ULA/fULA/mUOA/bUOA)
  // gbOMA parameters a1..a5; fixed to 1 for every other variant.
  std::array<double, 5> a{1.0, 1.0, 1.0, 1.0, 1.0};

  static ProposalVariant rwm();
  static ProposalVariant mala();
  static ProposalVariant fmala();
  static ProposalVariant moma();
  static ProposalVariant boma();
  // Validates positivity of the parameters and Assumption-1 positivity of
  // the variance spectrum at (a4, a5); throws ConfigError on failure.
  static ProposalVariant gboma(double a1, double a2, double a3, double a4,
                               double a5);

  ProposalVariant unadjusted() const;
  std::string name() const;  // "rwm", "mala", ...; "ula", "fula", ... when unadjusted
};

// Parse "rwm" / "mala" / "fmala" / "moma" / "boma" / "ula" / "fula" /
// "muoa" / "buoa"; throws ConfigError on unknown names.
ProposalVariant parse_variant(const std::string& name);

// The pair (mu, S) with S a symmetric positive-definite factor,
// SS^T the proposal covariance.
struct ProposalMoments {
  Eigen::VectorXd mean;
  JacobianRep scale;
  double log_det_scale = 0.0;
  // When S was assembled in an eigenbasis (Ozaki variants on tridiagonal /
  // dense Jacobians): (V, s) with S = V diag(s) V^T, reused for O(d^2)
  // sampling and solves.
  std::shared_ptr<const std::pair<Eigen::MatrixXd, Eigen::VectorXd>> scale_eig;
};

// Proposal moments at x.  Throws ScaleNotPositive when the variance spectrum
// is nonpositive at some eigenvalue of Df(x).
ProposalMoments moments(const ProposalVariant& variant, const Eigen::VectorXd& x,
                        double h, const TargetModel& target);

// y = mu + S xi.
Eigen::VectorXd sample(const ProposalMoments& m, const Eigen::VectorXd& xi);

// Log Gaussian density of the proposal at y:
//   -(d/2) log(2 pi) - log|S| - ||S^{-1}(y - mu)||^2 / 2.
double log_q(const ProposalMoments& m, const Eigen::VectorXd& y);

// Minimal scale-spectrum value of the variant over a grid of states; used to
// certify an experiment configuration before a long run.  Negative values
// mean moments() would throw somewhere on the grid.
double well_posedness_probe(const ProposalVariant& variant,
                            const TargetModel& target,
                            const std::vector<Eigen::VectorXd>& x_grid,
                            double h);

}  // namespace langevin
