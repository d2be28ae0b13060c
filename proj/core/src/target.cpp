#include "langevin/target.hpp"

#include <cmath>

namespace langevin {

TargetModel make_product_target(const Potential1D& g, long d) {
  if (d < 1) throw ConfigError("make_product_target: d must be >= 1");
  TargetModel t;
  t.dim = d;
  t.label = g.label;
  t.log_density_unnorm = [g](const Eigen::VectorXd& x) {
    double s = 0.0;
    for (long i = 0; i < x.size(); ++i) s += g(0, x[i]);
    return s;
  };
  t.drift = [g](const Eigen::VectorXd& x) {
    Eigen::VectorXd f(x.size());
    for (long i = 0; i < x.size(); ++i) f[i] = g(1, x[i]);
    return f;
  };
  t.jacobian = [g](const Eigen::VectorXd& x) {
    Eigen::VectorXd diag(x.size());
    for (long i = 0; i < x.size(); ++i) diag[i] = g(2, x[i]);
    return JacobianRep::diagonal(std::move(diag));
  };
  t.hessian_contraction = [g](const Eigen::VectorXd& x) {
    Eigen::VectorXd c(x.size());
    for (long i = 0; i < x.size(); ++i) c[i] = g(3, x[i]);
    return c;
  };
  return t;
}

TargetModel make_exponential_class_target(const ExponentialClassSpec& spec,
                                          long d) {
  TargetModel t = make_product_target(exponential_class_potential(spec), d);
  t.label = "exponential";
  return t;
}

namespace {

// phi(u) = log(1 + u^2) and its first three derivatives.
inline double phi1(double u) { return 2.0 * u / (1.0 + u * u); }
inline double phi2(double u) {
  const double q = 1.0 + u * u;
  return 2.0 * (1.0 - u * u) / (q * q);
}
inline double phi3(double u) {
  const double q = 1.0 + u * u;
  return 4.0 * u * (u * u - 3.0) / (q * q * q);
}

struct Link {
  double (*a0)(double);
  double (*a1)(double);
  double (*a2)(double);
  double (*a3)(double);
};

double half0(double x) { return 0.5 * x; }
double half1(double) { return 0.5; }
double zero(double) { return 0.0; }

Link make_link(Ar1Link link) {
  if (link == Ar1Link::Half) return {half0, half1, zero, zero};
  return {[](double x) { return std::sin(x); },
          [](double x) { return std::cos(x); },
          [](double x) { return -std::sin(x); },
          [](double x) { return -std::cos(x); }};
}

// Residuals u_i = x_i - alpha(x_{i-1}), x_0 = 0 (1-based in the comments,
// 0-based in code).
Eigen::VectorXd residuals(const Link& lk, const Eigen::VectorXd& x) {
  Eigen::VectorXd u(x.size());
  double prev = 0.0;
  for (long i = 0; i < x.size(); ++i) {
    u[i] = x[i] - lk.a0(prev);
    prev = x[i];
  }
  return u;
}

}  // namespace

TargetModel make_ar1_target(const Ar1CauchySpec& spec) {
  if (spec.dim < 2) throw ConfigError("make_ar1_target: d must be >= 2");
  const Link lk = make_link(spec.link);
  TargetModel t;
  t.dim = spec.dim;
  t.label = spec.link == Ar1Link::Half ? "ar1-half" : "ar1-sine";

  t.log_density_unnorm = [lk](const Eigen::VectorXd& x) {
    Eigen::VectorXd u = residuals(lk, x);
    double s = 0.0;
    for (long i = 0; i < u.size(); ++i) s -= std::log1p(u[i] * u[i]);
    return s;
  };

  // f_i = -phi'(u_i) + alpha'(x_i) phi'(u_{i+1})   (last term only if i < d-1)
  t.drift = [lk](const Eigen::VectorXd& x) {
    const long d = x.size();
    Eigen::VectorXd u = residuals(lk, x);
    Eigen::VectorXd f(d);
    for (long i = 0; i < d; ++i) {
      f[i] = -phi1(u[i]);
      if (i + 1 < d) f[i] += lk.a1(x[i]) * phi1(u[i + 1]);
    }
    return f;
  };

  // Symmetric tridiagonal Jacobian:
  //   J_ii     = -phi''(u_i) + alpha''(x_i) phi'(u_{i+1})
  //                          - alpha'(x_i)^2 phi''(u_{i+1})
  //   J_{i,i+1} = alpha'(x_i) phi''(u_{i+1})
  t.jacobian = [lk](const Eigen::VectorXd& x) {
    const long d = x.size();
    Eigen::VectorXd u = residuals(lk, x);
    Eigen::VectorXd diag(d), off(d - 1);
    for (long i = 0; i < d; ++i) {
      diag[i] = -phi2(u[i]);
      if (i + 1 < d) {
        const double ap = lk.a1(x[i]);
        diag[i] += lk.a2(x[i]) * phi1(u[i + 1]) - ap * ap * phi2(u[i + 1]);
        off[i] = ap * phi2(u[i + 1]);
      }
    }
    return JacobianRep::sym_tridiagonal(std::move(diag), std::move(off));
  };

  // Laplacian of f (f_i depends on x_{i-1}, x_i, x_{i+1}):
  //   d^2/dx_i^2    : -phi'''(u_i) + alpha'''(x_i) phi'(u_{i+1})
  //                   - 3 alpha'(x_i) alpha''(x_i) phi''(u_{i+1})
  //                   + alpha'(x_i)^3 phi'''(u_{i+1})
  //   d^2/dx_{i-1}^2: alpha''(x_{i-1}) phi''(u_i) - alpha'(x_{i-1})^2 phi'''(u_i)
  //   d^2/dx_{i+1}^2: alpha'(x_i) phi'''(u_{i+1})
  t.hessian_contraction = [lk](const Eigen::VectorXd& x) {
    const long d = x.size();
    Eigen::VectorXd u = residuals(lk, x);
    Eigen::VectorXd c(d);
    for (long i = 0; i < d; ++i) {
      double v = -phi3(u[i]);
      if (i + 1 < d) {
        const double ap = lk.a1(x[i]), app = lk.a2(x[i]);
        v += lk.a3(x[i]) * phi1(u[i + 1]) - 3.0 * ap * app * phi2(u[i + 1]) +
             ap * ap * ap * phi3(u[i + 1]) + ap * phi3(u[i + 1]);
      }
      if (i > 0) {
        const double ap = lk.a1(x[i - 1]);
        v += lk.a2(x[i - 1]) * phi2(u[i]) - ap * ap * phi3(u[i]);
      }
      c[i] = v;
    }
    return c;
  };

  return t;
}

FdReport fd_consistency_check(const TargetModel& target,
                              const Eigen::VectorXd& x, double step) {
  const long d = target.dim;
  FdReport rep{0.0, 0.0, 0.0};
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(1.0, std::abs(want));
  };

  // Drift vs central differences of the log-density.
  Eigen::VectorXd f = target.drift(x);
  for (long i = 0; i < d; ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += step;
    xm[i] -= step;
    const double fd = (target.log_density_unnorm(xp) -
                       target.log_density_unnorm(xm)) /
                      (2.0 * step);
    rep.drift_err = std::max(rep.drift_err, rel(fd, f[i]));
  }

  // Jacobian columns vs central differences of the drift, and the Hessian
  // contraction vs central differences of the Jacobian entries
  // (contraction_i = sum_j dJ_ij / dx_j).
  JacobianRep J = target.jacobian(x);
  Eigen::VectorXd c = target.hessian_contraction(x);
  Eigen::VectorXd c_fd = Eigen::VectorXd::Zero(d);
  for (long j = 0; j < d; ++j) {
    Eigen::VectorXd xp = x, xm = x;
    xp[j] += step;
    xm[j] -= step;
    Eigen::VectorXd fp = target.drift(xp), fm = target.drift(xm);
    JacobianRep Jp = target.jacobian(xp), Jm = target.jacobian(xm);
    for (long i = 0; i < d; ++i) {
      const double fd = (fp[i] - fm[i]) / (2.0 * step);
      rep.jacobian_err = std::max(rep.jacobian_err, rel(fd, J.coeff(i, j)));
      c_fd[i] += (Jp.coeff(i, j) - Jm.coeff(i, j)) / (2.0 * step);
    }
  }
  for (long i = 0; i < d; ++i)
    rep.contraction_err = std::max(rep.contraction_err, rel(c_fd[i], c[i]));
  return rep;
}

}  // namespace langevin
