#include "langevin/proposal.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace langevin {

ProposalVariant ProposalVariant::rwm() { return {Method::RWM, true, {1, 1, 1, 1, 1}}; }
ProposalVariant ProposalVariant::mala() { return {Method::MALA, true, {1, 1, 1, 1, 1}}; }
ProposalVariant ProposalVariant::fmala() { return {Method::FMALA, true, {1, 1, 1, 1, 1}}; }
ProposalVariant ProposalVariant::moma() { return {Method::MOMA, true, {1, 1, 1, 1, 1}}; }
ProposalVariant ProposalVariant::boma() { return {Method::BOMA, true, {1, 1, 1, 1, 1}}; }

ProposalVariant ProposalVariant::gboma(double a1, double a2, double a3,
                                       double a4, double a5) {
  for (double v : {a1, a2, a3, a4, a5})
    if (v <= 0.0) throw ConfigError("gboma: parameters must be positive");
  Assumption1Report rep = assumption1_check(a4, a5);
  if (!rep.positive) {
    std::ostringstream os;
    os << "gboma: variance spectrum not positive for a4=" << a4
       << ", a5=" << a5 << " (min " << rep.min_value << " at t=" << rep.argmin
       << ")";
    throw ConfigError(os.str());
  }
  return {Method::GBOMA, true, {a1, a2, a3, a4, a5}};
}

ProposalVariant ProposalVariant::unadjusted() const {
  ProposalVariant v = *this;
  v.adjusted = false;
  return v;
}

std::string ProposalVariant::name() const {
  switch (method) {
    case Method::RWM: return adjusted ? "rwm" : "rw";
    case Method::MALA: return adjusted ? "mala" : "ula";
    case Method::FMALA: return adjusted ? "fmala" : "fula";
    case Method::MOMA: return adjusted ? "moma" : "muoa";
    case Method::BOMA: return adjusted ? "boma" : "buoa";
    case Method::GBOMA: return adjusted ? "gboma" : "gbuoa";
  }
  return "?";
}

ProposalVariant parse_variant(const std::string& name) {
  if (name == "rwm") return ProposalVariant::rwm();
  if (name == "rw") return ProposalVariant::rwm().unadjusted();
  if (name == "mala") return ProposalVariant::mala();
  if (name == "ula") return ProposalVariant::mala().unadjusted();
  if (name == "fmala") return ProposalVariant::fmala();
  if (name == "fula") return ProposalVariant::fmala().unadjusted();
  if (name == "moma") return ProposalVariant::moma();
  if (name == "muoa") return ProposalVariant::moma().unadjusted();
  if (name == "boma") return ProposalVariant::boma();
  if (name == "buoa") return ProposalVariant::boma().unadjusted();
  throw ConfigError("unknown proposal variant: '" + name + "'");
}

namespace {

[[noreturn]] void scale_fail(double lambda, const char* who) {
  std::ostringstream os;
  os << who << ": scale spectrum nonpositive (eigenvalue image " << lambda
     << ")";
  throw ScaleNotPositive(lambda, os.str());
}

// fMALA scale: sqrt(h) I + (h^{3/2}/12) Df, kept in the structure of Df.
// Never eigendecomposes; log-det via the structured log_det.
ProposalMoments fmala_moments(const Eigen::VectorXd& x, double h,
                              const TargetModel& target) {
  const double sh = std::sqrt(h);
  const double cs = std::pow(h, 1.5) / 12.0;
  Eigen::VectorXd f = target.drift(x);
  JacobianRep J = target.jacobian(x);
  Eigen::VectorXd c = target.hessian_contraction(x);

  ProposalMoments m;
  m.mean = x + 0.5 * h * f - (h * h / 24.0) * (J.matvec(f) + c);
  switch (J.kind()) {
    case JacobianRep::Kind::Scalar:
      m.scale = JacobianRep::scalar(sh + cs * J.scalar_value(), J.dim());
      break;
    case JacobianRep::Kind::Diagonal:
      m.scale = JacobianRep::diagonal(
          (sh + (cs * J.diag().array())).matrix());
      break;
    case JacobianRep::Kind::SymTridiagonal:
      m.scale = JacobianRep::sym_tridiagonal(
          (sh + (cs * J.diag().array())).matrix(), cs * J.off());
      break;
    case JacobianRep::Kind::DenseSymmetric:
      m.scale = JacobianRep::dense_symmetric(
          sh * Eigen::MatrixXd::Identity(J.dim(), J.dim()) + cs * J.dense());
      break;
  }
  try {
    m.log_det_scale = log_det(m.scale);
  } catch (const NonPositiveSpectrum& e) {
    scale_fail(e.eigenvalue, "fmala");
  }
  return m;
}

// Shared Ozaki-family machinery: everything is a scalar function of the
// spectrum of Df(x), so we either work entrywise (Scalar/Diagonal Jacobians)
// or once through an eigenbasis (SymTridiagonal/DenseSymmetric).
struct OzakiMaps {
  // mean = x + m_f(lambda) .* f + m_c(lambda) .* c   (in the eigenbasis)
  std::function<double(double)> m_f, m_c;
  // scale spectrum = sqrt(var(lambda))
  std::function<double(double)> var;
  const char* who;
};

OzakiMaps ozaki_maps(const ProposalVariant& v, double h) {
  using M = ProposalVariant::Method;
  if (v.method == M::MOMA) {
    return {[h](double t) { return t1_scalar(t, h, 1.0) - (h * h / 6.0) * t; },
            [h](double) { return -h * h / 24.0; },
            [h](double t) { return variance_map_spectrum(VarianceVariant::mO, t, h); },
            "moma"};
  }
  // bOMA = gbOMA at unit parameters.
  const double a1 = v.a[0], a2 = v.a[1], a3 = v.a[2], a4 = v.a[3], a5 = v.a[4];
  const VarianceVariant vv =
      v.method == M::BOMA ? VarianceVariant::bO : VarianceVariant::gbO;
  return {[h, a1, a2](double t) {
            return t1_scalar(t, h, a1) +
                   (0.5 * a1 + 1.0 / 6.0) * t2_scalar(t, h, a2);
          },
          [h, a3](double t) { return -t3_scalar(t, h, a3) / 3.0; },
          [h, vv, a4, a5](double t) {
            return variance_map_spectrum(vv, t, h, a4, a5);
          },
          v.method == M::BOMA ? "boma" : "gboma"};
}

ProposalMoments ozaki_moments(const ProposalVariant& v,
                              const Eigen::VectorXd& x, double h,
                              const TargetModel& target) {
  OzakiMaps maps = ozaki_maps(v, h);
  Eigen::VectorXd f = target.drift(x);
  JacobianRep J = target.jacobian(x);
  Eigen::VectorXd c = target.hessian_contraction(x);
  const long d = J.dim();
  ProposalMoments m;

  auto scale_entry = [&](double lam) {
    const double var = maps.var(lam);
    if (var <= 0.0) scale_fail(var, maps.who);
    return std::sqrt(var);
  };

  switch (J.kind()) {
    case JacobianRep::Kind::Scalar: {
      const double lam = J.scalar_value();
      m.mean = x + maps.m_f(lam) * f + maps.m_c(lam) * c;
      const double s = scale_entry(lam);
      m.scale = JacobianRep::scalar(s, d);
      m.log_det_scale = d * std::log(s);
      return m;
    }
    case JacobianRep::Kind::Diagonal: {
      m.mean = x;
      Eigen::VectorXd s(d);
      double ld = 0.0;
      for (long i = 0; i < d; ++i) {
        const double lam = J.diag()[i];
        m.mean[i] += maps.m_f(lam) * f[i] + maps.m_c(lam) * c[i];
        s[i] = scale_entry(lam);
        ld += std::log(s[i]);
      }
      m.scale = JacobianRep::diagonal(std::move(s));
      m.log_det_scale = ld;
      return m;
    }
    case JacobianRep::Kind::SymTridiagonal:
    case JacobianRep::Kind::DenseSymmetric: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
      if (J.kind() == JacobianRep::Kind::SymTridiagonal)
        solver.computeFromTridiagonal(J.diag(), J.off(),
                                      Eigen::ComputeEigenvectors);
      else
        solver.compute(J.dense());
      const Eigen::MatrixXd& V = solver.eigenvectors();
      const Eigen::VectorXd& lam = solver.eigenvalues();
      Eigen::VectorXd fe = V.transpose() * f;
      Eigen::VectorXd ce = V.transpose() * c;
      Eigen::VectorXd me(d), s(d);
      double ld = 0.0;
      for (long i = 0; i < d; ++i) {
        me[i] = maps.m_f(lam[i]) * fe[i] + maps.m_c(lam[i]) * ce[i];
        s[i] = scale_entry(lam[i]);
        ld += std::log(s[i]);
      }
      m.mean = x + V * me;
      m.scale = JacobianRep::dense_symmetric(V * s.asDiagonal() * V.transpose());
      m.log_det_scale = ld;
      m.scale_eig = std::make_shared<
          const std::pair<Eigen::MatrixXd, Eigen::VectorXd>>(V, s);
      return m;
    }
  }
  throw Error("ozaki_moments: bad kind");
}

// Solve S z = r for the symmetric positive-definite tridiagonal factor via
// the LDL^T pivots (Thomas algorithm).
Eigen::VectorXd tridiag_solve(const JacobianRep& S, const Eigen::VectorXd& r) {
  const long d = S.dim();
  Eigen::VectorXd p(d), z = r;
  // Forward elimination.
  p[0] = S.diag()[0];
  for (long i = 1; i < d; ++i) {
    const double l = S.off()[i - 1] / p[i - 1];
    p[i] = S.diag()[i] - l * S.off()[i - 1];
    z[i] -= l * z[i - 1];
  }
  // Back substitution.
  z[d - 1] /= p[d - 1];
  for (long i = d - 2; i >= 0; --i)
    z[i] = (z[i] - S.off()[i] * z[i + 1]) / p[i];
  return z;
}

}  // namespace

ProposalMoments moments(const ProposalVariant& variant, const Eigen::VectorXd& x,
                        double h, const TargetModel& target) {
  if (h <= 0.0) throw ConfigError("moments: h must be positive");
  using M = ProposalVariant::Method;
  const double sh = std::sqrt(h);
  switch (variant.method) {
    case M::RWM: {
      ProposalMoments m;
      m.mean = x;
      m.scale = JacobianRep::scalar(sh, x.size());
      m.log_det_scale = x.size() * std::log(sh);
      return m;
    }
    case M::MALA: {
      ProposalMoments m;
      m.mean = x + 0.5 * h * target.drift(x);
      m.scale = JacobianRep::scalar(sh, x.size());
      m.log_det_scale = x.size() * std::log(sh);
      return m;
    }
    case M::FMALA:
      return fmala_moments(x, h, target);
    case M::MOMA:
    case M::BOMA:
    case M::GBOMA:
      return ozaki_moments(variant, x, h, target);
  }
  throw Error("moments: bad method");
}

Eigen::VectorXd sample(const ProposalMoments& m, const Eigen::VectorXd& xi) {
  if (xi.size() != m.mean.size())
    throw Error("sample: noise dimension mismatch");
  if (m.scale_eig) {
    const auto& [V, s] = *m.scale_eig;
    return m.mean + V * (s.cwiseProduct(V.transpose() * xi));
  }
  return m.mean + m.scale.matvec(xi);
}

double log_q(const ProposalMoments& m, const Eigen::VectorXd& y) {
  static const double log2pi = std::log(2.0 * M_PI);
  const long d = m.mean.size();
  Eigen::VectorXd r = y - m.mean;
  Eigen::VectorXd z;
  if (m.scale_eig) {
    const auto& [V, s] = *m.scale_eig;
    z = (V.transpose() * r).cwiseQuotient(s);
  } else {
    switch (m.scale.kind()) {
      case JacobianRep::Kind::Scalar:
        z = r / m.scale.scalar_value();
        break;
      case JacobianRep::Kind::Diagonal:
        z = r.cwiseQuotient(m.scale.diag());
        break;
      case JacobianRep::Kind::SymTridiagonal:
        z = tridiag_solve(m.scale, r);
        break;
      case JacobianRep::Kind::DenseSymmetric:
        z = m.scale.dense().llt().solve(r);
        break;
    }
  }
  return -0.5 * d * log2pi - m.log_det_scale - 0.5 * z.squaredNorm();
}

double well_posedness_probe(const ProposalVariant& variant,
                            const TargetModel& target,
                            const std::vector<Eigen::VectorXd>& x_grid,
                            double h) {
  using M = ProposalVariant::Method;
  const double sh = std::sqrt(h);
  if (variant.method == M::RWM || variant.method == M::MALA) return sh;
  double min_val = std::numeric_limits<double>::infinity();
  for (const auto& x : x_grid) {
    Eigen::VectorXd lam = target.jacobian(x).eigenvalues();
    for (long i = 0; i < lam.size(); ++i) {
      double v;
      if (variant.method == M::FMALA) {
        v = sh + std::pow(h, 1.5) / 12.0 * lam[i];
      } else {
        OzakiMaps maps = ozaki_maps(variant, h);
        v = maps.var(lam[i]);
      }
      min_val = std::min(min_val, v);
    }
  }
  return min_val;
}

}  // namespace langevin
