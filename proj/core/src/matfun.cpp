#include "langevin/matfun.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace langevin {

double series_threshold(double h, double a) {
  return 1e-4 * 2.0 / (std::abs(a) * h);
}

// --- t1 ------------------------------------------------------------------

double t1_scalar_direct(double t, double h, double a) {
  const double z = 0.5 * a * h * t;
  return std::expm1(z) / (a * t);
}

double t1_scalar_series(double t, double h, double a) {
  // (e^z - 1)/z * (h/2) with z = (a h / 2) t; 10 terms.
  const double z = 0.5 * a * h * t;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 10; ++k) {
    term *= z / static_cast<double>(k + 1);
    sum += term;
  }
  return 0.5 * h * sum;
}

double t1_scalar(double t, double h, double a) {
  return std::abs(t) > series_threshold(h, a) ? t1_scalar_direct(t, h, a)
                                              : t1_scalar_series(t, h, a);
}

// --- t2 ------------------------------------------------------------------

double t2_scalar_direct(double t, double h, double a) {
  const double w = 0.25 * a * h * h * t * t;
  return std::expm1(-w) / (a * t);
}

double t2_scalar_series(double t, double h, double a) {
  // (e^{-w} - 1)/(a t) = -(h^2/4) t (e^{-w} - 1)/(-w); w = (a h^2/4) t^2.
  const double w = 0.25 * a * h * h * t * t;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 10; ++k) {
    term *= -w / static_cast<double>(k + 1);
    sum += term;
  }
  return -0.25 * h * h * t * sum;
}

double t2_scalar(double t, double h, double a) {
  return std::abs(t) > series_threshold(h, a) ? t2_scalar_direct(t, h, a)
                                              : t2_scalar_series(t, h, a);
}

// --- t3 ------------------------------------------------------------------

double t3_scalar_direct(double t, double h, double a) {
  const double z = 0.5 * a * h * t;
  const double at = a * t;
  return (std::expm1(z) - z) / (at * at);
}

double t3_scalar_series(double t, double h, double a) {
  // (e^z - 1 - z)/(a t)^2 = (h^2/4) sum_{k>=0} z^k/(k+2)!.
  const double z = 0.5 * a * h * t;
  double term = 0.5, sum = 0.5;  // k = 0: 1/2!
  for (int k = 1; k < 10; ++k) {
    term *= z / static_cast<double>(k + 2);
    sum += term;
  }
  return 0.25 * h * h * sum;
}

double t3_scalar(double t, double h, double a) {
  return std::abs(t) > series_threshold(h, a) ? t3_scalar_direct(t, h, a)
                                              : t3_scalar_series(t, h, a);
}

// --- variance spectra ----------------------------------------------------

double variance_map_spectrum(VarianceVariant v, double t, double h, double a4,
                             double a5) {
  switch (v) {
    case VarianceVariant::mO:
      return t1_scalar(t, 2.0 * h, 1.0) - (h * h / 3.0) * t;
    case VarianceVariant::bO:
      return t1_scalar(t, 2.0 * h, 1.0) + t2_scalar(t, 2.0 * h, 1.0) / 3.0;
    case VarianceVariant::gbO:
      return t1_scalar(t, 2.0 * h, a4) +
             (0.5 * a4 - 1.0 / 6.0) * t2_scalar(t, 2.0 * h, a5);
  }
  throw Error("variance_map_spectrum: bad variant");
}

// --- spectral functionals ------------------------------------------------

SpectralFunctional SpectralFunctional::t1(double h, double a) {
  return {"t1", [h, a](double t) { return t1_scalar(t, h, a); }, false};
}
SpectralFunctional SpectralFunctional::t2(double h, double a) {
  return {"t2", [h, a](double t) { return t2_scalar(t, h, a); }, false};
}
SpectralFunctional SpectralFunctional::t3(double h, double a) {
  return {"t3", [h, a](double t) { return t3_scalar(t, h, a); }, false};
}
SpectralFunctional SpectralFunctional::variance(VarianceVariant v, double h,
                                                double a4, double a5) {
  return {"variance",
          [v, h, a4, a5](double t) {
            return variance_map_spectrum(v, t, h, a4, a5);
          },
          false};
}
SpectralFunctional SpectralFunctional::sqrt() {
  return {"sqrt", [](double t) { return std::sqrt(t); }, true};
}
SpectralFunctional SpectralFunctional::log() {
  return {"log", [](double t) { return std::log(t); }, true};
}

namespace {

double checked_phi(const SpectralFunctional& f, double lambda, long index) {
  if (f.require_positive_input && lambda <= 0.0) {
    std::ostringstream os;
    os << "apply_spectral(" << f.label << "): nonpositive eigenvalue "
       << lambda << " at index " << index;
    throw NonPositiveSpectrum(lambda, index, os.str());
  }
  return f.phi(lambda);
}

}  // namespace

JacobianRep apply_spectral(const JacobianRep& rep, const SpectralFunctional& f) {
  switch (rep.kind()) {
    case JacobianRep::Kind::Scalar:
      return JacobianRep::scalar(checked_phi(f, rep.scalar_value(), 0),
                                 rep.dim());
    case JacobianRep::Kind::Diagonal: {
      Eigen::VectorXd out(rep.dim());
      for (long i = 0; i < rep.dim(); ++i)
        out[i] = checked_phi(f, rep.diag()[i], i);
      return JacobianRep::diagonal(std::move(out));
    }
    case JacobianRep::Kind::SymTridiagonal: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
      solver.computeFromTridiagonal(rep.diag(), rep.off(),
                                    Eigen::ComputeEigenvectors);
      Eigen::VectorXd lam = solver.eigenvalues();
      Eigen::VectorXd img(lam.size());
      for (long i = 0; i < lam.size(); ++i) img[i] = checked_phi(f, lam[i], i);
      const Eigen::MatrixXd& V = solver.eigenvectors();
      return JacobianRep::dense_symmetric(V * img.asDiagonal() * V.transpose());
    }
    case JacobianRep::Kind::DenseSymmetric: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(rep.dense());
      Eigen::VectorXd lam = solver.eigenvalues();
      Eigen::VectorXd img(lam.size());
      for (long i = 0; i < lam.size(); ++i) img[i] = checked_phi(f, lam[i], i);
      const Eigen::MatrixXd& V = solver.eigenvectors();
      return JacobianRep::dense_symmetric(V * img.asDiagonal() * V.transpose());
    }
  }
  throw Error("apply_spectral: bad kind");
}

// --- Assumption 1 --------------------------------------------------------

Assumption1Report assumption1_check(double a4, double a5, double lo, double hi,
                                    double step) {
  if (a4 <= 0.0 || a5 <= 0.0)
    throw ConfigError("assumption1_check: a4 and a5 must be positive");
  // psi(t) = (e^{a4 t} - 1)/(a4 t) + (a4/2 - 1/6)(e^{-a5 t^2} - 1)/(a5 t),
  // i.e. the variance spectrum at h = 1 (t standing for h * lambda).
  auto psi = [a4, a5](double t) {
    return variance_map_spectrum(VarianceVariant::gbO, t, 1.0, a4, a5);
  };
  Assumption1Report rep{true, psi(lo), lo, true};
  for (double t = lo; t <= hi + 0.5 * step; t += step) {
    const double v = psi(t);
    if (v < rep.min_value) {
      rep.min_value = v;
      rep.argmin = t;
    }
  }
  // Tails: as t -> +inf the first term ~ e^{a4 t}/(a4 t) -> +inf; as
  // t -> -inf it ~ -1/(a4 t) -> 0+ while the second term ~ -c/(a5 t): the
  // sum behaves like (1/|t|)(1/a4 + (a4/2 - 1/6)/a5), so the tail sign is
  // the sign of that coefficient.
  const double neg_tail_coeff = 1.0 / a4 + (0.5 * a4 - 1.0 / 6.0) / a5;
  rep.tails_positive = neg_tail_coeff > 0.0;
  rep.positive = rep.min_value > 0.0 && rep.tails_positive;
  return rep;
}

// --- log-determinant -----------------------------------------------------

namespace {

[[noreturn]] void throw_nonpositive(double lambda, long index) {
  std::ostringstream os;
  os << "log_det: nonpositive eigenvalue " << lambda << " at index " << index;
  throw NonPositiveSpectrum(lambda, index, os.str());
}

}  // namespace

double log_det(const JacobianRep& rep) {
  switch (rep.kind()) {
    case JacobianRep::Kind::Scalar:
      if (rep.scalar_value() <= 0.0) throw_nonpositive(rep.scalar_value(), 0);
      return static_cast<double>(rep.dim()) * std::log(rep.scalar_value());
    case JacobianRep::Kind::Diagonal: {
      double s = 0.0;
      for (long i = 0; i < rep.dim(); ++i) {
        if (rep.diag()[i] <= 0.0) throw_nonpositive(rep.diag()[i], i);
        s += std::log(rep.diag()[i]);
      }
      return s;
    }
    case JacobianRep::Kind::SymTridiagonal: {
      // LDL^T pivot recurrence: p_1 = d_1, p_k = d_k - b_{k-1}^2 / p_{k-1};
      // det = prod p_k, and positive definiteness iff all pivots positive.
      double sum = 0.0, prev = 0.0;
      for (long i = 0; i < rep.dim(); ++i) {
        double p = rep.diag()[i];
        if (i > 0) p -= rep.off()[i - 1] * rep.off()[i - 1] / prev;
        if (p <= 0.0) {
          // Not positive definite; fall back to eigenvalues to report the
          // offending one.
          Eigen::VectorXd lam = rep.eigenvalues();
          for (long j = 0; j < lam.size(); ++j)
            if (lam[j] <= 0.0) throw_nonpositive(lam[j], j);
          throw_nonpositive(p, i);  // unreachable in exact arithmetic
        }
        sum += std::log(p);
        prev = p;
      }
      return sum;
    }
    case JacobianRep::Kind::DenseSymmetric: {
      Eigen::LLT<Eigen::MatrixXd> llt(rep.dense());
      if (llt.info() == Eigen::Success) {
        double s = 0.0;
        for (long i = 0; i < rep.dim(); ++i)
          s += std::log(llt.matrixL()(i, i));
        return 2.0 * s;
      }
      Eigen::VectorXd lam = rep.eigenvalues();
      for (long j = 0; j < lam.size(); ++j)
        if (lam[j] <= 0.0) throw_nonpositive(lam[j], j);
      throw Error("log_det: Cholesky failed on a matrix with positive spectrum");
    }
  }
  throw Error("log_det: bad kind");
}

}  // namespace langevin
