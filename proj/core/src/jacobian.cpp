#include "langevin/jacobian.hpp"

#include <Eigen/Eigenvalues>

namespace langevin {

JacobianRep JacobianRep::scalar(double value, long dim) {
  JacobianRep r;
  r.kind_ = Kind::Scalar;
  r.dim_ = dim;
  r.value_ = value;
  return r;
}

JacobianRep JacobianRep::diagonal(Eigen::VectorXd entries) {
  JacobianRep r;
  r.kind_ = Kind::Diagonal;
  r.dim_ = entries.size();
  r.diag_ = std::move(entries);
  return r;
}

JacobianRep JacobianRep::sym_tridiagonal(Eigen::VectorXd diag,
                                         Eigen::VectorXd off) {
  if (off.size() != diag.size() - 1)
    throw Error("sym_tridiagonal: off-diagonal must have dim-1 entries");
  JacobianRep r;
  r.kind_ = Kind::SymTridiagonal;
  r.dim_ = diag.size();
  r.diag_ = std::move(diag);
  r.off_ = std::move(off);
  return r;
}

JacobianRep JacobianRep::dense_symmetric(Eigen::MatrixXd m) {
  if (m.rows() != m.cols())
    throw Error("dense_symmetric: matrix must be square");
  JacobianRep r;
  r.kind_ = Kind::DenseSymmetric;
  r.dim_ = m.rows();
  r.dense_ = 0.5 * (m + m.transpose());  // enforce symmetry
  return r;
}

Eigen::VectorXd JacobianRep::matvec(const Eigen::VectorXd& v) const {
  switch (kind_) {
    case Kind::Scalar:
      return value_ * v;
    case Kind::Diagonal:
      return diag_.cwiseProduct(v);
    case Kind::SymTridiagonal: {
      Eigen::VectorXd out(dim_);
      for (long i = 0; i < dim_; ++i) {
        double s = diag_[i] * v[i];
        if (i > 0) s += off_[i - 1] * v[i - 1];
        if (i + 1 < dim_) s += off_[i] * v[i + 1];
        out[i] = s;
      }
      return out;
    }
    case Kind::DenseSymmetric:
      return dense_ * v;
  }
  throw Error("matvec: bad kind");
}

double JacobianRep::coeff(long i, long j) const {
  switch (kind_) {
    case Kind::Scalar:
      return i == j ? value_ : 0.0;
    case Kind::Diagonal:
      return i == j ? diag_[i] : 0.0;
    case Kind::SymTridiagonal:
      if (i == j) return diag_[i];
      if (i == j + 1) return off_[j];
      if (j == i + 1) return off_[i];
      return 0.0;
    case Kind::DenseSymmetric:
      return dense_(i, j);
  }
  throw Error("coeff: bad kind");
}

Eigen::VectorXd JacobianRep::eigenvalues() const {
  switch (kind_) {
    case Kind::Scalar:
      return Eigen::VectorXd::Constant(dim_, value_);
    case Kind::Diagonal:
      return diag_;
    case Kind::SymTridiagonal: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
      solver.computeFromTridiagonal(diag_, off_, Eigen::EigenvaluesOnly);
      return solver.eigenvalues();
    }
    case Kind::DenseSymmetric: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
          dense_, Eigen::EigenvaluesOnly);
      return solver.eigenvalues();
    }
  }
  throw Error("eigenvalues: bad kind");
}

Eigen::MatrixXd JacobianRep::to_dense() const {
  switch (kind_) {
    case Kind::Scalar:
      return value_ * Eigen::MatrixXd::Identity(dim_, dim_);
    case Kind::Diagonal:
      return diag_.asDiagonal();
    case Kind::SymTridiagonal: {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim_, dim_);
      for (long i = 0; i < dim_; ++i) {
        m(i, i) = diag_[i];
        if (i + 1 < dim_) m(i, i + 1) = m(i + 1, i) = off_[i];
      }
      return m;
    }
    case Kind::DenseSymmetric:
      return dense_;
  }
  throw Error("to_dense: bad kind");
}

}  // namespace langevin
