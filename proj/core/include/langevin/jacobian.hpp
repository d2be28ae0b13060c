#pragma once

#include <Eigen/Dense>

#include "langevin/errors.hpp"

namespace langevin {

// Structured representation of a symmetric-spectrum matrix, typically the
// drift Jacobian Df(x).  Scalar and Diagonal variants never materialize a
// matrix; SymTridiagonal stores the diagonal and first off-diagonal;
// DenseSymmetric is symmetrized at construction.
class JacobianRep {
 public:
  enum class Kind { Scalar, Diagonal, SymTridiagonal, DenseSymmetric };

  JacobianRep() = default;  // empty Scalar of dimension 0

  static JacobianRep scalar(double value, long dim);
  static JacobianRep diagonal(Eigen::VectorXd entries);
  // off has size dim-1; entry off[i] couples coordinates i and i+1.
  static JacobianRep sym_tridiagonal(Eigen::VectorXd diag, Eigen::VectorXd off);
  static JacobianRep dense_symmetric(Eigen::MatrixXd m);

  Kind kind() const { return kind_; }
  long dim() const { return dim_; }

  double scalar_value() const { return value_; }
  const Eigen::VectorXd& diag() const { return diag_; }
  const Eigen::VectorXd& off() const { return off_; }
  const Eigen::MatrixXd& dense() const { return dense_; }

  // Matrix-vector product; O(d) except for DenseSymmetric.
  Eigen::VectorXd matvec(const Eigen::VectorXd& v) const;

  // Single entry (i, j); used by finite-difference checks only.
  double coeff(long i, long j) const;

  // Sorted not required; Scalar/Diagonal are read off directly, the other
  // variants go through a symmetric eigensolver.
  Eigen::VectorXd eigenvalues() const;

  // Dense materialization (tests and small-dimension paths only).
  Eigen::MatrixXd to_dense() const;

 private:
  Kind kind_ = Kind::Scalar;
  long dim_ = 0;
  double value_ = 0.0;
  Eigen::VectorXd diag_, off_;
  Eigen::MatrixXd dense_;
};

}  // namespace langevin
