#pragma once

#include <functional>
#include <string>

#include "langevin/jacobian.hpp"

namespace langevin {

// Scalar spectral maps underlying the matrix functionals used by the Ozaki
// proposal family:
//   t1(t, h, a) = (exp((a h / 2) t) - 1) / (a t)
//   t2(t, h, a) = (exp(-(a h^2 / 4) t^2) - 1) / (a t)
//   t3(t, h, a) = (exp((a h / 2) t) - 1 - (a h / 2) t) / (a t)^2
// All three have removable singularities at t = 0 and are evaluated through
// a guarded direct/series branch pair (see series_threshold).

double t1_scalar(double t, double h, double a);
double t2_scalar(double t, double h, double a);
double t3_scalar(double t, double h, double a);

// |t| at or below this uses the truncated power series instead of the direct
// expression.  Chosen so the exponent argument stays below ~1e-4, where the
// series is exact to machine precision and the direct form starts losing
// digits to cancellation.
double series_threshold(double h, double a);

// Branch-forced evaluation, exposed for branch-agreement tests.
double t1_scalar_series(double t, double h, double a);
double t1_scalar_direct(double t, double h, double a);
double t2_scalar_series(double t, double h, double a);
double t2_scalar_direct(double t, double h, double a);
double t3_scalar_series(double t, double h, double a);
double t3_scalar_direct(double t, double h, double a);

enum class VarianceVariant { mO, bO, gbO };

// The scalar spectral function inside the square root of the proposal
// variance:
//   mO : t1(t, 2h, 1) - (h^2/3) t
//   bO : t1(t, 2h, 1) + (1/3) t2(t, 2h, 1)
//   gbO: t1(t, 2h, a4) + (a4/2 - 1/6) t2(t, 2h, a5)
double variance_map_spectrum(VarianceVariant v, double t, double h,
                             double a4 = 1.0, double a5 = 1.0);

// A scalar map applied to the spectrum of a JacobianRep.
struct SpectralFunctional {
  std::string label;
  std::function<double(double)> phi;
  // When set, eigenvalues must be strictly positive before applying phi
  // (sqrt / log); violations raise NonPositiveSpectrum.
  bool require_positive_input = false;

  static SpectralFunctional t1(double h, double a);
  static SpectralFunctional t2(double h, double a);
  static SpectralFunctional t3(double h, double a);
  static SpectralFunctional variance(VarianceVariant v, double h,
                                     double a4 = 1.0, double a5 = 1.0);
  static SpectralFunctional sqrt();
  static SpectralFunctional log();
};

// V diag(phi(lambda_i)) V^T for the eigendecomposition of rep.  Scalar and
// Diagonal inputs keep their structure and cost O(d); SymTridiagonal and
// DenseSymmetric inputs go through an eigensolver and come back dense.
JacobianRep apply_spectral(const JacobianRep& rep, const SpectralFunctional& f);

struct Assumption1Report {
  bool positive;
  double min_value;
  double argmin;
  bool tails_positive;
};

// Grid + tail-sign check that
//   t -> (e^{a4 t} - 1)/(a4 t) + (a4/2 - 1/6)(e^{-a5 t^2} - 1)/(a5 t)
// is positive on all of R.  Grid covers [lo, hi] with the given step.
Assumption1Report assumption1_check(double a4, double a5, double lo = -50.0,
                                    double hi = 50.0, double step = 0.01);

// log det of a positive-definite representation; Sum log(lambda_i).
// SymTridiagonal uses the O(d) LDL pivot recurrence.
double log_det(const JacobianRep& rep);

}  // namespace langevin
