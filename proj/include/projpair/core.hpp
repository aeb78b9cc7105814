#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace projpair {

using Scalar = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

enum class ErrorCode {
  NotSquare,
  NotHermitian,
  NotIdempotent,
  NonFinite,
  DimensionTooLarge,
  DimensionMismatch,
  FrameNotOrthonormal,
  InvalidTolerance,
  AmbiguousSpectrum,
  OddGenericDimension,
  SingularB,
  NoSwapExists,
  NormTooLarge,
  SeriesNotConverged,
  InvalidContour,
  EigenvalueOnContour,
  QuadratureNotConverged,
  RankChanged,
  NonIntegerTrace,
  InfeasibleSpec,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `details` holds the named numbers a caller may
/// want to report (residuals, dimensions, norms).
class Error : public std::runtime_error {
 public:
  using Detail = std::pair<std::string, double>;

  Error(ErrorCode code, const std::string& message, std::vector<Detail> details = {})
      : std::runtime_error(message), code_(code), details_(std::move(details)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::vector<Detail>& details() const noexcept { return details_; }
  double detail(const std::string& name) const;

 private:
  ErrorCode code_;
  std::vector<Detail> details_;
};

struct ToleranceConfig {
  double tol_herm = 1e-10;
  double tol_idem = 1e-10;
  double tol_spec = 1e-8;
  double tol_resid = 1e-8;
  double quad_tol = 1e-10;
  /// Largest accepted ambient dimension.
  Index max_dim = 1024;

  /// Throws InvalidTolerance unless every field is positive and tol_spec < 0.5.
  void validate() const;
};

// ---------------------------------------------------------------------------
// Expression-friendly numeric helpers.

template <typename Derived>
double frobenius(const Eigen::MatrixBase<Derived>& m) {
  return m.norm();
}

template <typename Derived>
double hermitian_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m - m.adjoint()).norm();
}

template <typename Derived>
double idempotency_residual(const Eigen::MatrixBase<Derived>& m) {
  return (m * m - m).norm();
}

template <typename Derived>
double unitarity_residual(const Eigen::MatrixBase<Derived>& u) {
  using Plain = typename Derived::PlainObject;
  return (u.adjoint() * u - Plain::Identity(u.cols(), u.cols())).norm();
}

template <typename DerivedA, typename DerivedB>
double commutator_norm(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b - b * a).norm();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  return m.allFinite();
}

/// Largest singular value; zero for empty matrices.
double operator_norm(const ComplexMatrix& m);

/// Singular values in decreasing order.
RealVector singular_values(const ComplexMatrix& m);

/// Multiplies `v` by a unit phase so that its largest-magnitude component is
/// real and positive. Components whose magnitudes agree with the maximum to
/// a relative 1e-12 count as ties; the lowest index wins.
template <typename Derived>
void normalize_phase(Eigen::MatrixBase<Derived>& v) {
  if (v.size() == 0) return;
  double best = v.cwiseAbs().maxCoeff();
  if (best == 0.0) return;
  Index pick = 0;
  for (Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= best * (1.0 - 1e-12)) {
      pick = i;
      break;
    }
  }
  const Scalar phase = std::conj(v(pick)) / std::abs(v(pick));
  v *= phase;
}

/// Column-wise normalize_phase.
void normalize_column_phases(ComplexMatrix& m);

/// Hermitian eigendecomposition with eigenvalues in ascending order.
struct HermitianEigen {
  RealVector values;
  ComplexMatrix vectors;

  /// Columns whose eigenvalue lies within `half_width` of `center`,
  /// phase-normalized.
  ComplexMatrix eigenspace(double center, double half_width) const;
  Index count_near(double center, double half_width) const;
};

/// Symmetrizes (m + m*)/2 before decomposing.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// V f(Λ) V* for Hermitian `m`.
template <typename Fn>
ComplexMatrix hermitian_function(const HermitianEigen& eig, Fn&& fn) {
  RealVector mapped = eig.values.unaryExpr(fn);
  return eig.vectors * mapped.asDiagonal() * eig.vectors.adjoint();
}

// ---------------------------------------------------------------------------
// Validated value types.

/// Hermitian idempotent square matrix.
class OrthProjection {
 public:
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Index dim() const noexcept { return mat_.rows(); }
  double hermitian_residual() const noexcept { return herm_resid_; }
  double idempotency_residual() const noexcept { return idem_resid_; }
  /// Number of eigenvalues in the unit bin.
  Index rank() const noexcept { return rank_; }

 private:
  friend OrthProjection validate_projection(const ComplexMatrix&, const ToleranceConfig&);
  OrthProjection(ComplexMatrix m, double herm, double idem, Index rank)
      : mat_(std::move(m)), herm_resid_(herm), idem_resid_(idem), rank_(rank) {}

  ComplexMatrix mat_;
  double herm_resid_ = 0.0;
  double idem_resid_ = 0.0;
  Index rank_ = 0;
};

/// Checks squareness, finiteness, Hermiticity, idempotency and the spectrum
/// against `tol`. Inputs are never repaired.
OrthProjection validate_projection(const ComplexMatrix& m, const ToleranceConfig& tol = {});

/// Orthonormal columns spanning a subspace of C^n. Zero columns is the
/// empty frame.
class Frame {
 public:
  Frame(ComplexMatrix m, const ToleranceConfig& tol = {});
  static Frame empty(Index ambient);

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Index ambient() const noexcept { return mat_.rows(); }
  Index size() const noexcept { return mat_.cols(); }

 private:
  struct Unchecked {};
  Frame(ComplexMatrix m, Unchecked) : mat_(std::move(m)) {}
  friend Frame frame_unchecked(ComplexMatrix m);

  ComplexMatrix mat_;
};

/// For columns produced by a unitary eigensolver; skips the orthonormality check.
Frame frame_unchecked(ComplexMatrix m);

/// f f*. The range of the result is span f.
OrthProjection projection_from_frame(const Frame& f, const ToleranceConfig& tol = {});

inline void require_same_dim(Index a, Index b) {
  if (a != b) {
    throw Error(ErrorCode::DimensionMismatch,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b),
                {{"dim_a", static_cast<double>(a)}, {"dim_b", static_cast<double>(b)}});
  }
}

}  // namespace projpair
