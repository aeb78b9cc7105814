#pragma once

#include "projpair/core.hpp"

namespace projpair {

/// Idempotent square matrix, not necessarily Hermitian.
class ObliqueProjection {
 public:
  explicit ObliqueProjection(ComplexMatrix m, const ToleranceConfig& tol = {});
  explicit ObliqueProjection(const OrthProjection& p) : mat_(p.matrix()) {}

  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Index dim() const noexcept { return mat_.rows(); }

 private:
  ComplexMatrix mat_;
};

/// Kato's intertwiner U = [QP + (1−Q)(1−P)] [1 − (P−Q)²]^{-1/2}, with the
/// inverse square root taken spectrally. U is unitary and UP = QU.
/// Requires ‖P − Q‖ < 1 − tol_spec, otherwise throws NormTooLarge.
ComplexMatrix kato_unitary(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

/// The same intertwiner for oblique projections, with (1 − X)^{-1/2},
/// X = (P−Q)², summed as a binomial series until a term's Frobenius norm
/// drops to quad_tol. The result W is invertible with WP = QW but in
/// general not unitary.
ComplexMatrix oblique_similarity(const ObliqueProjection& p, const ObliqueProjection& q,
                                 const ToleranceConfig& tol = {});

struct WolfCondition {
  bool holds;
  double product_p;  // ‖P−Q‖ ‖P‖²
  double product_q;  // ‖P−Q‖ ‖Q‖²
};

WolfCondition wolf_condition(const ObliqueProjection& p, const ObliqueProjection& q);

/// Upper bound on binomial series terms before SeriesNotConverged.
inline constexpr int kMaxSeriesTerms = 10000;

}  // namespace projpair
