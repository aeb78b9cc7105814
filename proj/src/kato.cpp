#include "projpair/kato.hpp"

#include <cmath>

namespace projpair {

namespace {

void require_norm_below_one(const ComplexMatrix& diff, const ToleranceConfig& tol) {
  const double norm = operator_norm(diff);
  if (!(norm < 1.0 - tol.tol_spec)) {
    throw Error(ErrorCode::NormTooLarge, "‖P − Q‖ is not below 1", {{"norm", norm}});
  }
}

ComplexMatrix kato_bracket(const ComplexMatrix& p, const ComplexMatrix& q) {
  const Index n = p.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return q * p + (id - q) * (id - p);
}

}  // namespace

ObliqueProjection::ObliqueProjection(ComplexMatrix m, const ToleranceConfig& tol) : mat_(std::move(m)) {
  if (mat_.rows() != mat_.cols() || mat_.rows() == 0) {
    throw Error(ErrorCode::NotSquare, "projection must be a non-empty square matrix");
  }
  if (!all_finite(mat_)) throw Error(ErrorCode::NonFinite, "matrix has non-finite entries");
  const double idem = idempotency_residual(mat_);
  if (idem > tol.tol_idem * (1.0 + frobenius(mat_))) {
    throw Error(ErrorCode::NotIdempotent, "matrix is not idempotent", {{"residual", idem}});
  }
}

ComplexMatrix kato_unitary(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  require_same_dim(p.dim(), q.dim());
  const ComplexMatrix diff = p.matrix() - q.matrix();
  require_norm_below_one(diff, tol);

  const Index n = p.dim();
  const HermitianEigen eig = hermitian_eigen(ComplexMatrix::Identity(n, n) - diff * diff);
  const ComplexMatrix inv_sqrt = hermitian_function(eig, [](double x) { return 1.0 / std::sqrt(x); });
  return kato_bracket(p.matrix(), q.matrix()) * inv_sqrt;
}

ComplexMatrix oblique_similarity(const ObliqueProjection& p, const ObliqueProjection& q,
                                 const ToleranceConfig& tol) {
  require_same_dim(p.dim(), q.dim());
  const ComplexMatrix diff = p.matrix() - q.matrix();
  require_norm_below_one(diff, tol);

  // (1 − X)^{-1/2} = Σ c_k X^k,  c_0 = 1,  c_{k+1} = c_k (2k+1)/(2k+2).
  const Index n = p.dim();
  const ComplexMatrix x = diff * diff;
  ComplexMatrix power = ComplexMatrix::Identity(n, n);
  ComplexMatrix sum = power;
  double coeff = 1.0;
  bool converged = false;
  for (int k = 0; k < kMaxSeriesTerms; ++k) {
    coeff *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
    power = power * x;
    const double term_norm = coeff * power.norm();
    sum += coeff * power;
    if (term_norm <= tol.quad_tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw Error(ErrorCode::SeriesNotConverged, "binomial series did not converge",
                {{"terms", static_cast<double>(kMaxSeriesTerms)}});
  }
  return kato_bracket(p.matrix(), q.matrix()) * sum;
}

WolfCondition wolf_condition(const ObliqueProjection& p, const ObliqueProjection& q) {
  require_same_dim(p.dim(), q.dim());
  const double diff = operator_norm(p.matrix() - q.matrix());
  const double np = operator_norm(p.matrix());
  const double nq = operator_norm(q.matrix());
  const double prod_p = diff * np * np;
  const double prod_q = diff * nq * nq;
  return {prod_p < 1.0 && prod_q < 1.0, prod_p, prod_q};
}

}  // namespace projpair
