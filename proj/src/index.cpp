#include "projpair/index.hpp"

#include <cmath>

#include "projpair/subspaces.hpp"

namespace projpair {

IndexReport pair_index(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  const auto dims = kernel_quadruple(p, q, tol).dims();
  IndexReport r;
  r.dim_ker = dims[0];
  r.dim_coker = dims[3];
  r.index = r.dim_ker - r.dim_coker;
  r.trace_pq = (p.matrix() - q.matrix()).trace().real();
  r.swap_possible = r.index == 0;

  const double nearest = std::round(r.trace_pq);
  if (std::abs(r.trace_pq - nearest) > tol.tol_resid || static_cast<Index>(nearest) != r.index) {
    throw Error(ErrorCode::NonIntegerTrace, "tr(P − Q) does not match the index",
                {{"trace", r.trace_pq}, {"index", static_cast<double>(r.index)}});
  }
  return r;
}

ComplexMatrix fredholm_map(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  require_same_dim(p.dim(), q.dim());
  const ComplexMatrix range_p = hermitian_eigen(p.matrix()).eigenspace(1.0, tol.tol_spec);
  const ComplexMatrix range_q = hermitian_eigen(q.matrix()).eigenspace(1.0, tol.tol_spec);
  return range_q.adjoint() * q.matrix() * p.matrix() * range_p;
}

FredholmDims fredholm_dims(const ComplexMatrix& k, const ToleranceConfig& tol) {
  const RealVector sv = singular_values(k);
  const Index rank = (sv.array() > tol.tol_spec).count();
  return {k.cols() - rank, k.rows() - rank};
}

}  // namespace projpair
