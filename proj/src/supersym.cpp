#include "projpair/supersym.hpp"

#include <algorithm>
#include <cmath>

#include "projpair/subspaces.hpp"

namespace projpair {

SuperPair build_super(const OrthProjection& p, const OrthProjection& q) {
  require_same_dim(p.dim(), q.dim());
  const Index n = p.dim();
  return {p.matrix() - q.matrix(), ComplexMatrix::Identity(n, n) - p.matrix() - q.matrix()};
}

double IdentityResiduals::max() const {
  return std::max({sum_of_squares, anticommutator, p_a2, q_a2, p_b2, q_b2});
}

IdentityResiduals identity_residuals(const SuperPair& sp, const OrthProjection& p, const OrthProjection& q) {
  require_same_dim(sp.dim(), p.dim());
  require_same_dim(sp.dim(), q.dim());
  const Index n = sp.dim();
  const ComplexMatrix a2 = sp.a * sp.a;
  const ComplexMatrix b2 = sp.b * sp.b;
  return {
      (a2 + b2 - ComplexMatrix::Identity(n, n)).norm(),
      (sp.a * sp.b + sp.b * sp.a).norm(),
      commutator_norm(p.matrix(), a2),
      commutator_norm(q.matrix(), a2),
      commutator_norm(p.matrix(), b2),
      commutator_norm(q.matrix(), b2),
  };
}

ComplexMatrix matrix_sign(const ComplexMatrix& b, const ToleranceConfig& tol) {
  if (b.rows() != b.cols()) throw Error(ErrorCode::NotSquare, "sign function needs a square matrix");
  if (b.size() == 0) return b;
  const double herm = hermitian_residual(b);
  if (herm > tol.tol_herm * (1.0 + frobenius(b))) {
    throw Error(ErrorCode::NotHermitian, "sign function needs a Hermitian matrix", {{"residual", herm}});
  }
  const HermitianEigen eig = hermitian_eigen(b);
  const double smallest = eig.values.cwiseAbs().minCoeff();
  if (smallest <= tol.tol_spec) {
    throw Error(ErrorCode::SingularB, "matrix has an eigenvalue at zero", {{"min_abs_eigenvalue", smallest}});
  }
  return hermitian_function(eig, [](double x) { return x > 0.0 ? 1.0 : -1.0; });
}

SwapExistence swap_exists(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  const auto dims = kernel_quadruple(p, q, tol).dims();
  return {dims[0] == dims[3], dims[0], dims[3]};
}

SwapResult swap_unitary(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  const PairSpectrum spectrum = pair_spectrum(p, q, tol);
  const HalmosSplit split = halmos_split(p, q, spectrum);
  const Index k_pq = split.dim_k_pq;
  const Index k_1p_1q = split.h1.size() - k_pq;
  if (k_pq != k_1p_1q) {
    throw Error(ErrorCode::NoSwapExists, "dim ran P ∩ ker Q differs from dim ker P ∩ ran Q",
                {{"dim_k_pq", static_cast<double>(k_pq)},
                 {"dim_k_1p_1q", static_cast<double>(k_1p_1q)},
                 {"index", static_cast<double>(k_pq - k_1p_1q)}});
  }

  const Index n = p.dim();
  ComplexMatrix u = ComplexMatrix::Zero(n, n);

  // H1: T sends the i-th basis vector of K_{P,Q} to the i-th of K_{1-P,1-Q}.
  const auto from = split.h1.matrix().leftCols(k_pq);
  const auto to = split.h1.matrix().rightCols(k_1p_1q);
  u += to * from.adjoint() + from * to.adjoint();

  // H2: B restricted there has trivial kernel.
  if (split.h2.size() > 0) {
    const Index m = split.h2.size();
    const ComplexMatrix b2 = ComplexMatrix::Identity(m, m) - split.p2 - split.q2;
    const ComplexMatrix w = matrix_sign(b2, tol);
    u += split.h2.matrix() * w * split.h2.matrix().adjoint();
  }

  SwapResult result{std::move(u), false, k_pq};
  const double involution = (result.u * result.u - ComplexMatrix::Identity(n, n)).norm();
  result.is_symmetry = involution <= tol.tol_resid && hermitian_residual(result.u) <= tol.tol_resid;
  return result;
}

SwapResiduals swap_residuals(const ComplexMatrix& u, const OrthProjection& p, const OrthProjection& q) {
  require_same_dim(u.rows(), p.dim());
  require_same_dim(p.dim(), q.dim());
  const Index n = p.dim();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return {
      (u * p.matrix() * u.adjoint() - q.matrix()).norm(),
      (u * q.matrix() * u.adjoint() - p.matrix()).norm(),
      (u.adjoint() * u - id).norm(),
      (u * u - id).norm(),
      hermitian_residual(u),
  };
}

std::vector<double> sign_limit_check(const ComplexMatrix& b, const std::vector<double>& epsilons,
                                     const ToleranceConfig& tol) {
  const ComplexMatrix sign = matrix_sign(b, tol);
  const ComplexMatrix abs_b =
      hermitian_function(hermitian_eigen(b * b), [](double x) { return std::sqrt(std::max(x, 0.0)); });
  const Index n = b.rows();
  std::vector<double> out;
  out.reserve(epsilons.size());
  for (double eps : epsilons) {
    const ComplexMatrix shifted = abs_b + eps * ComplexMatrix::Identity(n, n);
    // B (|B| + ε)^-1 = ((|B| + ε)^-* B*)*, and both factors are Hermitian.
    const ComplexMatrix approx = shifted.partialPivLu().solve(b).adjoint();
    out.push_back(operator_norm(approx - sign));
  }
  return out;
}

std::pair<ComplexMatrix, ComplexMatrix> reconstruct_pq(const SuperPair& sp) {
  const ComplexMatrix id = ComplexMatrix::Identity(sp.dim(), sp.dim());
  return {0.5 * (sp.a - sp.b + id), 0.5 * (-sp.a - sp.b + id)};
}

}  // namespace projpair
