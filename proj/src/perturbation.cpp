#include "projpair/perturbation.hpp"

#include <cmath>
#include <numbers>

#include "projpair/kato.hpp"

namespace projpair {

void ContourSpec::validate() const {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center.real()) || !std::isfinite(center.imag())) {
    throw Error(ErrorCode::InvalidContour, "contour radius must be positive and finite", {{"radius", radius}});
  }
  if (nodes < 8 || (nodes & (nodes - 1)) != 0) {
    throw Error(ErrorCode::InvalidContour, "node count must be a power of two, at least 8",
                {{"nodes", static_cast<double>(nodes)}});
  }
  if (nodes > kMaxQuadratureNodes) {
    throw Error(ErrorCode::InvalidContour, "node count exceeds the quadrature cap",
                {{"nodes", static_cast<double>(nodes)}});
  }
}

namespace {

// Σ r ω (λ − m)^{-1} over the nodes λ = c + r ω, ω = exp(2πi (offset + j·stride)/total).
ComplexMatrix node_sum(const ComplexMatrix& m, const ContourSpec& c, Index total, Index offset, Index stride) {
  const Index n = m.rows();
  const ComplexMatrix id = ComplexMatrix::Identity(n, n);
  ComplexMatrix acc = ComplexMatrix::Zero(n, n);
  for (Index j = offset; j < total; j += stride) {
    const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(total);
    const Scalar omega = std::polar(1.0, phi);
    const Scalar lambda = c.center + c.radius * omega;
    const ComplexMatrix shifted = lambda * id - m;
    acc += (c.radius * omega) * shifted.partialPivLu().solve(id);
  }
  return acc;
}

}  // namespace

RieszResult riesz_projection_traced(const ComplexMatrix& m, const ContourSpec& c, const ToleranceConfig& tol) {
  tol.validate();
  c.validate();
  if (m.rows() != m.cols() || m.rows() == 0) throw Error(ErrorCode::NotSquare, "matrix must be square");
  if (!all_finite(m)) throw Error(ErrorCode::NonFinite, "matrix has non-finite entries");

  const double guard = tol.tol_spec * (1.0 + std::abs(c.center) + c.radius);
  const ComplexVector eigenvalues = Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues();
  for (Index i = 0; i < eigenvalues.size(); ++i) {
    const double gap = std::abs(std::abs(eigenvalues(i) - c.center) - c.radius);
    if (gap <= guard) {
      throw Error(ErrorCode::EigenvalueOnContour, "an eigenvalue lies on the contour",
                  {{"eigenvalue_re", eigenvalues(i).real()}, {"eigenvalue_im", eigenvalues(i).imag()}, {"gap", gap}});
    }
  }

  Index nodes = c.nodes;
  ComplexMatrix sum = node_sum(m, c, nodes, 0, 1);
  ComplexMatrix current = sum / static_cast<double>(nodes);
  RieszResult result;
  while (nodes < kMaxQuadratureNodes) {
    const Index finer = 2 * nodes;
    sum += node_sum(m, c, finer, 1, 2);
    ComplexMatrix refined = sum / static_cast<double>(finer);
    const double delta = (refined - current).norm();
    result.history.push_back({finer, delta});
    current = std::move(refined);
    nodes = finer;
    if (delta <= tol.quad_tol) {
      result.projector = std::move(current);
      return result;
    }
  }
  throw Error(ErrorCode::QuadratureNotConverged, "contour quadrature did not converge",
              {{"nodes", static_cast<double>(nodes)}, {"delta", result.history.back().delta}});
}

ComplexMatrix riesz_projection(const ComplexMatrix& m, const ContourSpec& c, const ToleranceConfig& tol) {
  return riesz_projection_traced(m, c, tol).projector;
}

ComplexMatrix MatrixFamily::operator()(Scalar z) const {
  ComplexMatrix m = eval_(z);
  if (m.rows() != dim_ || m.cols() != dim_) {
    throw Error(ErrorCode::DimensionMismatch, "family evaluator returned a matrix of the wrong shape",
                {{"rows", static_cast<double>(m.rows())}, {"cols", static_cast<double>(m.cols())},
                 {"dim", static_cast<double>(dim_)}});
  }
  return m;
}

MatrixFamily polynomial_family(std::vector<ComplexMatrix> coefficients) {
  if (coefficients.empty()) throw Error(ErrorCode::DimensionMismatch, "polynomial family needs a coefficient");
  const Index n = coefficients.front().rows();
  for (const auto& c : coefficients) {
    if (c.rows() != n || c.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "family coefficients must be square and equal-sized");
    }
  }
  // Horner
  auto eval = [coeffs = std::move(coefficients)](Scalar z) {
    ComplexMatrix acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = z * acc + *it;
    return acc;
  };
  return MatrixFamily(std::move(eval), n);
}

Frame idempotent_range(const ComplexMatrix& projector) {
  Eigen::BDCSVD<ComplexMatrix> svd(projector, Eigen::ComputeThinU);
  const Index rank = (svd.singularValues().array() > 0.5).count();
  ComplexMatrix basis = svd.matrixU().leftCols(rank);
  normalize_column_phases(basis);
  return frame_unchecked(std::move(basis));
}

ReducedBlock reduce_family(const MatrixFamily& f, Scalar z, const ContourSpec& c, const ToleranceConfig& tol) {
  const ComplexMatrix a0 = f(Scalar(0.0, 0.0));
  const ComplexMatrix az = f(z);
  const ComplexMatrix p0 = riesz_projection(a0, c, tol);
  const ComplexMatrix pz = riesz_projection(az, c, tol);

  Frame frame = idempotent_range(p0);
  const Index rank_z = idempotent_range(pz).size();
  if (rank_z != frame.size()) {
    throw Error(ErrorCode::RankChanged, "the contour encloses a different number of eigenvalues at z",
                {{"rank_0", static_cast<double>(frame.size())}, {"rank_z", static_cast<double>(rank_z)}});
  }

  // Quadrature output is idempotent to tol_resid, not to tol_idem.
  ToleranceConfig relaxed = tol;
  relaxed.tol_idem = std::max(tol.tol_idem, tol.tol_resid);
  ComplexMatrix w = oblique_similarity(ObliqueProjection(pz, relaxed), ObliqueProjection(p0, relaxed), tol);

  const ComplexMatrix& basis = frame.matrix();
  const ComplexMatrix moved = w * (az * w.partialPivLu().solve(basis));
  ComplexMatrix block = basis.adjoint() * moved;
  return {std::move(block), std::move(frame), std::move(w)};
}

}  // namespace projpair
