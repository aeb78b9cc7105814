#pragma once

#include <functional>
#include <vector>

#include "projpair/core.hpp"

namespace projpair {

/// Circle |λ − center| = radius sampled by a trapezoidal rule starting at
/// `nodes` points.
struct ContourSpec {
  Scalar center{0.0, 0.0};
  double radius = 1.0;
  Index nodes = 64;

  /// radius > 0, nodes ≥ 8 and a power of two; throws InvalidContour.
  void validate() const;
};

/// Upper bound on the node count reached by doubling.
inline constexpr Index kMaxQuadratureNodes = Index{1} << 16;

struct QuadratureStep {
  Index nodes;   // node count of the finer rule
  double delta;  // ‖R_nodes − R_{nodes/2}‖_F
};

struct RieszResult {
  ComplexMatrix projector;
  std::vector<QuadratureStep> history;
};

/// (1/2πi) ∮ (λ − m)^{-1} dλ over the contour by the trapezoidal rule,
/// doubling the node count until successive rules agree to quad_tol.
RieszResult riesz_projection_traced(const ComplexMatrix& m, const ContourSpec& c, const ToleranceConfig& tol = {});
ComplexMatrix riesz_projection(const ComplexMatrix& m, const ContourSpec& c, const ToleranceConfig& tol = {});

/// z ↦ A(z) with a fixed square dimension. The evaluator is invoked
/// sequentially.
class MatrixFamily {
 public:
  using Evaluator = std::function<ComplexMatrix(Scalar)>;

  MatrixFamily(Evaluator evaluator, Index dim) : eval_(std::move(evaluator)), dim_(dim) {}

  Index dim() const noexcept { return dim_; }
  /// Throws DimensionMismatch if the evaluator returns the wrong shape.
  ComplexMatrix operator()(Scalar z) const;

 private:
  Evaluator eval_;
  Index dim_;
};

/// A(z) = Σ_j z^j C_j.
MatrixFamily polynomial_family(std::vector<ComplexMatrix> coefficients);

struct ReducedBlock {
  ComplexMatrix block;       // k×k compression of W A(z) W^{-1} to ran P(0)
  Frame frame;               // orthonormal basis of ran P(0)
  ComplexMatrix similarity;  // W with W P(z) = P(0) W
};

/// Moves the spectral group of A(z) enclosed by the contour onto the fixed
/// subspace ran P(0) and returns the restriction there. The eigenvalues of
/// the block are those of A(z) inside the contour.
ReducedBlock reduce_family(const MatrixFamily& f, Scalar z, const ContourSpec& c, const ToleranceConfig& tol = {});

/// Orthonormal basis of the range of an idempotent (singular values above
/// one half), phase-normalized.
Frame idempotent_range(const ComplexMatrix& projector);

}  // namespace projpair
