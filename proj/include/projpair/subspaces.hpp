#pragma once

#include <array>
#include <vector>

#include "projpair/core.hpp"

namespace projpair {

/// Spectral data of a pair shared by the subspace constructions:
/// eigendecompositions of A = P - Q and S = P + Q.
struct PairSpectrum {
  HermitianEigen diff;  // A
  HermitianEigen sum;   // S
  double bin_width = 0.0;

  /// Eigenvalues of A outside the -1, 0 and +1 bins (the generic part).
  std::vector<double> generic_diff_values() const;
};

/// Decomposes A and P + Q. Throws AmbiguousSpectrum when an eigenvalue sits
/// just outside a classification bin, or when the zero bin of A disagrees
/// with the 0/2 bins of P + Q.
PairSpectrum pair_spectrum(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

/// Orthonormal bases of the four intersections of ranges and kernels.
struct KernelQuadruple {
  Frame k_pq;     // ran P ∩ ker Q     (A = +1)
  Frame k_p_1q;   // ran P ∩ ran Q     (P + Q = 2)
  Frame k_1p_q;   // ker P ∩ ker Q     (P + Q = 0)
  Frame k_1p_1q;  // ker P ∩ ran Q     (A = -1)

  std::array<Index, 4> dims() const {
    return {k_pq.size(), k_p_1q.size(), k_1p_q.size(), k_1p_1q.size()};
  }
  Index ambient() const { return k_pq.ambient(); }
  /// Dimension of the orthogonal complement of all four subspaces.
  Index generic_dim() const;
};

KernelQuadruple kernel_quadruple(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});
KernelQuadruple kernel_quadruple(const PairSpectrum& spectrum);

/// H = H1 ⊕ H2 with H1 = K_{P,Q} ⊕ K_{1-P,1-Q}; p2 and q2 are the
/// compressions of P and Q to H2 in the h2 basis.
struct HalmosSplit {
  Frame h1;
  Frame h2;
  ComplexMatrix p2;
  ComplexMatrix q2;
  Index dim_k_pq = 0;  // leading columns of h1 spanning K_{P,Q}
};

HalmosSplit halmos_split(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});
HalmosSplit halmos_split(const OrthProjection& p, const OrthProjection& q, const PairSpectrum& spectrum);

/// Angles in (0, π/2) of the generic 2x2 blocks, ascending. Each block
/// contributes one angle θ with sin²θ an eigenvalue of A² of multiplicity two.
std::vector<double> principal_angles(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});
std::vector<double> principal_angles(const PairSpectrum& spectrum);

}  // namespace projpair
