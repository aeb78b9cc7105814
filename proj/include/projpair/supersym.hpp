#pragma once

#include <utility>
#include <vector>

#include "projpair/core.hpp"

namespace projpair {

/// A = P - Q and B = 1 - P - Q. They satisfy A² + B² = 1 and AB + BA = 0.
struct SuperPair {
  ComplexMatrix a;
  ComplexMatrix b;

  Index dim() const { return a.rows(); }
};

SuperPair build_super(const OrthProjection& p, const OrthProjection& q);

struct IdentityResiduals {
  double sum_of_squares;  // ‖A² + B² − 1‖
  double anticommutator;  // ‖AB + BA‖
  double p_a2;            // ‖[P, A²]‖
  double q_a2;            // ‖[Q, A²]‖
  double p_b2;            // ‖[P, B²]‖
  double q_b2;            // ‖[Q, B²]‖

  double max() const;
};

/// Frobenius norms of the six algebraic identities of the pair.
IdentityResiduals identity_residuals(const SuperPair& sp, const OrthProjection& p, const OrthProjection& q);

/// sgn(B) from the Hermitian eigendecomposition of B. Throws SingularB if
/// any eigenvalue has magnitude ≤ tol_spec.
ComplexMatrix matrix_sign(const ComplexMatrix& b, const ToleranceConfig& tol = {});

struct SwapExistence {
  bool exists;
  Index dim_k_pq;      // dim ran P ∩ ker Q
  Index dim_k_1p_1q;   // dim ker P ∩ ran Q
};

SwapExistence swap_exists(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

struct SwapResult {
  ComplexMatrix u;
  bool is_symmetry = false;
  /// Dimension of the K_{P,Q} -> K_{1-P,1-Q} block.
  Index t_block_dims = 0;
};

/// Unitary U with UPU* = Q and UQU* = P, assembled as V ⊕ W: W = sgn(B)
/// on the complement of the ±1 eigenspaces of A, and V the antidiagonal
/// block pairing the i-th basis vector of K_{P,Q} with the i-th of
/// K_{1-P,1-Q}. The pairing is one choice among many; only the swap
/// relations are meaningful. Throws NoSwapExists when the two kernel
/// dimensions differ.
SwapResult swap_unitary(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

struct SwapResiduals {
  double p_to_q;      // ‖UPU* − Q‖
  double q_to_p;      // ‖UQU* − P‖
  double unitarity;   // ‖U*U − 1‖
  double involution;  // ‖U² − 1‖
  double hermitian;   // ‖U − U*‖
};

SwapResiduals swap_residuals(const ComplexMatrix& u, const OrthProjection& p, const OrthProjection& q);

/// For each ε, the operator-norm distance ‖B(|B| + ε)⁻¹ − sgn(B)‖. |B| is
/// taken as the square root of B², and the inverse by an LU solve.
std::vector<double> sign_limit_check(const ComplexMatrix& b, const std::vector<double>& epsilons,
                                     const ToleranceConfig& tol = {});

/// (½(A − B + 1), ½(−A − B + 1)).
std::pair<ComplexMatrix, ComplexMatrix> reconstruct_pq(const SuperPair& sp);

}  // namespace projpair
