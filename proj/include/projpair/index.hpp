#pragma once

#include "projpair/core.hpp"

namespace projpair {

// In finite dimension every P − Q is compact and K below is always
// Fredholm, so no compactness check is made.

struct IndexReport {
  Index dim_ker = 0;    // dim ran P ∩ ker Q
  Index dim_coker = 0;  // dim ker P ∩ ran Q
  Index index = 0;      // dim_ker − dim_coker
  double trace_pq = 0.0;
  bool swap_possible = false;
};

/// Index of the pair; cross-checked against tr(P − Q). Throws
/// NonIntegerTrace if the trace is not within tol_resid of the index.
IndexReport pair_index(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

/// Matrix of K = QP restricted to ran P, as a map ran P → ran Q, in the
/// phase-normalized eigenbases of P and Q. Shape is rank Q × rank P.
ComplexMatrix fredholm_map(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol = {});

struct FredholmDims {
  Index dim_ker;
  Index dim_coker;
};

/// Kernel and cokernel dimensions of a rectangular K, counting singular
/// values ≤ tol_spec as zero.
FredholmDims fredholm_dims(const ComplexMatrix& k, const ToleranceConfig& tol = {});

}  // namespace projpair
