#pragma once

#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <vector>

#include "projpair/core.hpp"

namespace projpair {

/// Seeded generator. Gaussians come from Box-Muller on the raw 64-bit
/// engine output so streams match across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Scalar complex_normal();  // E|z|² = 1

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// Haar-like unitary: QR of a complex Gaussian matrix with R's diagonal
/// made positive.
ComplexMatrix random_unitary(Index n, Rng& rng);
ComplexMatrix random_hermitian(Index n, Rng& rng);
ComplexMatrix random_complex(Index n, Rng& rng);

/// How a generated pair is assembled: 1-dimensional blocks for each of the
/// four kernel subspaces plus `generic` 2x2 blocks.
struct BlockLayout {
  Index k_pq = 0;
  Index k_p_1q = 0;
  Index k_1p_q = 0;
  Index k_1p_1q = 0;
  Index generic = 0;
};

struct RandomPairSpec {
  Index dim = 2;
  Index rank_p = 1;
  Index rank_q = 1;
  Index k_pq = 0;     // dim ran P ∩ ker Q
  Index k_1p_1q = 0;  // dim ker P ∩ ran Q
  std::uint64_t seed = 0;
  /// Number of generic blocks; the largest feasible count when unset.
  std::optional<Index> generic_blocks;
  double angle_min = 0.15;
  double angle_max = std::numbers::pi / 2 - 0.15;
};

/// Solves rank_p = k_pq + k_p_1q + g, rank_q = k_1p_1q + k_p_1q + g,
/// dim = k_pq + k_1p_1q + k_p_1q + k_1p_q + 2g. Throws InfeasibleSpec.
BlockLayout plan_blocks(const RandomPairSpec& spec);

struct RandomPair {
  ComplexMatrix p;
  ComplexMatrix q;
  BlockLayout layout;
  std::vector<double> angles;  // one per generic block, as drawn
};

/// Deterministic in `spec.seed`: blocks are assembled on the diagonal and
/// conjugated by a seeded random unitary.
RandomPair random_pair(const RandomPairSpec& spec);

}  // namespace projpair
