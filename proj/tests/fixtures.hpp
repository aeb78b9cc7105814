#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "projpair/core.hpp"
#include "projpair/random_pair.hpp"

namespace projpair::testing {

inline ComplexMatrix mat2(Scalar a, Scalar b, Scalar c, Scalar d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

inline ComplexMatrix diag(std::initializer_list<double> entries) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Index>(entries.size()), static_cast<Index>(entries.size()));
  Index i = 0;
  for (double e : entries) {
    m(i, i) = e;
    ++i;
  }
  return m;
}

/// Orthogonal projection onto span e_i in C^n.
inline ComplexMatrix proj_e(Index i, Index n) {
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  m(i, i) = 1.0;
  return m;
}

/// Projection onto (cos θ, sin θ), written entrywise.
inline ComplexMatrix line_projection(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return mat2(c * c, c * s, c * s, s * s);
}

/// The planar pair: P onto e1, Q onto (cos θ, sin θ).
struct ThetaPair {
  OrthProjection p;
  OrthProjection q;
};

inline ThetaPair theta_pair(double theta) {
  return {validate_projection(proj_e(0, 2)), validate_projection(line_projection(theta))};
}

inline ComplexMatrix direct_sum(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix m = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  m.topLeftCorner(a.rows(), a.cols()) = a;
  m.bottomRightCorner(b.rows(), b.cols()) = b;
  return m;
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// A pair request drawn uniformly over feasible layouts of dimension n:
/// g generic blocks, then the remaining n − 2g split among the four
/// kernel subspaces.
inline RandomPairSpec random_layout_spec(Index n, std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const Index g = static_cast<Index>(rng.uniform() * static_cast<double>(n / 2 + 1));
  Index rest = n - 2 * g;
  Index parts[4] = {0, 0, 0, 0};
  for (Index i = 0; i < rest; ++i) parts[static_cast<int>(rng.uniform() * 4.0)]++;
  RandomPairSpec spec;
  spec.dim = n;
  spec.k_pq = parts[0];
  spec.k_1p_1q = parts[3];
  spec.rank_p = parts[0] + parts[1] + g;
  spec.rank_q = parts[3] + parts[1] + g;
  spec.generic_blocks = g;
  spec.seed = seed;
  return spec;
}

/// Rank of an idempotent from an independent route: its trace.
inline Index trace_rank(const ComplexMatrix& m) { return static_cast<Index>(std::lround(m.trace().real())); }

/// Spectral projector for the eigenvalues inside a circle, from the
/// eigenvector matrix V and its inverse: Σ_inside v_i (V^{-1})_i.
inline ComplexMatrix eigen_projector(const ComplexMatrix& m, Scalar center, double radius) {
  Eigen::ComplexEigenSolver<ComplexMatrix> es(m);
  const ComplexMatrix v = es.eigenvectors();
  const ComplexMatrix vinv = v.inverse();
  ComplexMatrix out = ComplexMatrix::Zero(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    if (std::abs(es.eigenvalues()(i) - center) < radius) out += v.col(i) * vinv.row(i);
  }
  return out;
}

inline std::vector<Scalar> sorted_values(const ComplexVector& v) {
  std::vector<Scalar> out(v.data(), v.data() + v.size());
  std::sort(out.begin(), out.end(), [](Scalar a, Scalar b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return out;
}

inline std::vector<Scalar> eigenvalues_of(const ComplexMatrix& m) {
  return sorted_values(Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues());
}

}  // namespace projpair::testing
