#include "projpair/random_pair.hpp"

#include <cmath>
#include <string>

namespace projpair {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::normal() {
  if (spare_) {
    const double out = *spare_;
    spare_.reset();
    return out;
  }
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 == 0.0);
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Scalar Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return Scalar(re, im) / std::sqrt(2.0);
}

ComplexMatrix random_complex(Index n, Rng& rng) {
  ComplexMatrix g(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = rng.complex_normal();
  return g;
}

ComplexMatrix random_unitary(Index n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  for (Index j = 0; j < n; ++j) {
    const Scalar r = qr.matrixQR()(j, j);
    if (std::abs(r) > 0.0) q.col(j) *= r / std::abs(r);
  }
  return q;
}

ComplexMatrix random_hermitian(Index n, Rng& rng) {
  const ComplexMatrix g = random_complex(n, rng);
  return 0.5 * (g + g.adjoint());
}

BlockLayout plan_blocks(const RandomPairSpec& s) {
  auto infeasible = [&](const std::string& why) -> Error {
    return Error(ErrorCode::InfeasibleSpec, "infeasible pair request: " + why,
                 {{"dim", static_cast<double>(s.dim)},
                  {"rank_p", static_cast<double>(s.rank_p)},
                  {"rank_q", static_cast<double>(s.rank_q)},
                  {"k_pq", static_cast<double>(s.k_pq)},
                  {"k_1p_1q", static_cast<double>(s.k_1p_1q)}});
  };
  if (s.dim < 1) throw infeasible("dimension must be positive");
  if (s.rank_p < 0 || s.rank_q < 0 || s.k_pq < 0 || s.k_1p_1q < 0) throw infeasible("negative count");
  if (s.rank_p > s.dim || s.rank_q > s.dim) throw infeasible("rank exceeds dimension");
  if (s.k_pq > s.rank_p) throw infeasible("dim ran P ∩ ker Q exceeds rank P");
  if (s.k_1p_1q > s.rank_q) throw infeasible("dim ker P ∩ ran Q exceeds rank Q");
  // Both ranks minus their private kernels are shared + generic.
  const Index shared = s.rank_p - s.k_pq;
  if (shared != s.rank_q - s.k_1p_1q) throw infeasible("rank P − dim K_{P,Q} must equal rank Q − dim K_{1-P,1-Q}");
  const Index room = s.dim - s.k_pq - s.k_1p_1q - shared;
  if (room < 0) throw infeasible("kernel dimensions and ranks exceed the dimension");

  const Index max_generic = std::min(shared, room);
  const Index generic = s.generic_blocks.value_or(max_generic);
  if (generic < 0 || generic > max_generic) throw infeasible("generic block count does not fit");
  if (!(s.angle_min > 0.0) || !(s.angle_max < std::numbers::pi / 2) || s.angle_min > s.angle_max) {
    throw infeasible("angle range must lie inside (0, π/2)");
  }

  BlockLayout layout;
  layout.k_pq = s.k_pq;
  layout.k_1p_1q = s.k_1p_1q;
  layout.generic = generic;
  layout.k_p_1q = shared - generic;
  layout.k_1p_q = room - generic;
  return layout;
}

RandomPair random_pair(const RandomPairSpec& spec) {
  const BlockLayout layout = plan_blocks(spec);
  Rng rng(spec.seed);

  const Index n = spec.dim;
  ComplexMatrix p = ComplexMatrix::Zero(n, n);
  ComplexMatrix q = ComplexMatrix::Zero(n, n);
  Index at = 0;
  for (Index i = 0; i < layout.k_pq; ++i, ++at) p(at, at) = 1.0;
  for (Index i = 0; i < layout.k_p_1q; ++i, ++at) p(at, at) = q(at, at) = 1.0;
  at += layout.k_1p_q;
  for (Index i = 0; i < layout.k_1p_1q; ++i, ++at) q(at, at) = 1.0;

  std::vector<double> angles;
  for (Index b = 0; b < layout.generic; ++b, at += 2) {
    const double theta = rng.uniform(spec.angle_min, spec.angle_max);
    angles.push_back(theta);
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    p(at, at) = 1.0;
    q(at, at) = c * c;
    q(at, at + 1) = q(at + 1, at) = c * s;
    q(at + 1, at + 1) = s * s;
  }

  const ComplexMatrix u = random_unitary(n, rng);
  ComplexMatrix pu = u * p * u.adjoint();
  ComplexMatrix qu = u * q * u.adjoint();
  // Exact Hermitian symmetry of the stored matrices.
  pu = 0.5 * (pu + pu.adjoint()).eval();
  qu = 0.5 * (qu + qu.adjoint()).eval();
  return {std::move(pu), std::move(qu), layout, std::move(angles)};
}

}  // namespace projpair
