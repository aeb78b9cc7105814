#include <doctest.h>

#include <numbers>

#include "fixtures.hpp"
#include "projpair/subspaces.hpp"

using namespace projpair;
using namespace projpair::testing;

namespace {

using Dims = std::array<Index, 4>;

// Oracle: count eigenvalues of a Hermitian matrix near `mu` with the
// general (non-Hermitian) eigensolver.
Index count_general(const ComplexMatrix& m, double mu) {
  const ComplexVector ev = Eigen::ComplexEigenSolver<ComplexMatrix>(m, false).eigenvalues();
  return ((ev.array() - mu).abs() <= 1e-8).count();
}

}  // namespace

TEST_CASE("kernel_quadruple of perpendicular lines") {
  const auto p = validate_projection(proj_e(0, 2));
  const auto q = validate_projection(proj_e(1, 2));
  const KernelQuadruple kq = kernel_quadruple(p, q);
  CHECK(kq.dims() == Dims{1, 0, 0, 1});
  CHECK(max_abs_diff(kq.k_pq.matrix(), ComplexMatrix::Identity(2, 2).col(0)) < 1e-15);
  CHECK(max_abs_diff(kq.k_1p_1q.matrix(), ComplexMatrix::Identity(2, 2).col(1)) < 1e-15);
}

TEST_CASE("kernel_quadruple of equal projections") {
  const auto p = validate_projection(diag({1, 1, 0}));
  CHECK(kernel_quadruple(p, p).dims() == Dims{0, 2, 1, 0});
}

TEST_CASE("kernel_quadruple of the generic planar pair is empty") {
  const ThetaPair tp = theta_pair(std::numbers::pi / 3);
  const ComplexMatrix a = tp.p.matrix() - tp.q.matrix();
  CHECK(count_general(a, 1.0) == 0);
  CHECK(count_general(a, -1.0) == 0);
  CHECK(kernel_quadruple(tp.p, tp.q).dims() == Dims{0, 0, 0, 0});
  CHECK(kernel_quadruple(tp.p, tp.q).generic_dim() == 2);
}

TEST_CASE("kernel_quadruple errors") {
  const auto p2 = validate_projection(proj_e(0, 2));
  const auto p3 = validate_projection(proj_e(0, 3));
  CHECK_THROWS_AS(kernel_quadruple(p2, p3), Error);

  // A generic angle of 5e-8 puts ±sin θ just outside the zero bin of P − Q.
  const ThetaPair tp = theta_pair(5e-8);
  try {
    kernel_quadruple(tp.p, tp.q);
    FAIL("expected AmbiguousSpectrum");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AmbiguousSpectrum);
  }
}

TEST_CASE("halmos_split examples") {
  SUBCASE("perpendicular lines: everything in H1") {
    const auto p = validate_projection(proj_e(0, 2));
    const auto q = validate_projection(proj_e(1, 2));
    const HalmosSplit s = halmos_split(p, q);
    CHECK(s.h1.size() == 2);
    CHECK(s.h2.size() == 0);
    CHECK(s.p2.size() == 0);
    CHECK(s.dim_k_pq == 1);
  }
  SUBCASE("planar pair: everything in H2") {
    const ThetaPair tp = theta_pair(std::numbers::pi / 3);
    const HalmosSplit s = halmos_split(tp.p, tp.q);
    CHECK(s.h1.size() == 0);
    REQUIRE(s.h2.size() == 2);
    const ComplexMatrix& h = s.h2.matrix();
    CHECK((h * s.p2 * h.adjoint() - tp.p.matrix()).norm() < 1e-14);
    CHECK((h * s.q2 * h.adjoint() - tp.q.matrix()).norm() < 1e-14);
  }
  SUBCASE("common kernel of P and Q stays in H2") {
    const auto p = validate_projection(diag({1, 0, 0}));
    const auto q = validate_projection(direct_sum(line_projection(std::numbers::pi / 3), diag({0})));
    const HalmosSplit s = halmos_split(p, q);
    CHECK(s.h1.size() == 0);
    CHECK(s.h2.size() == 3);
    CHECK(kernel_quadruple(p, q).dims() == Dims{0, 0, 1, 0});
  }
}

TEST_CASE("principal_angles") {
  const ThetaPair tp = theta_pair(std::numbers::pi / 3);
  const auto angles = principal_angles(tp.p, tp.q);
  REQUIRE(angles.size() == 1);
  CHECK(std::abs(angles[0] - std::numbers::pi / 3) < 1e-12);
  // tr(PQ) = cos²θ
  CHECK(std::abs((tp.p.matrix() * tp.q.matrix()).trace().real() - std::pow(std::cos(angles[0]), 2)) < 1e-14);

  const auto p = validate_projection(diag({1, 1, 0}));
  CHECK(principal_angles(p, p).empty());

  const auto pp = validate_projection(direct_sum(proj_e(0, 2), proj_e(0, 2)));
  const auto qq = validate_projection(
      direct_sum(line_projection(std::numbers::pi / 4), line_projection(std::numbers::pi / 6)));
  const auto two = principal_angles(pp, qq);
  REQUIRE(two.size() == 2);
  CHECK(std::abs(two[0] - std::numbers::pi / 6) < 1e-12);
  CHECK(std::abs(two[1] - std::numbers::pi / 4) < 1e-12);
}

TEST_CASE("subspace invariants over random layouts") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Index n = 2 + static_cast<Index>(seed % 20);
    const RandomPairSpec spec = random_layout_spec(n, seed);
    const RandomPair pair = random_pair(spec);
    const auto p = validate_projection(pair.p);
    const auto q = validate_projection(pair.q);
    CAPTURE(seed);

    const KernelQuadruple kq = kernel_quadruple(p, q);
    const Dims d = kq.dims();
    CHECK(d == Dims{pair.layout.k_pq, pair.layout.k_p_1q, pair.layout.k_1p_q, pair.layout.k_1p_1q});
    CHECK(d[0] + d[1] + d[2] + d[3] + kq.generic_dim() == n);
    CHECK(p.rank() == d[0] + d[1] + kq.generic_dim() / 2);

    const Frame* frames[4] = {&kq.k_pq, &kq.k_p_1q, &kq.k_1p_q, &kq.k_1p_1q};
    const double p_action[4] = {1, 1, 0, 0};
    const double q_action[4] = {0, 1, 0, 1};
    for (int i = 0; i < 4; ++i) {
      const ComplexMatrix& f = frames[i]->matrix();
      CHECK((p.matrix() * f - p_action[i] * f).norm() <= 1e-8);
      CHECK((q.matrix() * f - q_action[i] * f).norm() <= 1e-8);
      for (int j = i + 1; j < 4; ++j) CHECK((f.adjoint() * frames[j]->matrix()).norm() <= 1e-8);
    }

    const HalmosSplit s = halmos_split(p, q);
    CHECK(s.h1.size() + s.h2.size() == n);
    CHECK((s.h1.matrix().adjoint() * s.h2.matrix()).norm() <= 1e-8);
    const ComplexMatrix& h2 = s.h2.matrix();
    CHECK((p.matrix() * h2 - h2 * s.p2).norm() <= 1e-8);
    CHECK((q.matrix() * h2 - h2 * s.q2).norm() <= 1e-8);
    if (s.h2.size() > 0) {
      const auto p2 = validate_projection(s.p2);
      const auto q2 = validate_projection(s.q2);
      const Dims d2 = kernel_quadruple(p2, q2).dims();
      CHECK(d2[0] == 0);
      CHECK(d2[3] == 0);
    }

    auto angles = principal_angles(p, q);
    CHECK(static_cast<Index>(angles.size()) == pair.layout.generic);
    auto drawn = pair.angles;
    std::sort(drawn.begin(), drawn.end());
    for (std::size_t i = 0; i < angles.size(); ++i) CHECK(std::abs(angles[i] - drawn[i]) < 1e-8);
  }
}

TEST_CASE("pairs with ‖P − Q‖ < 1 have no ±1 kernels") {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    RandomPairSpec spec = random_layout_spec(2 + static_cast<Index>(seed % 15), seed);
    spec.rank_p -= spec.k_pq;
    spec.rank_q -= spec.k_1p_1q;
    spec.k_pq = spec.k_1p_1q = 0;
    spec.generic_blocks.reset();
    spec.angle_max = 1.2;
    const RandomPair pair = random_pair(spec);
    REQUIRE(operator_norm(pair.p - pair.q) < 1.0);
    const auto d = kernel_quadruple(validate_projection(pair.p), validate_projection(pair.q)).dims();
    CHECK(d[0] == 0);
    CHECK(d[3] == 0);
  }
}
