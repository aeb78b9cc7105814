#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "projpair/perturbation.hpp"

using namespace projpair;
using namespace projpair::testing;

TEST_CASE("contour validation") {
  CHECK_NOTHROW(ContourSpec{{0, 0}, 1.0, 8}.validate());
  CHECK_THROWS_AS(ContourSpec({{0, 0}, 0.0, 8}).validate(), Error);
  CHECK_THROWS_AS(ContourSpec({{0, 0}, 1.0, 12}).validate(), Error);
  CHECK_THROWS_AS(ContourSpec({{0, 0}, 1.0, 4}).validate(), Error);
}

TEST_CASE("riesz_projection worked examples") {
  const ContourSpec unit{{1, 0}, 1.0, 16};
  SUBCASE("normal matrix") {
    const ComplexMatrix r = riesz_projection(diag({1, 5}), unit);
    CHECK(max_abs_diff(r, diag({1, 0})) <= 1e-8);
  }
  SUBCASE("upper triangular") {
    // (λ − m)^{-1} has (1,2) entry 10/((λ−1)(λ−5)) with residue 10/(1−5) at λ = 1.
    const double residue = 10.0 / (1.0 - 5.0);
    const ComplexMatrix m = mat2(1, 10, 0, 5);
    const ComplexMatrix r = riesz_projection(m, unit);
    CHECK(max_abs_diff(r, mat2(1, residue, 0, 0)) <= 1e-8);
    CHECK(max_abs_diff(r, eigen_projector(m, {1, 0}, 1.0)) <= 1e-8);
    CHECK(idempotency_residual(r) <= 1e-8);
    CHECK(commutator_norm(m, r) <= 1e-8);
    CHECK(hermitian_residual(r) > 1.0);
  }
  SUBCASE("Jordan block") {
    const ComplexMatrix r = riesz_projection(mat2(1, 1, 0, 1), {{1, 0}, 0.5, 8});
    CHECK(max_abs_diff(r, ComplexMatrix::Identity(2, 2)) <= 1e-8);
  }
}

TEST_CASE("riesz_projection errors") {
  try {
    riesz_projection(diag({1, 2}), {{0, 0}, 2.0, 16});
    FAIL("expected EigenvalueOnContour");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EigenvalueOnContour);
  }
  // Eigenvalue 1e-6 outside the circle: converges far too slowly for the node cap.
  try {
    riesz_projection(diag({0, 1.0 + 1e-6}), {{0, 0}, 1.0, 8});
    FAIL("expected QuadratureNotConverged");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::QuadratureNotConverged);
  }
  CHECK_THROWS_AS(riesz_projection(ComplexMatrix::Zero(2, 3), {{0, 0}, 1.0, 8}), Error);
}

TEST_CASE("riesz rank matches the enclosed eigenvalue count") {
  Rng rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    const Index n = 3 + trial % 6;
    const ComplexMatrix m = random_complex(n, rng);
    const auto values = eigenvalues_of(m);
    const Scalar center = values[static_cast<std::size_t>(trial) % values.size()];
    std::vector<double> dist;
    for (Scalar v : values) dist.push_back(std::abs(v - center));
    std::sort(dist.begin(), dist.end());
    // Radius halfway across the widest relative gap.
    double radius = 1.5 * dist.back() + 0.1;
    double best = 0.0;
    for (std::size_t k = 0; k + 1 < dist.size(); ++k) {
      const double gap = (dist[k + 1] - dist[k]) / (dist[k + 1] + dist[k] + 1e-12);
      if (gap > best) {
        best = gap;
        radius = 0.5 * (dist[k] + dist[k + 1]);
      }
    }
    const Index inside = std::count_if(dist.begin(), dist.end(), [&](double d) { return d < radius; });
    const RieszResult res = riesz_projection_traced(m, {center, radius, 16});
    CAPTURE(trial);
    CHECK(idempotent_range(res.projector).size() == inside);
    CHECK(trace_rank(res.projector) == inside);
    CHECK(idempotency_residual(res.projector) <= 1e-8);
    CHECK(commutator_norm(m, res.projector) <= 1e-8);
  }
}

TEST_CASE("quadrature deviations shrink geometrically") {
  // Eigenvalues at distance 0.5 and 2.5 from a unit circle centred at 0:
  // the trapezoid error decays like 0.5^N.
  const ComplexMatrix m = mat2(0.5, 1, 0, 2.5);
  const RieszResult res = riesz_projection_traced(m, {{0, 0}, 1.0, 8});
  REQUIRE(res.history.size() >= 2);
  for (std::size_t i = 1; i < res.history.size(); ++i) {
    const double prev = res.history[i - 1].delta;
    const double cur = res.history[i].delta;
    // Doubling the nodes squares the deviation, up to a constant, until the floor.
    CHECK((cur <= 10.0 * prev * prev || cur <= 1e-13));
    CHECK(res.history[i].nodes == 2 * res.history[i - 1].nodes);
  }
  CHECK(res.history.back().delta <= 1e-10);
}

TEST_CASE("polynomial families") {
  const MatrixFamily f = polynomial_family({diag({1, 5}), mat2(0, 1, 1, 0), diag({2, 0})});
  CHECK(f.dim() == 2);
  const Scalar z(0.3, -0.1);
  const ComplexMatrix expect = diag({1, 5}) + z * mat2(0, 1, 1, 0) + z * z * diag({2, 0});
  CHECK(max_abs_diff(f(z), expect) < 1e-15);

  const MatrixFamily wrong([](Scalar) { return ComplexMatrix::Zero(3, 3); }, 2);
  CHECK_THROWS_AS(wrong(Scalar(0)), Error);
}

TEST_CASE("reduce_family examples") {
  SUBCASE("constant family") {
    const MatrixFamily f = polynomial_family({diag({1, 5})});
    const ReducedBlock r = reduce_family(f, {0.1, 0}, {{1, 0}, 1.0, 16});
    REQUIRE(r.block.rows() == 1);
    CHECK(std::abs(r.block(0, 0) - 1.0) < 1e-10);
  }
  SUBCASE("symmetric 2x2 family") {
    // Eigenvalues 3 ∓ √(4 + z²) by the quadratic formula.
    const MatrixFamily f = polynomial_family({diag({1, 5}), mat2(0, 1, 1, 0)});
    const double z = 0.2;
    const ReducedBlock r = reduce_family(f, {z, 0}, {{1, 0}, 1.0, 16});
    REQUIRE(r.block.rows() == 1);
    const double oracle = 3.0 - std::sqrt(4.0 + z * z);
    CHECK(std::abs(r.block(0, 0) - oracle) < 1e-10);
    CHECK(std::abs(oracle - 0.99002487577582) < 1e-12);
  }
  SUBCASE("splitting group from a Jordan block") {
    const MatrixFamily f = polynomial_family({mat2(1, 1, 0, 1), ComplexMatrix::Zero(2, 2), mat2(0, 0, 1, 0)});
    const ReducedBlock r = reduce_family(f, {0.1, 0}, {{1, 0}, 0.5, 16});
    REQUIRE(r.block.rows() == 2);
    const auto ev = eigenvalues_of(r.block);
    CHECK(std::abs(ev[0] - 0.9) < 1e-10);
    CHECK(std::abs(ev[1] - 1.1) < 1e-10);
  }
}

TEST_CASE("reduce_family detects a changed eigenvalue count") {
  // At z = 0.9 the eigenvalue 1 + z leaves the circle of radius 0.5.
  const MatrixFamily f = polynomial_family({diag({1, 3}), diag({1, 0})});
  try {
    reduce_family(f, {0.9, 0}, {{1, 0}, 0.5, 16});
    FAIL("expected RankChanged");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankChanged);
  }
}

TEST_CASE("reduced block carries the enclosed spectrum of random families") {
  Rng rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = 6;
    // Well separated diagonal plus a small non-normal perturbation.
    ComplexMatrix c0 = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) c0(i, i) = Scalar(static_cast<double>(i % 3) * 3.0, 0.0);
    c0 += 0.05 * random_complex(n, rng);
    const ComplexMatrix c1 = random_complex(n, rng);
    const MatrixFamily f = polynomial_family({c0, c1});
    const Scalar z(0.05, 0.02);
    const ContourSpec contour{{3, 0}, 1.0, 16};
    const ReducedBlock r = reduce_family(f, z, contour);
    std::vector<Scalar> enclosed;
    for (Scalar v : eigenvalues_of(f(z))) {
      if (std::abs(v - contour.center) < contour.radius) enclosed.push_back(v);
    }
    const auto got = eigenvalues_of(r.block);
    REQUIRE(got.size() == enclosed.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - enclosed[i]) < 1e-6);
    CHECK((r.similarity * riesz_projection(f(z), contour) - riesz_projection(f(Scalar(0)), contour) * r.similarity)
              .norm() <= 1e-8);
  }
}
