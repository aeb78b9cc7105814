#include "projpair/subspaces.hpp"

#include <algorithm>
#include <cmath>

namespace projpair {

namespace {

void check_unambiguous(const RealVector& values, std::initializer_list<double> bins, double width,
                       const char* which) {
  for (Index i = 0; i < values.size(); ++i) {
    for (double mu : bins) {
      const double dist = std::abs(values(i) - mu);
      if (dist > width && dist <= 10.0 * width) {
        throw Error(ErrorCode::AmbiguousSpectrum,
                    std::string("eigenvalue of ") + which + " lies just outside a classification bin",
                    {{"eigenvalue", values(i)}, {"bin", mu}, {"distance", dist}});
      }
    }
  }
}

ComplexMatrix hcat(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

}  // namespace

std::vector<double> PairSpectrum::generic_diff_values() const {
  std::vector<double> out;
  for (Index i = 0; i < diff.values.size(); ++i) {
    const double v = diff.values(i);
    if (std::abs(v - 1.0) > bin_width && std::abs(v + 1.0) > bin_width && std::abs(v) > bin_width) {
      out.push_back(v);
    }
  }
  return out;
}

PairSpectrum pair_spectrum(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  tol.validate();
  require_same_dim(p.dim(), q.dim());
  PairSpectrum s{hermitian_eigen(p.matrix() - q.matrix()), hermitian_eigen(p.matrix() + q.matrix()),
                 tol.tol_spec};
  check_unambiguous(s.diff.values, {-1.0, 0.0, 1.0}, tol.tol_spec, "P - Q");
  check_unambiguous(s.sum.values, {0.0, 2.0}, tol.tol_spec, "P + Q");

  // ker A = (ran P ∩ ran Q) ⊕ (ker P ∩ ker Q); both routes must agree.
  const Index zero_a = s.diff.count_near(0.0, tol.tol_spec);
  const Index ends_s = s.sum.count_near(0.0, tol.tol_spec) + s.sum.count_near(2.0, tol.tol_spec);
  if (zero_a != ends_s) {
    throw Error(ErrorCode::AmbiguousSpectrum, "kernel of P - Q disagrees with the 0/2 eigenspaces of P + Q",
                {{"dim_ker_a", static_cast<double>(zero_a)}, {"dim_sum_bins", static_cast<double>(ends_s)}});
  }
  return s;
}

Index KernelQuadruple::generic_dim() const {
  const auto d = dims();
  return ambient() - d[0] - d[1] - d[2] - d[3];
}

KernelQuadruple kernel_quadruple(const PairSpectrum& s) {
  const double w = s.bin_width;
  return {frame_unchecked(s.diff.eigenspace(1.0, w)), frame_unchecked(s.sum.eigenspace(2.0, w)),
          frame_unchecked(s.sum.eigenspace(0.0, w)), frame_unchecked(s.diff.eigenspace(-1.0, w))};
}

KernelQuadruple kernel_quadruple(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  return kernel_quadruple(pair_spectrum(p, q, tol));
}

HalmosSplit halmos_split(const OrthProjection& p, const OrthProjection& q, const PairSpectrum& s) {
  require_same_dim(p.dim(), q.dim());
  const double w = s.bin_width;
  const ComplexMatrix plus = s.diff.eigenspace(1.0, w);
  const ComplexMatrix minus = s.diff.eigenspace(-1.0, w);

  std::vector<Index> rest;
  for (Index i = 0; i < s.diff.values.size(); ++i) {
    const double v = s.diff.values(i);
    if (std::abs(v - 1.0) > w && std::abs(v + 1.0) > w) rest.push_back(i);
  }
  ComplexMatrix h2(p.dim(), static_cast<Index>(rest.size()));
  for (std::size_t j = 0; j < rest.size(); ++j) h2.col(static_cast<Index>(j)) = s.diff.vectors.col(rest[j]);
  normalize_column_phases(h2);

  ComplexMatrix p2 = h2.adjoint() * p.matrix() * h2;
  ComplexMatrix q2 = h2.adjoint() * q.matrix() * h2;
  return {frame_unchecked(hcat(plus, minus)), frame_unchecked(std::move(h2)), std::move(p2), std::move(q2),
          plus.cols()};
}

HalmosSplit halmos_split(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  return halmos_split(p, q, pair_spectrum(p, q, tol));
}

std::vector<double> principal_angles(const PairSpectrum& s) {
  std::vector<double> squares;
  for (double v : s.generic_diff_values()) squares.push_back(v * v);
  if (squares.size() % 2 != 0) {
    throw Error(ErrorCode::OddGenericDimension, "generic part has odd dimension",
                {{"generic_dim", static_cast<double>(squares.size())}});
  }
  std::sort(squares.begin(), squares.end());
  std::vector<double> angles;
  for (std::size_t i = 0; i < squares.size(); i += 2) {
    const double sin2 = std::clamp(0.5 * (squares[i] + squares[i + 1]), 0.0, 1.0);
    angles.push_back(std::asin(std::sqrt(sin2)));
  }
  return angles;
}

std::vector<double> principal_angles(const OrthProjection& p, const OrthProjection& q, const ToleranceConfig& tol) {
  return principal_angles(pair_spectrum(p, q, tol));
}

}  // namespace projpair
