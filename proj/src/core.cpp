#include "projpair/core.hpp"

#include <cmath>
#include <limits>

namespace projpair {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::FrameNotOrthonormal: return "FrameNotOrthonormal";
    case ErrorCode::InvalidTolerance: return "InvalidTolerance";
    case ErrorCode::AmbiguousSpectrum: return "AmbiguousSpectrum";
    case ErrorCode::OddGenericDimension: return "OddGenericDimension";
    case ErrorCode::SingularB: return "SingularB";
    case ErrorCode::NoSwapExists: return "NoSwapExists";
    case ErrorCode::NormTooLarge: return "NormTooLarge";
    case ErrorCode::SeriesNotConverged: return "SeriesNotConverged";
    case ErrorCode::InvalidContour: return "InvalidContour";
    case ErrorCode::EigenvalueOnContour: return "EigenvalueOnContour";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::RankChanged: return "RankChanged";
    case ErrorCode::NonIntegerTrace: return "NonIntegerTrace";
    case ErrorCode::InfeasibleSpec: return "InfeasibleSpec";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

double Error::detail(const std::string& name) const {
  for (const auto& [key, value] : details_) {
    if (key == name) return value;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void ToleranceConfig::validate() const {
  const double fields[] = {tol_herm, tol_idem, tol_spec, tol_resid, quad_tol};
  for (double f : fields) {
    if (!(f > 0.0) || !std::isfinite(f)) {
      throw Error(ErrorCode::InvalidTolerance, "tolerances must be positive and finite");
    }
  }
  if (!(tol_spec < 0.5)) {
    throw Error(ErrorCode::InvalidTolerance, "tol_spec must be below 0.5",
                {{"tol_spec", tol_spec}});
  }
  if (max_dim < 1) {
    throw Error(ErrorCode::InvalidTolerance, "max_dim must be positive");
  }
}

double operator_norm(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return singular_values(m)(0);
}

RealVector singular_values(const ComplexMatrix& m) {
  if (m.size() == 0) return RealVector();
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  return svd.singularValues();
}

void normalize_column_phases(ComplexMatrix& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    auto col = m.col(j);
    normalize_phase(col);
  }
}

ComplexMatrix HermitianEigen::eigenspace(double center, double half_width) const {
  std::vector<Index> picked;
  for (Index i = 0; i < values.size(); ++i) {
    if (std::abs(values(i) - center) <= half_width) picked.push_back(i);
  }
  ComplexMatrix out(vectors.rows(), static_cast<Index>(picked.size()));
  for (std::size_t j = 0; j < picked.size(); ++j) {
    out.col(static_cast<Index>(j)) = vectors.col(picked[j]);
  }
  normalize_column_phases(out);
  return out;
}

Index HermitianEigen::count_near(double center, double half_width) const {
  return ((values.array() - center).abs() <= half_width).count();
}

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (m.size() == 0) return {RealVector(), ComplexMatrix(0, 0)};
  const ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  return {solver.eigenvalues(), solver.eigenvectors()};
}

OrthProjection validate_projection(const ComplexMatrix& m, const ToleranceConfig& tol) {
  tol.validate();
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw Error(ErrorCode::NotSquare, "projection must be a non-empty square matrix",
                {{"rows", static_cast<double>(m.rows())}, {"cols", static_cast<double>(m.cols())}});
  }
  if (m.rows() > tol.max_dim) {
    throw Error(ErrorCode::DimensionTooLarge, "dimension exceeds the configured cap",
                {{"dim", static_cast<double>(m.rows())}, {"max_dim", static_cast<double>(tol.max_dim)}});
  }
  if (!all_finite(m)) throw Error(ErrorCode::NonFinite, "matrix has non-finite entries");

  const double scale = 1.0 + frobenius(m);
  const double herm = hermitian_residual(m);
  if (herm > tol.tol_herm * scale) {
    throw Error(ErrorCode::NotHermitian, "matrix is not Hermitian", {{"residual", herm}});
  }
  const double idem = idempotency_residual(m);
  if (idem > tol.tol_idem * scale) {
    throw Error(ErrorCode::NotIdempotent, "matrix is not idempotent", {{"residual", idem}});
  }

  const HermitianEigen eig = hermitian_eigen(m);
  double worst = 0.0;
  Index rank = 0;
  for (Index i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values(i);
    const double dist = std::min(std::abs(lambda), std::abs(lambda - 1.0));
    worst = std::max(worst, dist);
    if (std::abs(lambda - 1.0) < std::abs(lambda)) ++rank;
  }
  if (worst > tol.tol_spec) {
    throw Error(ErrorCode::NotIdempotent, "spectrum is not contained in the 0/1 bins",
                {{"residual", idem}, {"spectral_deviation", worst}});
  }
  return OrthProjection(m, herm, idem, rank);
}

Frame::Frame(ComplexMatrix m, const ToleranceConfig& tol) : mat_(std::move(m)) {
  if (mat_.cols() == 0) return;
  if (!all_finite(mat_)) throw Error(ErrorCode::NonFinite, "frame has non-finite entries");
  const double resid = unitarity_residual(mat_);
  if (resid > tol.tol_resid) {
    throw Error(ErrorCode::FrameNotOrthonormal, "frame columns are not orthonormal",
                {{"residual", resid}});
  }
}

Frame Frame::empty(Index ambient) { return Frame(ComplexMatrix(ambient, 0), Unchecked{}); }

Frame frame_unchecked(ComplexMatrix m) { return Frame(std::move(m), Frame::Unchecked{}); }

OrthProjection projection_from_frame(const Frame& f, const ToleranceConfig& tol) {
  const ComplexMatrix& v = f.matrix();
  return validate_projection(v * v.adjoint(), tol);
}

}  // namespace projpair
