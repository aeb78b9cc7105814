#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "projpair/core.hpp"

namespace projpair::io {

// Matrix interchange format:
//   {"rows": R, "cols": C, "data": [[re, im], ...]}   (R*C pairs, row-major)
// Doubles are written with shortest round-trip precision.

nlohmann::ordered_json matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError on a malformed object, wrong-length data, or
/// non-positive dimensions.
ComplexMatrix matrix_from_json(const nlohmann::ordered_json& j);

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

/// Polynomial family file: JSON array of matrix objects, index j holding the
/// coefficient of z^j. All coefficients must be square and of equal size.
std::vector<ComplexMatrix> read_family_file(const std::string& path);
void write_family_file(const std::string& path, const std::vector<ComplexMatrix>& coeffs);

}  // namespace projpair::io
