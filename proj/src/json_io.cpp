#include "projpair/json_io.hpp"

#include <fstream>
#include <sstream>

namespace projpair::io {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) {
  throw Error(ErrorCode::ParseError, what);
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) parse_fail("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    parse_fail(path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) parse_fail("cannot write " + path);
  out << text;
}

double finite_number(const json& v) {
  if (!v.is_number()) parse_fail("matrix entry component is not a number");
  return v.get<double>();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json data = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      data.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
  }
  json out = json::object();
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) parse_fail("matrix must be a JSON object");
  for (const char* key : {"rows", "cols", "data"}) {
    if (!j.contains(key)) parse_fail(std::string("matrix is missing \"") + key + "\"");
  }
  if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
    parse_fail("rows/cols must be integers");
  }
  const auto rows = j["rows"].get<long long>();
  const auto cols = j["cols"].get<long long>();
  if (rows <= 0 || cols <= 0) parse_fail("rows/cols must be positive");
  const json& data = j["data"];
  if (!data.is_array()) parse_fail("data must be an array");
  if (static_cast<long long>(data.size()) != rows * cols) {
    std::ostringstream msg;
    msg << "data has " << data.size() << " entries, expected " << rows * cols;
    parse_fail(msg.str());
  }
  ComplexMatrix m(rows, cols);
  Index k = 0;
  for (Index i = 0; i < rows; ++i) {
    for (Index c = 0; c < cols; ++c, ++k) {
      const json& entry = data[static_cast<std::size_t>(k)];
      if (!entry.is_array() || entry.size() != 2) parse_fail("each entry must be [re, im]");
      m(i, c) = Scalar(finite_number(entry[0]), finite_number(entry[1]));
    }
  }
  if (!m.allFinite()) parse_fail("matrix has non-finite entries");
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  return matrix_from_json(read_json_file(path));
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  write_text(path, matrix_to_json(m).dump() + "\n");
}

std::vector<ComplexMatrix> read_family_file(const std::string& path) {
  const json j = read_json_file(path);
  if (!j.is_array() || j.empty()) parse_fail("family file must be a non-empty array of matrices");
  std::vector<ComplexMatrix> coeffs;
  for (const json& item : j) coeffs.push_back(matrix_from_json(item));
  const Index n = coeffs.front().rows();
  for (const auto& c : coeffs) {
    if (c.rows() != n || c.cols() != n) parse_fail("family coefficients must be square and equal-sized");
  }
  return coeffs;
}

void write_family_file(const std::string& path, const std::vector<ComplexMatrix>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(matrix_to_json(c));
  write_text(path, arr.dump() + "\n");
}

}  // namespace projpair::io
