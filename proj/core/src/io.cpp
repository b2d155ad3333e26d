#include "hb/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hb {

namespace {

constexpr Index kMaxSide = 100000;
constexpr Index kMaxEntries = 10000000;

double number_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) throw ParseError(where + ": expected a number");
  const double value = j.get<double>();
  if (!std::isfinite(value)) throw ParseError(where + ": non-finite value");
  return value;
}

Complex entry_at(const nlohmann::json& j, const std::string& where) {
  if (j.is_number()) return {number_at(j, where), 0.0};
  if (j.is_array() && j.size() == 2)
    return {number_at(j[0], where + "[0]"), number_at(j[1], where + "[1]")};
  throw ParseError(where + ": expected a number or a [re, im] pair");
}

Index count_at(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0)
    throw ParseError(where + ": expected a non-negative integer");
  return static_cast<Index>(j.get<std::int64_t>());
}

nlohmann::json complex_to_json(const Complex& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json vector_to_json_array(const Vector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(complex_to_json(v(i)));
  return arr;
}

}  // namespace

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw UsageError("cannot read file: " + path);
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot open file for writing: " + path);
  out << text;
  if (!out) throw UsageError("cannot write file: " + path);
}

nlohmann::json load_json(const std::string& path) {
  try {
    return parse_json(read_text_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Matrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("matrix: expected a JSON object");
  for (const char* key : {"rows", "cols", "data"})
    if (!j.contains(key)) throw ParseError(std::string("matrix: missing key \"") + key + "\"");
  const Index rows = count_at(j["rows"], "matrix.rows");
  const Index cols = count_at(j["cols"], "matrix.cols");
  if (rows > kMaxSide || cols > kMaxSide || rows * cols > kMaxEntries)
    throw ParseError("matrix: dimensions too large");
  const nlohmann::json& data = j["data"];
  if (!data.is_array()) throw ParseError("matrix.data: expected an array");
  if (static_cast<Index>(data.size()) != rows * cols)
    throw ParseError("matrix.data: got " + std::to_string(data.size()) + " entries for a " +
                     std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
  Matrix M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index k = 0; k < cols; ++k) {
      const Index flat = i * cols + k;
      M(i, k) = entry_at(data[static_cast<std::size_t>(flat)],
                         "matrix.data[" + std::to_string(flat) + "]");
    }
  return M;
}

nlohmann::json matrix_to_json(const Matrix& M) {
  nlohmann::json data = nlohmann::json::array();
  for (Index i = 0; i < M.rows(); ++i)
    for (Index k = 0; k < M.cols(); ++k) data.push_back(complex_to_json(M(i, k)));
  return nlohmann::json{{"rows", M.rows()}, {"cols", M.cols()}, {"data", std::move(data)}};
}

Matrix parse_matrix(const std::string& text) { return matrix_from_json(parse_json(text)); }

Matrix load_matrix(const std::string& path) {
  try {
    return matrix_from_json(parse_json(read_text_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Vector vector_from_json(const nlohmann::json& j) {
  const Matrix M = matrix_from_json(j);
  if (M.cols() == 1) return M.col(0);
  if (M.rows() == 1) return M.row(0).transpose();
  throw DimensionError("vector: expected a single row or column, got " +
                       std::to_string(M.rows()) + "x" + std::to_string(M.cols()));
}

Vector parse_vector(const std::string& text) { return vector_from_json(parse_json(text)); }

Vector load_vector(const std::string& path) {
  try {
    return vector_from_json(parse_json(read_text_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

PointSet point_set_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("point set: expected a JSON object");
  for (const char* key : {"dim", "points"})
    if (!j.contains(key)) throw ParseError(std::string("point set: missing key \"") + key + "\"");
  const Index dim = count_at(j["dim"], "point_set.dim");
  if (dim < 1 || dim > kMaxSide) throw ParseError("point_set.dim: must be at least 1");
  const nlohmann::json& points = j["points"];
  if (!points.is_array() || points.empty())
    throw ParseError("point_set.points: expected a nonempty array");
  const Index n = static_cast<Index>(points.size());
  if (n * dim > kMaxEntries) throw ParseError("point set: too many coordinates");
  RealMatrix coords(n, dim);
  for (Index i = 0; i < n; ++i) {
    const nlohmann::json& p = points[static_cast<std::size_t>(i)];
    const std::string where = "point_set.points[" + std::to_string(i) + "]";
    if (!p.is_array() || static_cast<Index>(p.size()) != dim)
      throw ParseError(where + ": expected " + std::to_string(dim) + " coordinates");
    for (Index k = 0; k < dim; ++k)
      coords(i, k) = number_at(p[static_cast<std::size_t>(k)],
                               where + "[" + std::to_string(k) + "]");
  }
  return PointSet(std::move(coords));
}

nlohmann::json point_set_to_json(const PointSet& ps) {
  nlohmann::json points = nlohmann::json::array();
  for (Index i = 0; i < ps.size(); ++i) {
    nlohmann::json p = nlohmann::json::array();
    for (Index k = 0; k < ps.dim(); ++k) p.push_back(ps.coords()(i, k));
    points.push_back(std::move(p));
  }
  return nlohmann::json{{"dim", ps.dim()}, {"points", std::move(points)}};
}

PointSet parse_point_set(const std::string& text) {
  return point_set_from_json(parse_json(text));
}

PointSet load_point_set(const std::string& path) {
  try {
    return point_set_from_json(parse_json(read_text_file(path)));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

nlohmann::json certificate_to_json(const LoewnerCertificate& cert) {
  return nlohmann::json{{"lambda_min", cert.lambda_min},
                        {"scale", cert.scale},
                        {"accepted", cert.accepted},
                        {"tol_used", cert.tol_used}};
}

nlohmann::json report_to_json(const BoundReport& report) {
  nlohmann::json j{{"kind", to_string(report.kind)},
                   {"gamma", report.gamma},
                   {"d", vector_to_json_array(report.d)},
                   {"lambda_min", report.certificate.lambda_min},
                   {"scale", report.certificate.scale},
                   {"accepted", report.certificate.accepted},
                   {"ambiguous_rank", report.ambiguous_rank}};
  if (report.ambiguous_rank) j["gamma_alt"] = report.gamma_alt;
  if (!report.note.empty()) j["note"] = report.note;
  return j;
}

nlohmann::json tight_witness_to_json(const TightWitness& witness, std::uint64_t seed) {
  return nlohmann::json{
      {"family", "tight"},
      {"parameters",
       {{"n", witness.A.rows()}, {"a", witness.A.cols()}, {"r", witness.r}, {"s", witness.s}}},
      {"seed", seed},
      {"margin", witness.achieved_margin},
      {"A", matrix_to_json(witness.A)},
      {"B", matrix_to_json(witness.B)}};
}

nlohmann::json dnn_to_json(const DnnCounterexample& example) {
  return nlohmann::json{
      {"family", "dnn"},
      {"parameters",
       {{"a", example.a}, {"b", example.b}, {"c", example.c}, {"d", example.d}}},
      {"seed", 0},
      {"margin", example.defect_certificate.lambda_min},
      {"matrix", matrix_to_json(example.matrix)},
      {"defect", matrix_to_json(example.defect)},
      {"defect_det", example.defect_det},
      {"defect_certificate", certificate_to_json(example.defect_certificate)},
      {"counterexample_confirmed", !example.defect_certificate.accepted}};
}

}  // namespace hb
