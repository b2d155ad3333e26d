#ifndef HB_IO_HPP
#define HB_IO_HPP

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>

#include "hb/bounds.hpp"
#include "hb/kernels.hpp"
#include "hb/types.hpp"
#include "hb/witness.hpp"

namespace hb {

/// Wire format for matrices: {"rows": n, "cols": m, "data": [[re, im], ...]}
/// in row-major order; a bare number is shorthand for [re, 0]. Writers
/// always emit the two-element form. Doubles survive a round trip bit
/// for bit.

nlohmann::json parse_json(const std::string& text);  // ParseError keeps line/column
nlohmann::json load_json(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& M);
Matrix parse_matrix(const std::string& text);
Matrix load_matrix(const std::string& path);

/// A vector is a matrix with one column (or one row, which is flattened).
Vector vector_from_json(const nlohmann::json& j);
Vector parse_vector(const std::string& text);
Vector load_vector(const std::string& path);

/// Point sets travel as {"dim": d, "points": [[...], ...]}.
PointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json point_set_to_json(const PointSet& ps);
PointSet parse_point_set(const std::string& text);
PointSet load_point_set(const std::string& path);

nlohmann::json certificate_to_json(const LoewnerCertificate& cert);

/// {kind, gamma, d, lambda_min, scale, accepted, ambiguous_rank}, plus
/// gamma_alt when the rank was ambiguous and note when one is present.
nlohmann::json report_to_json(const BoundReport& report);

/// Witness headers: {family, parameters, seed, margin} plus the payload
/// matrices in the shared wire format.
nlohmann::json tight_witness_to_json(const TightWitness& witness, std::uint64_t seed);
nlohmann::json dnn_to_json(const DnnCounterexample& example);

}  // namespace hb

#endif  // HB_IO_HPP
