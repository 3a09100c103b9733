#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "z4v/poly.hpp"
#include "z4v/weight_enum.hpp"

namespace z4v {

// One row per line, whitespace-separated entries. Blank lines and lines
// starting with '#' are skipped. ParseError on empty input or ragged rows.
RMatrix parse_r_matrix(std::string_view text);
Z4Matrix parse_z4_matrix(std::string_view text);

RVector parse_r_vector(std::string_view text);

std::string format_matrix(const RMatrix& m);
std::string format_matrix(const Z4Matrix& m);

std::string read_text_file(const std::string& path);

nlohmann::json matrix_json(const RMatrix& m);
nlohmann::json matrix_json(const Z4Matrix& m);

// {"metric", "n", "size", "max_weight", "coeffs": [[weight, "count"], ...]}
nlohmann::json distribution_json(const WeightDistribution& d);
WeightDistribution distribution_from_json(const nlohmann::json& j);

} // namespace z4v
