#pragma once

#include <string>

#include "json.hpp"

#include "algvar/tensor.hpp"

namespace algvar {

/// {"dim": n, "constants": [[[c_ij^1, ..., c_ij^n] for j] for i]}, entries in
/// the polynomial string format. Parameters are allowed by name; symbols
/// listed in `subst` are replaced while parsing.
StructureTensor tensor_from_json(const nlohmann::json& j, const Substitution& subst = {});
nlohmann::json tensor_to_json(const StructureTensor& t);

/// Reads an algebra file; ParseError carries the file name and, for JSON
/// syntax errors, the line.
StructureTensor load_tensor_file(const std::string& path);
void save_tensor_file(const std::string& path, const StructureTensor& t, const std::string& name = "");

nlohmann::json read_json_file(const std::string& path);

std::string matrix_to_string(const RationalMatrix& g);

}  // namespace algvar
