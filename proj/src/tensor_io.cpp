#include "algvar/tensor_io.hpp"

#include <fstream>
#include <sstream>

namespace algvar {

StructureTensor tensor_from_json(const nlohmann::json& j, const Substitution& subst) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("constants"))
    throw ParseError("algebra JSON needs \"dim\" and \"constants\"");
  int n = j.at("dim").get<int>();
  if (n <= 0) throw ParseError("dim must be positive");
  const auto& c = j.at("constants");
  if (!c.is_array() || static_cast<int>(c.size()) != n) throw ParseError("constants must have dim rows");
  StructureTensor t(n);
  for (int i = 0; i < n; ++i) {
    if (!c[i].is_array() || static_cast<int>(c[i].size()) != n) throw ParseError("constants[i] must have dim entries");
    for (int k2 = 0; k2 < n; ++k2) {
      const auto& v = c[i][k2];
      if (!v.is_array() || static_cast<int>(v.size()) != n)
        throw ParseError("constants[i][j] must list dim coefficients");
      for (int k = 0; k < n; ++k) {
        std::string s = v[k].is_string() ? v[k].get<std::string>() : v[k].dump();
        t(i, k2, k) = parse_poly(s, subst);
      }
    }
  }
  return t;
}

nlohmann::json tensor_to_json(const StructureTensor& t) {
  int n = t.dim();
  nlohmann::json c = nlohmann::json::array();
  for (int i = 0; i < n; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n; ++j) {
      nlohmann::json v = nlohmann::json::array();
      for (int k = 0; k < n; ++k) v.push_back(t(i, j, k).to_string());
      row.push_back(v);
    }
    c.push_back(row);
  }
  return {{"dim", n}, {"constants", c}};
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    // byte offset -> line
    std::ifstream again(path);
    std::string text((std::istreambuf_iterator<char>(again)), std::istreambuf_iterator<char>());
    std::size_t line = 1;
    for (std::size_t i = 0; i < text.size() && i < e.byte; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError(path + ":" + std::to_string(line) + ": " + e.what());
  }
}

StructureTensor load_tensor_file(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  try {
    return tensor_from_json(j);
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_tensor_file(const std::string& path, const StructureTensor& t, const std::string& name) {
  nlohmann::json j = tensor_to_json(t);
  if (!name.empty()) j["name"] = name;
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string matrix_to_string(const RationalMatrix& g) {
  std::ostringstream os;
  os << "[";
  for (int r = 0; r < g.dim(); ++r) {
    if (r) os << "; ";
    for (int c = 0; c < g.dim(); ++c) os << (c ? ", " : "") << g(r, c).to_string();
  }
  os << "]";
  return os.str();
}

}  // namespace algvar
