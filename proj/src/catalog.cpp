#include "algvar/catalog.hpp"

#include <filesystem>

#include "algvar/sampling.hpp"
#include "algvar/tensor_io.hpp"

namespace algvar {

std::string ParamConstraint::describe() const {
  return poly + (kind == Kind::equation ? " = 0" : " != 0");
}

GammaValues gamma_functions(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  GammaValues g;
  g.d = (a + c) * (b + d) - Rational(1);
  g.c1 = {b, d};
  g.c2 = {c, a};
  if (g.d.is_zero()) throw Error("D(Gamma) = 0: C3 is undefined");
  g.c3 = {(b * c - (a - Rational(1)) * (d - Rational(1))) / g.d,
          (a * d - (b - Rational(1)) * (c - Rational(1))) / g.d};
  return g;
}

Family family_from_json(const nlohmann::json& j, int table) {
  Family f;
  f.name = j.at("name").get<std::string>();
  f.table = table;
  f.dim = j.value("dim", 2);
  f.params = j.value("params", std::vector<std::string>{});
  const auto& c = j.at("constants");
  for (const auto& row : c) {
    std::vector<std::vector<std::string>> r;
    for (const auto& v : row) r.push_back(v.get<std::vector<std::string>>());
    f.constants.push_back(std::move(r));
  }
  if (static_cast<int>(f.constants.size()) != f.dim) throw ParseError(f.name + ": constants do not match dim");
  for (const auto& cj : j.value("constraints", nlohmann::json::array())) {
    ParamConstraint pc;
    std::string kind = cj.at("kind").get<std::string>();
    if (kind == "eq")
      pc.kind = ParamConstraint::Kind::equation;
    else if (kind == "neq")
      pc.kind = ParamConstraint::Kind::inequation;
    else
      throw ParseError(f.name + ": unknown constraint kind " + kind);
    pc.poly = cj.at("poly").get<std::string>();
    f.constraints.push_back(std::move(pc));
  }
  auto ref = [](const nlohmann::json& r) {
    FamilyRef out;
    out.family = r.at("family").get<std::string>();
    out.args = r.value("args", std::map<std::string, std::string>{});
    return out;
  };
  if (j.contains("origin")) f.origin = ref(j.at("origin"));
  for (const auto& a : j.value("aliases", nlohmann::json::array())) f.aliases.push_back(ref(a));
  return f;
}

Catalog Catalog::from_json(const std::vector<nlohmann::json>& tables) {
  Catalog cat;
  for (const auto& t : tables) {
    int table = t.at("table").get<int>();
    for (const auto& fj : t.at("families")) {
      Family f = family_from_json(fj, table);
      if (cat.families_.count(f.name)) throw ParseError("duplicate catalog row " + f.name);
      cat.order_.push_back(f.name);
      cat.families_.emplace(f.name, std::move(f));
    }
  }
  return cat;
}

Catalog Catalog::load(const std::string& dir) {
  std::vector<nlohmann::json> tables;
  for (int t = 1; t <= 4; ++t) {
    std::string path = (std::filesystem::path(dir) / ("table" + std::to_string(t) + ".json")).string();
    if (!std::filesystem::exists(path)) throw Error("missing catalog data: " + path);
    tables.push_back(read_json_file(path));
  }
  return from_json(tables);
}

const Family& Catalog::get(const std::string& name) const {
  auto it = families_.find(name);
  if (it == families_.end()) throw Error("unknown catalog row " + name);
  return it->second;
}

std::vector<const Family*> Catalog::table(int t) const {
  std::vector<const Family*> out;
  for (const auto& n : order_)
    if (families_.at(n).table == t) out.push_back(&families_.at(n));
  return out;
}

std::vector<const Family*> Catalog::all() const {
  std::vector<const Family*> out;
  for (const auto& n : order_) out.push_back(&families_.at(n));
  return out;
}

namespace {

Substitution constants_of(const Assignment& values) {
  Substitution s;
  for (const auto& [k, v] : values) s.emplace(k, MultiPoly(v));
  return s;
}

StructureTensor build(const Family& f, const Substitution& subst) {
  int n = f.dim;
  StructureTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (static_cast<int>(f.constants[i].size()) != n || static_cast<int>(f.constants[i][j].size()) != n)
        throw ParseError(f.name + ": malformed constants");
      for (int k = 0; k < n; ++k) t(i, j, k) = parse_poly(f.constants[i][j][k], subst);
    }
  return t;
}

}  // namespace

std::optional<std::string> Catalog::violated(const Family& f, const Assignment& values) const {
  for (const auto& c : f.constraints) {
    Rational v = eval_expr(c.poly, values);
    bool ok = c.kind == ParamConstraint::Kind::equation ? v.is_zero() : !v.is_zero();
    if (!ok) return c.describe();
  }
  return std::nullopt;
}

Assignment Catalog::resolve(const FamilyRef& ref, const Assignment& values) {
  Assignment out;
  for (const auto& [k, expr] : ref.args) out[k] = eval_expr(expr, values);
  return out;
}

Substitution Catalog::resolve_symbolic(const FamilyRef& ref) {
  Substitution out;
  for (const auto& [k, expr] : ref.args) out[k] = parse_poly(expr);
  return out;
}

StructureTensor Catalog::instantiate(const Family& f, const Assignment& values) const {
  for (const auto& p : f.params)
    if (!values.count(p)) throw MissingVariable(p);
  if (auto v = violated(f, values)) throw ConstraintViolation(f.name, *v);
  if (f.origin) instantiate(get(f.origin->family), resolve(*f.origin, values));
  Assignment own;
  for (const auto& p : f.params) own[p] = values.at(p);
  return build(f, constants_of(own));
}

StructureTensor Catalog::instantiate(const std::string& name, const Assignment& values) const {
  return instantiate(get(name), values);
}

std::optional<StructureTensor> Catalog::symbolic(const Family& f) const {
  try {
    return build(f, {});
  } catch (const ParseError&) {
    return std::nullopt;
  }
}

std::vector<MultiPoly> Catalog::domain_equations(const Family& f) const {
  std::vector<MultiPoly> out;
  for (const auto& c : f.constraints)
    if (c.kind == ParamConstraint::Kind::equation) out.push_back(parse_poly(c.poly));
  return out;
}

std::vector<MultiPoly> Catalog::domain_inequations(const Family& f) const {
  std::vector<MultiPoly> out;
  for (const auto& c : f.constraints)
    if (c.kind == ParamConstraint::Kind::inequation) out.push_back(parse_poly(c.poly));
  return out;
}

std::vector<Assignment> Catalog::sample(const Family& f, int count, std::uint64_t seed) const {
  if (count < 1) throw Error("sample count must be positive");
  Rng rng(seed);
  std::vector<Assignment> out;
  int rejections = 0;
  while (static_cast<int>(out.size()) < count) {
    Assignment a;
    for (const auto& p : f.params) a[p] = rng.chance(25) ? Rational(rng.integer(-3, 3)) : rng.rational();
    bool ok = true;
    try {
      instantiate(f, a);
    } catch (const Error&) {
      ok = false;
    }
    if (ok) {
      out.push_back(std::move(a));
    } else if (++rejections > 1000) {
      throw Error("sampling " + f.name + ": too many rejections");
    }
  }
  return out;
}

StructureTensor conjecture_family(ConjectureKind kind, int n, std::optional<Rational> alpha) {
  if (n < 2) throw Error("conjecture families need n >= 2");
  StructureTensor t(n);
  if (kind == ConjectureKind::direct_sum) {
    for (int i = 0; i < n; ++i) t(i, i, i) = MultiPoly(Rational(1));
    return t;
  }
  if (!alpha) throw Error("nu_n requires alpha");
  t(0, 0, 0) = MultiPoly(Rational(1));
  for (int i = 1; i < n; ++i) {
    t(0, i, i) = MultiPoly(*alpha);
    t(i, 0, i) = MultiPoly(Rational(1) - *alpha);
  }
  return t;
}

}  // namespace algvar
