#include "algvar/deformation.hpp"

#include <algorithm>

#include "algvar/algebra_ops.hpp"
#include "algvar/invariants.hpp"
#include "algvar/tensor_io.hpp"

namespace algvar {

namespace {

const std::string kT = "t";

FamilyRef ref_from_json(const nlohmann::json& j) {
  FamilyRef r;
  if (j.is_string()) {
    r.family = j.get<std::string>();
    return r;
  }
  r.family = j.at("family").get<std::string>();
  r.args = j.value("args", std::map<std::string, std::string>{});
  return r;
}

int dim_of(const Catalog& cat, const std::string& family, int fallback) {
  return family == kZeroAlgebra ? fallback : cat.get(family).dim;
}

/// Source tensor with f(t) substituted, over Laurent polynomials.
LaurentTensor deformed_source(const Catalog& cat, const DegenerationWitness& w) {
  StructureTensor src = reference_tensor(cat, FamilyRef{w.source, {}});
  return map_entries<LaurentPoly>(src, [&](const MultiPoly& p) { return substitute_laurent(p, w.index); });
}

}  // namespace

LaurentPoly rescale(const LaurentPoly& p, int m) {
  LaurentPoly out;
  for (const auto& [k, c] : p.terms()) out += LaurentPoly::monomial(k * m, c);
  return out;
}

DegenerationWitness witness_from_json(const nlohmann::json& j) {
  DegenerationWitness w;
  w.id = j.value("id", std::string());
  w.source = j.at("source").get<std::string>();
  w.target = ref_from_json(j.at("target"));
  const auto& basis = j.at("basis");
  int n = static_cast<int>(basis.size());
  w.basis = LaurentMatrix(n);
  for (int c = 0; c < n; ++c) {
    const auto& col = basis.at(static_cast<std::size_t>(c));
    if (static_cast<int>(col.size()) != n) throw ParseError(w.id + ": basis vector of wrong length");
    for (int r = 0; r < n; ++r) w.basis(r, c) = parse_laurent(col.at(static_cast<std::size_t>(r)).get<std::string>(), kT);
  }
  nlohmann::json index = j.value("index", nlohmann::json::object());
  for (const auto& [k, v] : index.items())
    w.index[k] = parse_laurent(v.get<std::string>(), kT);
  if (w.id.empty()) w.id = w.source + "->" + w.target.family;
  return w;
}

nlohmann::json witness_to_json(const DegenerationWitness& w) {
  nlohmann::json j;
  j["id"] = w.id;
  j["source"] = w.source;
  j["target"] = {{"family", w.target.family}, {"args", w.target.args}};
  nlohmann::json basis = nlohmann::json::array();
  for (int c = 0; c < w.basis.dim(); ++c) {
    nlohmann::json col = nlohmann::json::array();
    for (int r = 0; r < w.basis.dim(); ++r) col.push_back(w.basis(r, c).to_string(kT));
    basis.push_back(col);
  }
  j["basis"] = basis;
  nlohmann::json index = nlohmann::json::object();
  for (const auto& [k, v] : w.index) index[k] = v.to_string(kT);
  j["index"] = index;
  return j;
}

std::vector<DegenerationWitness> load_witnesses(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  std::vector<DegenerationWitness> out;
  try {
    for (const auto& wj : j.at("witnesses")) out.push_back(witness_from_json(wj));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return out;
}

StructureTensor reference_tensor(const Catalog& cat, const FamilyRef& ref) {
  if (ref.family == kZeroAlgebra) return zero_algebra(2);
  const Family& f = cat.get(ref.family);
  auto sym = cat.symbolic(f);
  if (!sym) throw Error(f.name + " divides by a parameter and has no symbolic form");
  if (ref.args.empty()) return *sym;
  return substitute(*sym, Catalog::resolve_symbolic(ref));
}

std::vector<MultiPoly> reference_inequations(const Catalog& cat, const std::string& family) {
  if (family == kZeroAlgebra) return {};
  const Family& f = cat.get(family);
  std::vector<MultiPoly> out = cat.domain_inequations(f);
  if (f.origin) {
    Substitution s = Catalog::resolve_symbolic(*f.origin);
    for (const auto& p : cat.domain_inequations(cat.get(f.origin->family))) out.push_back(p.substitute(s));
  }
  return out;
}

DegenerationCheck verify_degeneration(const Catalog& cat, const DegenerationWitness& w,
                                      const GroebnerOptions& options) {
  DegenerationCheck out;
  int n = dim_of(cat, w.source, w.basis.dim());
  if (w.basis.dim() != n) throw DimensionMismatch(w.id + ": basis dimension differs from the source");
  StructureTensor target = reference_tensor(cat, w.target);
  require_same_dim<MultiPoly>(target.dim(), n, "verify_degeneration");

  for (const auto& [param, value] : w.index) {
    (void)value;
    if (w.source == kZeroAlgebra) throw Error(w.id + ": zero algebra has no parameters");
    const auto& params = cat.get(w.source).params;
    if (std::find(params.begin(), params.end(), param) == params.end())
      throw Error(w.id + ": " + param + " is not a parameter of " + w.source);
  }
  std::vector<MultiPoly> domain = reference_inequations(cat, w.source);
  std::vector<MultiPoly> symbolic_domain;
  for (const auto& p : domain) {
    LaurentPoly v = substitute_laurent(p, w.index);
    if (v.is_zero()) {
      out.reason = "f(t) leaves the source domain: " + p.to_string() + " vanishes";
      return out;
    }
    bool moved = false;
    for (const auto& [param, value] : w.index) moved = moved || p.contains(param);
    if (!moved) symbolic_domain.push_back(p);
  }

  LaurentTensor src = deformed_source(cat, w);
  auto [num, det] = change_basis_fraction(src, w.basis);
  if (det.is_zero()) throw SingularMatrix(w.id + ": basis is singular over the Laurent field");
  if (!det.is_monomial()) {
    out.reason = "det E(t) = " + det.to_string() + " is not a monomial in t";
    return out;
  }
  out.det_order = det.order();
  out.det_leading = det.coefficient(out.det_order);
  if (!out.det_leading.is_constant()) {
    // d must not vanish anywhere on the (remaining symbolic) source domain.
    auto e = is_empty({out.det_leading}, symbolic_domain, options);
    if (e.verdict != Verdict::yes) {
      out.reason = "det coefficient " + out.det_leading.to_string() + " may vanish on the source domain";
      return out;
    }
  }

  int k = out.det_order;
  out.limit = StructureTensor(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        const LaurentPoly& e = num(i, j, l);
        MultiPoly expect = target(i, j, l) * out.det_leading;
        if (!e.is_zero() && e.order() < k) {
          out.reason = "pole at t = 0 in entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                       std::to_string(l + 1) + "): " + e.to_string();
          return out;
        }
        MultiPoly got = e.is_zero() ? MultiPoly() : e.coefficient(k);
        if (got != expect) {
          out.reason = "limit mismatch in entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                       std::to_string(l + 1) + "): got (" + got.to_string() + ")/(" + out.det_leading.to_string() +
                       "), expected " + target(i, j, l).to_string();
          return out;
        }
        out.limit(i, j, l) = target(i, j, l);
      }
  out.verified = true;
  return out;
}

DegenerationWitness zero_witness(const std::string& source, int dim) {
  DegenerationWitness w;
  w.id = source + "->" + kZeroAlgebra;
  w.source = source;
  w.target.family = kZeroAlgebra;
  w.basis = LaurentMatrix(dim);
  for (int i = 0; i < dim; ++i) w.basis(i, i) = LaurentPoly::monomial(1);
  return w;
}

DegenerationWitness compose(const DegenerationWitness& first, const DegenerationWitness& second, int m) {
  if (!second.uniform()) throw Error("compose: the second witness must not move parameters");
  if (m < 1) throw Error("compose: m must be positive");
  // Parameters of the middle algebra are fixed by the first witness's target.
  Substitution middle = Catalog::resolve_symbolic(first.target);
  auto fix = [&](const LaurentPoly& p) {
    return p.map_coefficients([&](const MultiPoly& c) { return c.substitute(middle); });
  };
  int n = first.basis.dim();
  LaurentMatrix g1(n), g2(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      g1(r, c) = rescale(first.basis(r, c), m);
      g2(r, c) = fix(second.basis(r, c));
    }
  DegenerationWitness w;
  w.id = first.id + " | " + second.id;
  w.source = first.source;
  w.basis = g1 * g2;
  for (const auto& [k, v] : first.index) w.index[k] = rescale(v, m);
  w.target.family = second.target.family;
  for (const auto& [k, expr] : second.target.args) w.target.args[k] = parse_poly(expr, middle).to_string();
  return w;
}

std::optional<DegenerationWitness> compose_verified(const Catalog& cat, const DegenerationWitness& first,
                                                    const DegenerationWitness& second, int max_m) {
  for (int m = 1; m <= max_m; ++m) {
    DegenerationWitness w = compose(first, second, m);
    if (verify_degeneration(cat, w).verified) return w;
  }
  return std::nullopt;
}

LemmaCheck check_lemma_necessary(const StructureTensor& a, const StructureTensor& b) {
  LemmaCheck out;
  out.der_a = derivation_algebra_dim(a);
  out.der_b = derivation_algebra_dim(b);
  out.square_a = product_span_dim(a);
  out.square_b = product_span_dim(b);
  if (out.der_a >= out.der_b) {
    out.which = "dim Der: " + std::to_string(out.der_a) + " >= " + std::to_string(out.der_b);
  } else if (out.square_a < out.square_b) {
    out.which = "dim A^2: " + std::to_string(out.square_a) + " < " + std::to_string(out.square_b);
  } else {
    out.pass = true;
  }
  return out;
}

}  // namespace algvar
