#include "algvar/separating.hpp"

#include <algorithm>

#include "algvar/algebra_ops.hpp"
#include "algvar/deformation.hpp"
#include "algvar/sampling.hpp"
#include "algvar/tensor_io.hpp"

namespace algvar {

std::string ExcludedTarget::label() const {
  if (exclusions.empty()) return family;
  std::string s = family + " (";
  for (std::size_t i = 0; i < exclusions.size(); ++i) s += (i ? ", " : "") + exclusions[i] + " != 0";
  return s + ")";
}

bool SeparatingReport::emptiness() const {
  return !targets.empty() &&
         std::all_of(targets.begin(), targets.end(), [](const TargetReport& t) { return t.passed(); });
}

bool SeparatingReport::passed() const {
  return membership && stability_sampled && stability_symbolic == Verdict::yes && emptiness();
}

SeparatingSet separating_from_json(const nlohmann::json& j) {
  SeparatingSet s;
  s.id = j.value("id", std::string());
  s.source = j.at("source").get<std::string>();
  s.conditions = j.at("conditions").get<std::vector<std::string>>();
  for (const auto& t : j.at("excluded")) {
    ExcludedTarget e;
    if (t.is_string()) {
      e.family = t.get<std::string>();
    } else {
      e.family = t.at("family").get<std::string>();
      e.exclusions = t.value("exclusions", std::vector<std::string>{});
    }
    s.excluded.push_back(std::move(e));
  }
  if (s.id.empty()) s.id = s.source;
  return s;
}

std::vector<SeparatingSet> load_separating_sets(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  std::vector<SeparatingSet> out;
  try {
    for (const auto& sj : j.at("rows")) out.push_back(separating_from_json(sj));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return out;
}

std::string constant_symbol(int i, int j, int k) {
  return "c" + std::to_string(i + 1) + std::to_string(j + 1) + std::to_string(k + 1);
}

std::vector<std::string> constant_symbols(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out.push_back(constant_symbol(i, j, k));
  return out;
}

namespace {

constexpr int kDim = 2;

std::map<std::string, MultiPoly> symbol_map(const StructureTensor& t) {
  std::map<std::string, MultiPoly> m;
  int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) m[constant_symbol(i, j, k)] = t(i, j, k);
  return m;
}

StructureTensor generic_tensor(int n) {
  StructureTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = MultiPoly::variable(constant_symbol(i, j, k));
  return t;
}

RationalTensor tensor_at(const std::vector<std::string>& coords, const Assignment& point, int n) {
  RationalTensor t(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) t(i, j, k) = point.at(constant_symbol(i, j, k));
  (void)coords;
  return t;
}

Assignment tensor_point(const RationalTensor& t) {
  Assignment a;
  int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) a[constant_symbol(i, j, k)] = t(i, j, k);
  return a;
}

std::string describe(const Assignment& a) {
  std::string s;
  for (const auto& [k, v] : a) s += (s.empty() ? "" : ", ") + k + "=" + v.to_string();
  return s;
}

Substitution renamed(const std::vector<std::string>& params) {
  Substitution s;
  for (const auto& p : params) s[p] = MultiPoly::variable(p + kTargetSuffix);
  return s;
}

bool membership(const Catalog& cat, const SeparatingSet& s, const std::vector<MultiPoly>& conditions,
                std::string& why) {
  StructureTensor src = reference_tensor(cat, FamilyRef{s.source, {}});
  auto values = symbol_map(src);
  for (const auto& p : conditions) {
    MultiPoly v = p.substitute(values);
    if (!v.is_zero()) {
      why = s.source + " violates " + p.to_string() + " (residual " + v.to_string() + ")";
      return false;
    }
  }
  return true;
}

Verdict symbolic_stability(const std::vector<MultiPoly>& conditions, const std::vector<MultiPoly>& source_neqs,
                           const GroebnerOptions& options, std::string& why) {
  LinearMap l(kDim);
  l(0, 0) = MultiPoly::variable("l11");
  l(1, 0) = MultiPoly::variable("l21");
  l(1, 1) = MultiPoly::variable("l22");
  auto [num, det] = change_basis_fraction(generic_tensor(kDim), l);
  auto gb = buchberger(Ideal(conditions), options);
  std::vector<MultiPoly> nonzero = source_neqs;
  nonzero.push_back(MultiPoly::variable("l11"));
  nonzero.push_back(MultiPoly::variable("l22"));
  for (const auto& p : conditions) {
    MultiPoly q = transformed_condition(p, num, det);
    if (gb.status == GroebnerStatus::complete && gb.basis.contains(q)) continue;
    auto e = is_empty(conditions, [&] {
      auto v = nonzero;
      v.push_back(q);
      return v;
    }(), options);
    if (e.verdict == Verdict::yes) continue;
    why = "condition " + p.to_string() + " is not preserved by the lower-triangular group";
    if (e.point) why += " at " + describe(*e.point);
    return e.verdict == Verdict::no ? Verdict::no : Verdict::unknown;
  }
  return Verdict::yes;
}

bool sampled_stability(const Catalog& cat, const SeparatingSet& s, const std::vector<MultiPoly>& conditions,
                       const SeparatingOptions& opt, int& points, std::string& why) {
  const Family* fam = s.source == kZeroAlgebra ? nullptr : &cat.get(s.source);
  std::vector<std::string> params;
  for (const auto& p : conditions)
    for (const auto& v : p.variables())
      if (v[0] != 'c' && std::find(params.begin(), params.end(), v) == params.end()) params.push_back(v);
  std::vector<Assignment> param_points;
  if (!params.empty()) {
    if (!fam) throw Error(s.id + ": conditions mention parameters of a parameter-free source");
    param_points = cat.sample(*fam, opt.samples, opt.seed);
  }
  auto coords = constant_symbols(kDim);
  Rng rng(opt.seed ^ 0x5eedULL);
  points = 0;
  for (int i = 0; i < opt.samples; ++i) {
    std::vector<MultiPoly> conds = conditions;
    Assignment par;
    if (!params.empty()) {
      for (const auto& p : params) par[p] = param_points[static_cast<std::size_t>(i)].at(p);
      for (auto& c : conds) c = c.partial_eval(par);
    }
    auto pt = sample_condition_point(conds, coords, opt.seed + static_cast<std::uint64_t>(i) * 7919ULL);
    if (!pt) continue;
    ++points;
    RationalTensor t = tensor_at(coords, *pt, kDim);
    for (int b = 0; b < opt.borel_per_sample; ++b) {
      RationalMatrix g = rng.lower_triangular(kDim);
      Assignment moved = tensor_point(change_basis(t, g));
      for (const auto& c : conds)
        if (!c.eval(moved).is_zero()) {
          why = "point " + describe(*pt) + (par.empty() ? "" : " with " + describe(par)) + " leaves R under " +
                matrix_to_string(g);
          return false;
        }
    }
  }
  if (points == 0) why = "no sample points of R found";
  return points > 0;
}

TargetReport target_emptiness(const Catalog& cat, const SeparatingSet& s, const ExcludedTarget& target,
                              const std::vector<MultiPoly>& conditions, const std::vector<MultiPoly>& source_neqs,
                              const SeparatingOptions& opt) {
  TargetReport rep;
  rep.target = target.label();
  std::vector<std::string> params;
  if (target.family != kZeroAlgebra) params = cat.get(target.family).params;
  Substitution rename = renamed(params);
  StructureTensor lambda = substitute(reference_tensor(cat, FamilyRef{target.family, {}}), rename);
  LinearMap g = generic_matrix(kDim);
  auto [num, det] = change_basis_fraction(lambda, g);
  std::vector<MultiPoly> system;
  for (const auto& p : conditions) {
    MultiPoly q = transformed_condition(p, num, det);
    if (!q.is_zero()) system.push_back(q);
  }
  std::vector<MultiPoly> nonzero = source_neqs;
  nonzero.push_back(det);
  std::vector<MultiPoly> target_neqs = reference_inequations(cat, target.family);
  for (const auto& e : target.exclusions) target_neqs.push_back(parse_poly(e));
  for (const auto& p : target_neqs) nonzero.push_back(p.substitute(rename));
  rep.symbolic = is_empty(system, nonzero, opt.groebner).verdict;

  if (params.empty()) return rep;
  const Family& fam = cat.get(target.family);
  auto candidates = cat.sample(fam, opt.target_samples * 4, opt.seed ^ 0x7a67ULL);
  for (const auto& a : candidates) {
    if (rep.sampled_total == opt.target_samples) break;
    bool excluded = false;
    for (const auto& e : target.exclusions) excluded = excluded || eval_expr(e, a).is_zero();
    if (excluded) continue;
    ++rep.sampled_total;
    Assignment at;
    for (const auto& [k, v] : a) at[k + kTargetSuffix] = v;
    std::vector<MultiPoly> sys, nz;
    for (const auto& p : system) sys.push_back(p.partial_eval(at));
    nz.push_back(det);
    for (const auto& p : source_neqs) nz.push_back(p);
    if (is_empty(sys, nz, opt.groebner).verdict == Verdict::yes) ++rep.sampled_passed;
  }
  (void)s;
  return rep;
}

}  // namespace

MultiPoly transformed_condition(const MultiPoly& p, const StructureTensor& numerators, const MultiPoly& det) {
  auto values = symbol_map(numerators);
  const auto& vars = p.variables();
  auto c_degree = [&](const Exponents& e) {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (values.count(vars[i])) d += e[i];
    return d;
  };
  int top = 0;
  for (const auto& [e, c] : p.terms()) top = std::max(top, c_degree(e));
  MultiPoly out;
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars[i]);
      term *= it != values.end() ? it->second.pow(e[i]) : MultiPoly::monomial(vars[i], e[i]);
    }
    out += term * det.pow(top - c_degree(e));
  }
  return out;
}

std::optional<Assignment> sample_condition_point(const std::vector<MultiPoly>& conditions,
                                                 const std::vector<std::string>& coordinates, std::uint64_t seed) {
  Rng rng(seed);
  auto draw = [&] { return rng.chance(20) ? Rational(0) : rng.rational(); };
  for (int attempt = 0; attempt < 50; ++attempt) {
    Assignment point;
    bool failed = false;
    while (!failed) {
      bool progress = false;
      std::vector<std::string> open;
      for (const auto& c : conditions) {
        MultiPoly q = c.partial_eval(point);
        if (q.is_zero()) continue;
        if (q.is_constant()) {
          failed = true;
          break;
        }
        if (q.variables().size() == 1 && q.total_degree() == 1) {
          const std::string& v = q.variables().front();
          auto co = q.coefficients_in(v);
          point[v] = -co[0].constant_term() / co[1].constant_term();
          progress = true;
          break;
        }
        for (const auto& v : q.variables())
          if (std::find(open.begin(), open.end(), v) == open.end()) open.push_back(v);
      }
      if (failed || progress) continue;
      if (open.empty()) break;
      point[open[static_cast<std::size_t>(rng.integer(0, static_cast<long>(open.size()) - 1))]] = draw();
    }
    if (failed) continue;
    for (const auto& v : coordinates)
      if (!point.count(v)) point[v] = draw();
    bool ok = true;
    for (const auto& c : conditions) ok = ok && c.eval(point).is_zero();
    if (ok) return point;
  }
  return std::nullopt;
}

SeparatingReport verify_separating_set(const Catalog& cat, const SeparatingSet& s, const SeparatingOptions& opt) {
  SeparatingReport rep;
  std::vector<MultiPoly> conditions;
  for (const auto& c : s.conditions) conditions.push_back(parse_poly(c));
  std::vector<std::string> mentioned;
  for (const auto& p : conditions)
    for (const auto& v : p.variables()) mentioned.push_back(v);
  std::vector<MultiPoly> source_neqs;
  for (const auto& p : reference_inequations(cat, s.source)) {
    bool relevant = std::all_of(p.variables().begin(), p.variables().end(), [&](const std::string& v) {
      return std::find(mentioned.begin(), mentioned.end(), v) != mentioned.end();
    });
    if (relevant) source_neqs.push_back(p);
  }

  std::string why;
  rep.membership = membership(cat, s, conditions, why);
  if (!rep.membership) rep.counterexample = why;
  why.clear();
  rep.stability_sampled = sampled_stability(cat, s, conditions, opt, rep.stability_points, why);
  if (!rep.stability_sampled && rep.counterexample.empty()) rep.counterexample = why;
  why.clear();
  rep.stability_symbolic = symbolic_stability(conditions, source_neqs, opt.groebner, why);
  if (rep.stability_symbolic != Verdict::yes && rep.counterexample.empty()) rep.counterexample = why;
  for (const auto& t : s.excluded)
    rep.targets.push_back(target_emptiness(cat, s, t, conditions, source_neqs, opt));
  return rep;
}

}  // namespace algvar
