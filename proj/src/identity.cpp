#include "algvar/identity.hpp"

#include <algorithm>
#include <array>

#include "algvar/algebra_ops.hpp"
#include "algvar/linalg.hpp"
#include "algvar/tensor_io.hpp"

namespace algvar {

namespace {

int f_column(int n, int a, int b, int m) { return (a * n + b) * n + m; }
int phi_column(int n, int a, int b) { return n * n * n + a * n + b; }

std::vector<BilinearMap> operator_brackets(const StructureTensor& p) {
  int n = p.dim();
  std::vector<BilinearMap> out;
  for (int m = 0; m < n; ++m)
    out.push_back(bracket_lin_bil(left_mult(p, basis_vector<MultiPoly>(n, m)), p));
  return out;
}

bool all_constant(const IdentitySystem& s) {
  for (const auto& row : s.matrix)
    for (const auto& x : row)
      if (!x.is_constant()) return false;
  for (const auto& x : s.rhs)
    if (!x.is_constant()) return false;
  return true;
}

}  // namespace

std::vector<std::string> unknown_names(int n, IdentityKind kind) {
  std::vector<std::string> names;
  if (n == 2) {
    names = {"lambda1", "lambda2", "mu1", "mu2", "tau1", "tau2", "nu1", "nu2"};
    if (kind == IdentityKind::rigid)
      for (const char* s : {"phi11", "phi12", "phi21", "phi22"}) names.emplace_back(s);
    return names;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int m = 0; m < n; ++m)
        names.push_back("f" + std::to_string(a + 1) + std::to_string(b + 1) + std::to_string(m + 1));
  if (kind == IdentityKind::rigid)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) names.push_back("phi" + std::to_string(a + 1) + std::to_string(b + 1));
  return names;
}

BilinearMap double_bracket(const StructureTensor& p, int a, int b) {
  int n = p.dim();
  auto la = left_mult(p, basis_vector<MultiPoly>(n, a));
  auto lb = left_mult(p, basis_vector<MultiPoly>(n, b));
  return bracket_lin_bil(lb, bracket_lin_bil(la, p));
}

IdentitySystem identity_system(const StructureTensor& p, IdentityKind kind) {
  int n = p.dim();
  IdentitySystem s;
  s.columns = n * n * n + (kind == IdentityKind::rigid ? n * n : 0);
  auto brackets = operator_brackets(p);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      BilinearMap db = double_bracket(p, a, b);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int k = 0; k < n; ++k) {
            std::vector<MultiPoly> row(static_cast<std::size_t>(s.columns));
            for (int m = 0; m < n; ++m) row[f_column(n, a, b, m)] = brackets[m](x, y, k);
            if (kind == IdentityKind::rigid) row[phi_column(n, a, b)] = -p(x, y, k);
            s.matrix.push_back(std::move(row));
            s.rhs.push_back(-db(x, y, k));
          }
    }
  return s;
}

std::vector<BilinearMap> witness_residuals(const StructureTensor& p, const BilinearMap& f,
                                           const BilinearForm& phi) {
  int n = p.dim();
  std::vector<BilinearMap> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      BilinearMap r = double_bracket(p, a, b);
      Vec<MultiPoly> fab = f.basis_product(a, b);
      BilinearMap lf = bracket_lin_bil(left_mult(p, fab), p);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int k = 0; k < n; ++k) r(x, y, k) = r(x, y, k) + lf(x, y, k) - phi(a, b) * p(x, y, k);
      out.push_back(std::move(r));
    }
  return out;
}

bool witness_satisfies(const StructureTensor& p, const BilinearMap& f, const BilinearForm& phi) {
  for (const auto& r : witness_residuals(p, f, phi))
    if (!r.is_zero_map()) return false;
  return true;
}

BilinearMap pinned_terminal_F(const StructureTensor& p) {
  int n = p.dim();
  BilinearMap f(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int k = 0; k < n; ++k)
        f(a, b, k) = p(a, b, k) * Rational(2, 3) + p(b, a, k) * Rational(1, 3);
  return f;
}

bool pinned_conservative_holds(const StructureTensor& p) {
  return witness_satisfies(p, pinned_terminal_F(p), BilinearForm(p.dim()));
}

std::vector<MultiPoly> terminal_conditions(const StructureTensor& p) {
  std::vector<MultiPoly> out;
  for (const auto& t : terminal_tensors(p))
    for (const auto& x : t.entries())
      if (!x.is_zero()) out.push_back(x);
  return out;
}

IdentityReport is_terminal(const StructureTensor& p) {
  IdentityReport r;
  auto conds = terminal_conditions(p);
  if (conds.empty()) {
    r.verdict = Verdict::yes;
    Witness w;
    w.F = pinned_terminal_F(p);
    w.phi = BilinearForm(p.dim());
    r.witness = w;
    r.detail = "[[[P,a],P],P] vanishes on every basis vector";
  } else {
    r.verdict = Verdict::no;
    r.detail = "nonzero entry of [[[P,a],P],P]: " + conds.front().to_string();
  }
  return r;
}

IdentityReport decide_identity(const StructureTensor& p, IdentityKind kind) {
  IdentitySystem s = identity_system(p, kind);
  IdentityReport r;
  if (!all_constant(s)) {
    ParametricReport pr = decide_parametric(p, kind, {}, {});
    r.verdict = pr.verdict;
    r.detail = "parametric decision over " + std::to_string(pr.solve.cells.size()) + " cells";
    return r;
  }
  int n = p.dim();
  RationalRows m;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < s.matrix.size(); ++i) {
    std::vector<Rational> row;
    for (const auto& x : s.matrix[i]) row.push_back(x.constant_term());
    m.push_back(std::move(row));
    rhs.push_back(s.rhs[i].constant_term());
  }
  auto sol = solve_affine(m, rhs, s.columns);
  if (!sol) {
    r.verdict = Verdict::no;
    r.detail = "linear system is inconsistent";
    return r;
  }
  auto names = unknown_names(n, kind);
  std::vector<MultiPoly> value(static_cast<std::size_t>(s.columns));
  for (int u = 0; u < s.columns; ++u) {
    MultiPoly v(sol->particular[u]);
    for (std::size_t f = 0; f < sol->free_columns.size(); ++f) {
      const Rational& c = sol->directions[f][u];
      if (!c.is_zero()) v += MultiPoly::variable(names[sol->free_columns[f]]) * c;
    }
    value[u] = std::move(v);
  }
  Witness w;
  w.F = BilinearMap(n);
  w.phi = BilinearForm(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int k = 0; k < n; ++k) w.F(a, b, k) = value[f_column(n, a, b, k)];
      if (kind == IdentityKind::rigid) w.phi(a, b) = value[phi_column(n, a, b)];
    }
  for (int f : sol->free_columns) w.free_symbols.push_back(names[f]);
  r.verdict = Verdict::yes;
  r.witness = std::move(w);
  r.solution_dim = static_cast<int>(sol->free_columns.size());
  r.detail = "solution space of dimension " + std::to_string(*r.solution_dim);
  return r;
}

IdentityReport is_conservative(const StructureTensor& p) { return decide_identity(p, IdentityKind::conservative); }
IdentityReport is_rigid(const StructureTensor& p) { return decide_identity(p, IdentityKind::rigid); }

ParametricReport decide_parametric(const StructureTensor& p, IdentityKind kind,
                                   const std::vector<MultiPoly>& domain_eqs,
                                   const std::vector<MultiPoly>& domain_neqs,
                                   const ParamSolverOptions& options) {
  IdentitySystem s = identity_system(p, kind);
  ParametricReport r;
  r.solve = solve_parametric(s.matrix, s.rhs, s.columns, domain_eqs, domain_neqs, options);
  if (!r.solve.complete) {
    r.verdict = Verdict::unknown;
    return r;
  }
  bool any_yes = false, any_no = false;
  for (const auto& c : r.solve.cells) (c.consistent ? any_yes : any_no) = true;
  if (any_yes && !any_no)
    r.verdict = Verdict::yes;
  else if (any_no && !any_yes)
    r.verdict = Verdict::no;
  else if (!any_yes && !any_no)
    r.verdict = Verdict::no;  // empty domain: vacuous, reported as no
  else
    r.verdict = Verdict::unknown;
  return r;
}

std::vector<CaseEquations> case_conditions(const StructureTensor& p, IdentityKind kind) {
  if (p.dim() != 2) throw DimensionMismatch("case_conditions requires a 2-dimensional algebra");
  // (label, a, b, x, y) with e1 -> 0, e2 -> 1
  static const std::array<std::tuple<const char*, int, int, int, int>, 16> kCases = {{
      {"1.a", 0, 0, 0, 0}, {"1.b", 1, 1, 1, 1}, {"2.a", 0, 1, 0, 0}, {"2.b", 1, 0, 1, 1},
      {"3.a", 1, 0, 0, 0}, {"3.b", 0, 1, 1, 1}, {"4.a", 0, 0, 1, 0}, {"4.b", 1, 1, 0, 1},
      {"5.a", 0, 0, 0, 1}, {"5.b", 1, 1, 1, 0}, {"6.a", 1, 1, 0, 0}, {"6.b", 0, 0, 1, 1},
      {"7.a", 0, 1, 0, 1}, {"7.b", 1, 0, 1, 0}, {"8.a", 1, 0, 0, 1}, {"8.b", 0, 1, 1, 0},
  }};
  const int n = 2;
  auto names = unknown_names(n, IdentityKind::rigid);
  auto brackets = operator_brackets(p);
  std::vector<CaseEquations> out;
  for (const auto& [label, a, b, x, y] : kCases) {
    CaseEquations ce{label, a, b, x, y, {}};
    BilinearMap db = double_bracket(p, a, b);
    for (int k = 0; k < n; ++k) {
      MultiPoly e = db(x, y, k);
      for (int m = 0; m < n; ++m) e += MultiPoly::variable(names[f_column(n, a, b, m)]) * brackets[m](x, y, k);
      if (kind == IdentityKind::rigid) e -= MultiPoly::variable(names[phi_column(n, a, b)]) * p(x, y, k);
      ce.equations.push_back(std::move(e));
    }
    out.push_back(std::move(ce));
  }
  return out;
}

bool is_commutative(const StructureTensor& p) {
  int n = p.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!(p(i, j, k) == p(j, i, k))) return false;
  return true;
}

bool is_jordan(const StructureTensor& p) {
  if (!is_commutative(p)) throw Error("is_jordan requires a commutative algebra");
  int n = p.dim();
  auto e = [n](int i) { return basis_vector<MultiPoly>(n, i); };
  auto mul = [&p](const Vec<MultiPoly>& u, const Vec<MultiPoly>& v) { return p.apply(u, v); };
  static const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int x1 = 0; x1 < n; ++x1)
    for (int x2 = 0; x2 < n; ++x2)
      for (int x3 = 0; x3 < n; ++x3)
        for (int y = 0; y < n; ++y) {
          int xs[3] = {x1, x2, x3};
          Vec<MultiPoly> total(static_cast<std::size_t>(n));
          for (const auto& s : perms) {
            Vec<MultiPoly> sq = mul(e(xs[s[0]]), e(xs[s[1]]));
            Vec<MultiPoly> lhs = mul(mul(sq, e(y)), e(xs[s[2]]));
            Vec<MultiPoly> rhs = mul(sq, mul(e(y), e(xs[s[2]])));
            for (int k = 0; k < n; ++k) total[k] += lhs[k] - rhs[k];
          }
          for (const auto& v : total)
            if (!v.is_zero()) return false;
        }
  return true;
}

std::vector<WitnessDisplay> load_witness_displays(const std::string& path) {
  nlohmann::json j = read_json_file(path);
  std::vector<WitnessDisplay> out;
  using Grid = std::vector<std::vector<std::vector<std::string>>>;
  try {
    for (const auto& dj : j.at("displays")) {
      WitnessDisplay d;
      d.id = dj.at("id").get<std::string>();
      d.rows = dj.at("rows").get<std::vector<std::string>>();
      d.F = dj.at("F").get<Grid>();
      d.phi = dj.at("phi").get<std::vector<std::vector<std::string>>>();
      d.params = dj.value("params", std::map<std::string, std::string>{});
      d.fix = dj.value("fix", std::map<std::string, std::string>{});
      d.nonzero = dj.value("nonzero", std::vector<std::string>{});
      if (dj.contains("as_printed")) d.as_printed = dj.at("as_printed").get<Grid>();
      out.push_back(std::move(d));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return out;
}

std::pair<BilinearMap, BilinearForm> display_at(const WitnessDisplay& d, const Assignment& values, bool conservative,
                                                 bool printed) {
  const auto& grid = printed && d.as_printed ? *d.as_printed : d.F;
  int n = static_cast<int>(grid.size());
  Substitution subst;
  for (const auto& [k, v] : values) subst[k] = MultiPoly(v);
  for (const auto& [sym, expr] : d.params) subst[sym] = MultiPoly(eval_expr(expr, values));
  if (conservative)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) subst[matrix_entry_name("phi", a, b)] = MultiPoly();
  BilinearMap f(n);
  BilinearForm phi(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int k = 0; k < n; ++k) f(a, b, k) = parse_poly(grid[a][b][k], subst);
      phi(a, b) = parse_poly(d.phi[a][b], subst);
    }
  return {std::move(f), std::move(phi)};
}

std::vector<Assignment> display_samples(const Catalog& cat, const WitnessDisplay& d, const std::string& row,
                                        int count, std::uint64_t seed) {
  const Family& f = cat.get(row);
  std::vector<Assignment> out;
  if (f.is_point()) return {Assignment{}};
  std::uint64_t s = seed;
  for (int round = 0; round < 50 && static_cast<int>(out.size()) < count; ++round) {
    for (auto a : cat.sample(f, count, s++)) {
      for (const auto& [k, v] : d.fix) a[k] = eval_expr(v, a);
      if (cat.violated(f, a)) continue;
      try {
        cat.instantiate(f, a);
      } catch (const Error&) {
        continue;
      }
      bool ok = true;
      for (const auto& z : d.nonzero) ok = ok && !eval_expr(z, a).is_zero();
      if (ok && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
      if (static_cast<int>(out.size()) == count) break;
    }
  }
  if (out.empty()) throw Error(d.id + ": no valid parameter points for " + row);
  return out;
}

}  // namespace algvar
