#include "algvar/groebner.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "algvar/algebra_ops.hpp"
#include "algvar/invariants.hpp"

namespace algvar {

namespace gb {
namespace {

int compare(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
  for (int i = nvars - 1; i >= 0; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

bool divides(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg > b.deg) return false;
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b, int nvars) {
  Monomial m;
  for (int i = 0; i < nvars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

Monomial quotient(const Monomial& a, const Monomial& b, int nvars) {
  Monomial m;
  for (int i = 0; i < nvars; ++i) {
    m.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

Monomial product(const Monomial& a, const Monomial& b, int nvars) {
  Monomial m;
  for (int i = 0; i < nvars; ++i) m.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

bool coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

bool equal(const Monomial& a, const Monomial& b, int nvars) {
  if (a.deg != b.deg) return false;
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] != b.e[i]) return false;
  return true;
}

// p[from:] - c * m * q
Poly sub_mul(const Poly& p, std::size_t from, const mpq_class& c, const Monomial& m, const Poly& q,
             int nvars) {
  Poly out;
  out.reserve(p.size() - from + q.size());
  std::size_t i = from, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Monomial mq = product(m, q[j].m, nvars);
    int cmp = i == p.size() ? -1 : compare(p[i].m, mq, nvars);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({mq, -c * q[j].c});
      ++j;
    } else {
      mpq_class v = p[i].c - c * q[j].c;
      if (sgn(v) != 0) out.push_back({mq, v});
      ++i;
      ++j;
    }
  }
  return out;
}

void make_monic(Poly& p) {
  if (p.empty()) return;
  mpq_class lc = p[0].c;
  if (lc == 1) return;
  for (auto& t : p) t.c /= lc;
}

// Full reduction; the basis polynomials are monic.
Poly normal_form(Poly p, const std::vector<const Poly*>& basis, int nvars) {
  Poly result;
  std::size_t head = 0;
  while (head < p.size()) {
    const Poly* red = nullptr;
    for (const Poly* g : basis)
      if (divides((*g)[0].m, p[head].m, nvars)) {
        red = g;
        break;
      }
    if (red == nullptr) {
      result.push_back(p[head++]);
      continue;
    }
    mpq_class c = p[head].c;
    Monomial m = quotient(p[head].m, (*red)[0].m, nvars);
    p = sub_mul(p, head, c, m, *red, nvars);
    head = 0;
  }
  return result;
}

Poly s_polynomial(const Poly& f, const Poly& g, int nvars) {
  Monomial l = lcm(f[0].m, g[0].m, nvars);
  Poly a = sub_mul(Poly{}, 0, mpq_class(-1), quotient(l, f[0].m, nvars), f, nvars);
  return sub_mul(a, 0, mpq_class(1), quotient(l, g[0].m, nvars), g, nvars);
}

int degree_of(const Poly& p) {
  int d = 0;
  for (const auto& t : p) d = std::max(d, t.m.deg);
  return d;
}

}  // namespace
}  // namespace gb

namespace {

using gb::kMaxVars;

gb::Poly to_internal(const MultiPoly& p, const std::vector<std::string>& vars) {
  int nvars = static_cast<int>(vars.size());
  std::vector<int> slot;
  for (const auto& v : p.variables()) {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw Error("groebner: variable " + v + " is outside the ring");
    slot.push_back(static_cast<int>(it - vars.begin()));
  }
  gb::Poly out;
  out.reserve(p.term_count());
  for (const auto& [exp, c] : p.terms()) {
    gb::Term t;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] > 65535) throw Error("groebner: exponent too large");
      t.m.e[slot[i]] = static_cast<std::uint16_t>(exp[i]);
      t.m.deg += exp[i];
    }
    t.c = c.raw();
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [nvars](const gb::Term& a, const gb::Term& b) { return gb::compare(a.m, b.m, nvars) > 0; });
  return out;
}

MultiPoly from_internal(const gb::Poly& p, const std::vector<std::string>& vars) {
  int nvars = static_cast<int>(vars.size());
  MultiPoly::TermMap terms;
  for (const auto& t : p) {
    Exponents e(static_cast<std::size_t>(nvars));
    for (int i = 0; i < nvars; ++i) e[i] = t.m.e[i];
    terms.emplace(std::move(e), Rational(t.c));
  }
  return MultiPoly::from_terms(vars, std::move(terms));
}

std::vector<std::string> ring_variables(const std::vector<MultiPoly>& gens,
                                        const std::vector<std::string>& order) {
  std::vector<std::string> vars;
  std::set<std::string> seen;
  std::set<std::string> used;
  for (const auto& g : gens)
    for (const auto& v : g.variables()) used.insert(v);
  for (const auto& v : order)
    if (seen.insert(v).second) vars.push_back(v);
  for (const auto& v : used)
    if (seen.insert(v).second) vars.push_back(v);
  if (static_cast<int>(vars.size()) > kMaxVars) throw Error("groebner: too many variables");
  return vars;
}

}  // namespace

Ideal::Ideal(std::vector<MultiPoly> generators, std::vector<std::string> variable_order)
    : generators_(std::move(generators)), variables_(ring_variables(generators_, variable_order)) {}

GroebnerBasis::GroebnerBasis(std::vector<std::string> variables, std::vector<gb::Poly> polys)
    : variables_(std::move(variables)), polys_(std::move(polys)) {}

std::vector<MultiPoly> GroebnerBasis::polys() const {
  std::vector<MultiPoly> out;
  for (const auto& p : polys_) out.push_back(from_internal(p, variables_));
  return out;
}

bool GroebnerBasis::is_unit() const {
  for (const auto& p : polys_)
    if (p.size() == 1 && p[0].m.deg == 0) return true;
  return false;
}

MultiPoly GroebnerBasis::reduce(const MultiPoly& p) const {
  std::vector<std::string> vars = variables_;
  for (const auto& v : p.variables())
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  if (static_cast<int>(vars.size()) > kMaxVars) throw Error("groebner: too many variables");
  // Appending variables at the end keeps the order on the old variables and
  // makes the new ones smallest; the basis stays a Groebner basis in the
  // larger ring since its elements do not involve them.
  std::vector<const gb::Poly*> basis;
  for (const auto& g : polys_) basis.push_back(&g);
  gb::Poly q = to_internal(p, vars);
  return from_internal(gb::normal_form(std::move(q), basis, static_cast<int>(vars.size())), vars);
}

bool GroebnerBasis::satisfies_buchberger_criterion() const {
  int nvars = static_cast<int>(variables_.size());
  std::vector<const gb::Poly*> basis;
  for (const auto& g : polys_) basis.push_back(&g);
  for (std::size_t i = 0; i < polys_.size(); ++i)
    for (std::size_t j = i + 1; j < polys_.size(); ++j) {
      gb::Poly s = gb::s_polynomial(polys_[i], polys_[j], nvars);
      if (!gb::normal_form(std::move(s), basis, nvars).empty()) return false;
    }
  return true;
}

std::vector<std::string> GroebnerBasis::dump() const {
  std::vector<std::string> out;
  for (const auto& p : polys()) out.push_back(p.to_string());
  return out;
}

GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& options) {
  const auto& vars = ideal.variables();
  const int nvars = static_cast<int>(vars.size());
  GroebnerResult result;

  std::vector<gb::Poly> polys;  // every polynomial ever added
  std::vector<std::size_t> active;
  struct Pair {
    std::size_t i, j;
    gb::Monomial lcm;
  };
  std::vector<Pair> pairs;

  auto unit_basis = [&]() {
    gb::Poly one{{gb::Monomial{}, mpq_class(1)}};
    result.status = GroebnerStatus::complete;
    result.basis = GroebnerBasis(vars, {one});
    return result;
  };

  // Gebauer-Moeller update with a new polynomial h (index hi).
  auto update = [&](std::size_t hi) {
    const gb::Monomial& lh = polys[hi][0].m;
    std::vector<Pair> c;
    for (std::size_t g : active) c.push_back({hi, g, gb::lcm(lh, polys[g][0].m, nvars)});
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Pair& p = c[k];
      bool keep = gb::coprime(lh, polys[p.j][0].m, nvars);
      if (!keep) {
        keep = true;
        for (std::size_t m = k + 1; m < c.size() && keep; ++m)
          if (gb::divides(c[m].lcm, p.lcm, nvars)) keep = false;
        for (std::size_t m = 0; m < d.size() && keep; ++m)
          if (gb::divides(d[m].lcm, p.lcm, nvars)) keep = false;
      }
      if (keep) d.push_back(p);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs) {
      bool drop = gb::divides(lh, p.lcm, nvars) &&
                  !gb::equal(gb::lcm(polys[p.i][0].m, lh, nvars), p.lcm, nvars) &&
                  !gb::equal(gb::lcm(lh, polys[p.j][0].m, nvars), p.lcm, nvars);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : d)
      if (!gb::coprime(lh, polys[p.j][0].m, nvars)) next.push_back(p);
    pairs = std::move(next);
    std::vector<std::size_t> kept;
    for (std::size_t g : active)
      if (!gb::divides(lh, polys[g][0].m, nvars)) kept.push_back(g);
    kept.push_back(hi);
    active = std::move(kept);
  };

  auto active_basis = [&]() {
    std::vector<const gb::Poly*> b;
    for (std::size_t g : active) b.push_back(&polys[g]);
    return b;
  };

  // Insert inputs one at a time, each reduced by what is already present.
  for (const auto& g : ideal.generators()) {
    gb::Poly p = gb::normal_form(to_internal(g, vars), active_basis(), nvars);
    if (p.empty()) continue;
    gb::make_monic(p);
    result.max_degree = std::max(result.max_degree, gb::degree_of(p));
    if (p[0].m.deg == 0) return unit_basis();
    if (gb::degree_of(p) > options.degree_cap) {
      result.status = GroebnerStatus::resource_exhausted;
      return result;
    }
    polys.push_back(std::move(p));
    update(polys.size() - 1);
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k)
      if (gb::compare(pairs[k].lcm, pairs[best].lcm, nvars) < 0) best = k;
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));
    if (++result.pairs_processed > options.pair_cap || p.lcm.deg > options.degree_cap) {
      result.status = GroebnerStatus::resource_exhausted;
      return result;
    }
    gb::Poly s = gb::s_polynomial(polys[p.i], polys[p.j], nvars);
    gb::Poly h = gb::normal_form(std::move(s), active_basis(), nvars);
    if (h.empty()) continue;
    gb::make_monic(h);
    int dh = gb::degree_of(h);
    result.max_degree = std::max(result.max_degree, dh);
    if (h[0].m.deg == 0) return unit_basis();
    if (dh > options.degree_cap) {
      result.status = GroebnerStatus::resource_exhausted;
      return result;
    }
    polys.push_back(std::move(h));
    update(polys.size() - 1);
  }

  // Reduced basis: minimal leading terms, tails fully reduced.
  std::vector<gb::Poly> minimal;
  for (std::size_t a : active) {
    bool redundant = false;
    for (std::size_t b : active)
      if (a != b && gb::divides(polys[b][0].m, polys[a][0].m, nvars) &&
          (!gb::equal(polys[b][0].m, polys[a][0].m, nvars) || b < a)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(polys[a]);
  }
  std::vector<gb::Poly> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<const gb::Poly*> others;
    for (std::size_t m = 0; m < minimal.size(); ++m)
      if (m != k) others.push_back(&minimal[m]);
    gb::Poly tail(minimal[k].begin() + 1, minimal[k].end());
    gb::Poly r{minimal[k][0]};
    for (auto& t : gb::normal_form(std::move(tail), others, nvars)) r.push_back(std::move(t));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [nvars](const gb::Poly& a, const gb::Poly& b) {
    return gb::compare(a[0].m, b[0].m, nvars) < 0;
  });
  result.status = GroebnerStatus::complete;
  result.basis = GroebnerBasis(vars, std::move(reduced));
  return result;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

EmptinessResult is_empty(const std::vector<MultiPoly>& system, const std::vector<MultiPoly>& nonvanishing,
                         const GroebnerOptions& options, const std::vector<std::string>& variable_order,
                         bool search_point) {
  EmptinessResult out;
  std::vector<MultiPoly> gens;
  for (const auto& p : system)
    if (!p.is_zero()) gens.push_back(p);
  MultiPoly prod(Rational(1));
  for (const auto& q : nonvanishing) {
    if (q.is_zero()) {
      out.verdict = Verdict::yes;
      return out;
    }
    prod = prod * q;
  }

  std::vector<std::string> order;
  std::set<std::string> seen;
  auto add = [&](const std::string& v) {
    if (seen.insert(v).second) order.push_back(v);
  };
  std::set<std::string> used;
  for (const auto& p : gens)
    for (const auto& v : p.variables()) used.insert(v);
  for (const auto& v : prod.variables()) used.insert(v);
  for (const auto& v : variable_order)
    if (used.count(v)) add(v);
  for (const auto& v : used) add(v);
  std::vector<std::string> point_vars = order;

  if (!prod.is_constant()) {
    std::string y = "_rabinowitsch";
    while (used.count(y)) y += "_";
    gens.push_back(MultiPoly::variable(y) * prod - MultiPoly(Rational(1)));
    order.push_back(y);
  }

  out.groebner = buchberger(Ideal(gens, order), options);
  if (out.groebner.status == GroebnerStatus::complete && out.groebner.basis.is_unit()) {
    out.verdict = Verdict::yes;
    return out;
  }
  if (search_point) out.point = find_rational_point(system, nonvanishing, point_vars);
  if (out.point) {
    out.verdict = Verdict::no;
  } else if (out.groebner.status == GroebnerStatus::complete) {
    // A proper ideal has a zero over the closure (Nullstellensatz).
    out.verdict = Verdict::no;
  } else {
    out.verdict = Verdict::unknown;
  }
  return out;
}

namespace {

std::vector<Rational> candidate_values(int max_height) {
  std::vector<Rational> out{Rational(0)};
  // Ordered by height max(|p|, q).
  for (int h = 1; h <= max_height; ++h)
    for (int q = 1; q <= h; ++q)
      for (int p = (q == h ? 1 : h); p <= h; ++p) {
        mpz_class g = gcd(mpz_class(p), mpz_class(q));
        if (g != 1) continue;
        out.emplace_back(p, q);
        out.emplace_back(-p, q);
      }
  return out;
}

// Rational roots of a univariate polynomial of degree <= 2.
std::optional<std::vector<Rational>> small_roots(const std::map<int, MultiPoly>& coeffs) {
  int deg = coeffs.empty() ? 0 : coeffs.rbegin()->first;
  auto c = [&](int k) {
    auto it = coeffs.find(k);
    return it == coeffs.end() ? Rational(0) : it->second.constant_term();
  };
  if (deg == 1) return std::vector<Rational>{-c(0) / c(1)};
  if (deg == 2) {
    Rational a = c(2), b = c(1), cc = c(0);
    Rational disc = b * b - Rational(4) * a * cc;
    if (disc.sign() < 0) return std::vector<Rational>{};
    mpz_class num = disc.numerator(), den = disc.denominator();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
      return std::vector<Rational>{};
    mpz_class sn = sqrt(num), sd = sqrt(den);
    Rational s(sn, sd);
    std::vector<Rational> r{(-b + s) / (Rational(2) * a)};
    if (!s.is_zero()) r.push_back((-b - s) / (Rational(2) * a));
    return r;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Assignment> find_rational_point(const std::vector<MultiPoly>& system,
                                              const std::vector<MultiPoly>& nonvanishing,
                                              const std::vector<std::string>& variables,
                                              const PointSearchOptions& options) {
  const std::vector<Rational> values = candidate_values(options.max_height);
  std::vector<std::string> all = variables;
  auto collect = [&](const std::vector<MultiPoly>& ps) {
    for (const auto& p : ps)
      for (const auto& v : p.variables())
        if (std::find(all.begin(), all.end(), v) == all.end()) all.push_back(v);
  };
  collect(system);
  collect(nonvanishing);

  using Elim = std::vector<std::pair<std::string, MultiPoly>>;
  long nodes = 0;
  std::optional<Assignment> found;

  std::function<bool(std::vector<MultiPoly>, std::vector<MultiPoly>, Assignment, Elim)> search =
      [&](std::vector<MultiPoly> eqs, std::vector<MultiPoly> neqs, Assignment fixed, Elim elim) -> bool {
    if (++nodes > options.node_budget) return false;
    auto assign = [&](const std::string& v, const Rational& r, std::vector<MultiPoly> e2,
                      std::vector<MultiPoly> n2, Assignment f2) {
      Assignment a{{v, r}};
      for (auto& x : e2) x = x.partial_eval(a);
      for (auto& x : n2) x = x.partial_eval(a);
      f2[v] = r;
      return search(std::move(e2), std::move(n2), std::move(f2), elim);
    };
    for (bool changed = true; changed;) {
      changed = false;
      std::vector<MultiPoly> rest;
      for (auto& e : eqs) {
        if (e.is_zero()) continue;
        if (e.is_constant()) return false;
        rest.push_back(std::move(e));
      }
      eqs = std::move(rest);
      for (const auto& q : neqs)
        if (q.is_zero()) return false;
      // Univariate equations of degree <= 2 force their rational roots.
      for (const auto& e : eqs) {
        if (e.variables().size() != 1) continue;
        const std::string& v = e.variables()[0];
        auto roots = small_roots(e.coefficients_in(v));
        if (!roots) continue;
        for (const auto& r : *roots) {
          if (assign(v, r, eqs, neqs, fixed)) return true;
          if (nodes > options.node_budget) return false;
        }
        return false;
      }
      // An equation linear in v with constant coefficient eliminates v.
      std::optional<std::pair<std::string, MultiPoly>> solved;
      for (const auto& e : eqs) {
        for (const auto& v : e.variables()) {
          if (e.degree(v) != 1) continue;
          auto cs = e.coefficients_in(v);
          if (!cs[1].is_constant()) continue;
          solved.emplace(v, cs[0] * (-cs[1].constant_term().inverse()));
          break;
        }
        if (solved) break;
      }
      if (solved) {
        std::map<std::string, MultiPoly> sub{{solved->first, solved->second}};
        for (auto& x : eqs) x = x.substitute(sub);
        for (auto& x : neqs) x = x.substitute(sub);
        elim.push_back(std::move(*solved));
        changed = true;
      }
    }
    std::set<std::string> eliminated;
    for (const auto& [v, _] : elim) eliminated.insert(v);
    std::map<std::string, int> count;
    for (const auto& e : eqs)
      for (const auto& v : e.variables()) count[v] += 1;
    for (const auto& q : neqs)
      for (const auto& v : q.variables()) count[v] += 0;
    std::string pick;
    int best = -1;
    for (const auto& v : all)
      if (!fixed.count(v) && !eliminated.count(v) && count.count(v) && count[v] > best) {
        pick = v;
        best = count[v];
      }
    if (pick.empty()) {
      if (!eqs.empty()) return false;
      Assignment point = fixed;
      for (const auto& v : all)
        if (!point.count(v) && !eliminated.count(v)) point[v] = Rational(0);
      for (auto it = elim.rbegin(); it != elim.rend(); ++it) {
        Assignment local = point;
        for (const auto& v : it->second.variables())
          if (!local.count(v)) local[v] = Rational(0);
        point[it->first] = it->second.eval(local);
      }
      found = point;
      return true;
    }
    for (const auto& r : values) {
      if (assign(pick, r, eqs, neqs, fixed)) return true;
      if (nodes > options.node_budget) return false;
    }
    return false;
  };

  if (!search(system, nonvanishing, {}, {})) return std::nullopt;
  Assignment point = *found;
  for (const auto& v : all)
    if (!point.count(v)) point[v] = Rational(0);
  for (const auto& e : system)
    if (!e.eval(point).is_zero()) return std::nullopt;
  for (const auto& q : nonvanishing)
    if (q.eval(point).is_zero()) return std::nullopt;
  return point;
}

std::string matrix_entry_name(const std::string& prefix, int row, int col) {
  return prefix + std::to_string(row + 1) + std::to_string(col + 1);
}

LinearMap generic_matrix(int n, const std::string& prefix) {
  LinearMap g(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = MultiPoly::variable(matrix_entry_name(prefix, r, c));
  return g;
}

IsomorphismResult are_isomorphic(const StructureTensor& a, const StructureTensor& b,
                                 const GroebnerOptions& options) {
  require_same_dim<MultiPoly>(a.dim(), b.dim(), "are_isomorphic");
  IsomorphismResult out;
  int n = a.dim();
  if (derivation_algebra_dim(a) != derivation_algebra_dim(b)) {
    out.verdict = Verdict::no;
    out.reason = "derivation algebra dimensions differ";
    return out;
  }
  if (product_span_dim(a) != product_span_dim(b)) {
    out.verdict = Verdict::no;
    out.reason = "product span dimensions differ";
    return out;
  }
  LinearMap g = generic_matrix(n);
  std::vector<std::string> vars;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) vars.push_back(matrix_entry_name("g", r, c));
  // g(A(e_i, e_j)) = B(g e_i, g e_j)
  std::vector<MultiPoly> eqs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<MultiPoly> lhs = g.apply(a.basis_product(i, j));
      Vec<MultiPoly> rhs = b.apply(g.column(i), g.column(j));
      for (int k = 0; k < n; ++k) {
        MultiPoly e = lhs[k] - rhs[k];
        if (!e.is_zero()) eqs.push_back(std::move(e));
      }
    }
  MultiPoly det = determinant(g);

  // Cheap candidates first: the identity and small permutation/diagonal guesses
  // are covered by the bounded search.
  PointSearchOptions search_options;
  search_options.node_budget = 20000;
  if (auto pt = find_rational_point(eqs, {det}, vars, search_options)) {
    RationalMatrix w(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) w(r, c) = pt->at(matrix_entry_name("g", r, c));
    out.verdict = Verdict::yes;
    out.witness = w;
    out.reason = "rational witness found";
    return out;
  }
  EmptinessResult e = is_empty(eqs, {det}, options, vars, false);
  if (e.verdict == Verdict::yes) {
    out.verdict = Verdict::no;
    out.reason = "isomorphism system is empty over the algebraic closure";
  } else if (e.verdict == Verdict::no) {
    out.verdict = Verdict::yes;
    out.reason = "isomorphic over the algebraic closure; no rational witness found";
  } else {
    out.verdict = Verdict::unknown;
    out.reason = "groebner caps reached";
  }
  return out;
}

}  // namespace algvar
