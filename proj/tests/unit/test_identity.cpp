#include "doctest.h"

#include <set>

#include "algvar/catalog.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/identity.hpp"
#include "algvar/linalg.hpp"
#include "algvar/sampling.hpp"
#include "oracle.hpp"

using namespace algvar;

namespace {

Catalog catalog() { return Catalog::load(ALGVAR_DEFAULT_DATA_DIR); }

const std::vector<std::string>& unknowns() {
  static const std::vector<std::string> names = unknown_names(2, IdentityKind::rigid);
  return names;
}

/// Affine equations at a fixed alpha as rows [coefficients..., constant].
RationalRows rows_at(const std::vector<MultiPoly>& eqs, const Rational& alpha) {
  RationalRows rows;
  for (const auto& e : eqs) {
    MultiPoly p = e.partial_eval({{"alpha", alpha}});
    std::vector<Rational> row;
    Assignment zero;
    for (const auto& u : unknowns()) {
      auto cs = p.coefficients_in(u);
      row.push_back(cs.count(1) ? cs.at(1).eval({}) : Rational(0));
      zero[u] = 0;
    }
    row.push_back(p.eval(zero));
    rows.push_back(row);
  }
  return rows;
}

bool same_span(const std::vector<MultiPoly>& a, const std::vector<MultiPoly>& b, const Rational& alpha) {
  int cols = static_cast<int>(unknowns().size()) + 1;
  RationalRows ra = rows_at(a, alpha), rb = rows_at(b, alpha), both = ra;
  both.insert(both.end(), rb.begin(), rb.end());
  int r = rank(both, cols);
  return rank(ra, cols) == r && rank(rb, cols) == r;
}

/// The necessary conditions listed for A1(alpha), each written as lhs - rhs.
/// Labels missing here are listed as trivial.
std::map<std::string, std::vector<std::string>> printed_a1_conditions() {
  return {
      {"1.a", {"lambda1 + 2*phi11 - 1", "(-2 + alpha)*(2 - alpha - lambda1) + 2*phi11"}},
      {"2.a", {"mu1 + phi12", "(2 - alpha)*mu1 + phi12"}},
      {"3.a", {"tau1 + phi21", "(2 - alpha)*tau1 + phi21"}},
      {"4.a", {"1 - alpha - (1 - alpha)*(lambda1 + phi11)"}},
      {"4.b", {"alpha*(nu1 + phi22)"}},
      {"5.a", {"alpha - alpha*(lambda1 + phi11)"}},
      {"5.b", {"(1 - alpha)*(nu1 + phi22)"}},
      {"6.a", {"nu1 + phi22", "(2 - alpha)*nu1 + phi22"}},
      {"7.a", {"alpha*(mu1 + phi12)"}},
      {"7.b", {"(1 - alpha)*(tau1 + phi21)"}},
      {"8.a", {"alpha*(tau1 + phi21)"}},
      {"8.b", {"(1 - alpha)*(mu1 + phi12)"}},
  };
}

std::vector<MultiPoly> parsed(const std::vector<std::string>& texts) {
  std::vector<MultiPoly> out;
  for (const auto& t : texts) out.push_back(parse_poly(t));
  return out;
}

const std::vector<Rational>& alphas() {
  static const std::vector<Rational> values = {Rational(-3), Rational(-1, 2), Rational(0), Rational(1),
                                               Rational(2),  Rational(5, 3),  Rational(7)};
  return values;
}

}  // namespace

TEST_CASE("case equations for A1(alpha) match the multilinear oracle exactly") {
  Catalog cat = catalog();
  StructureTensor p = *cat.symbolic(cat.get("A1"));
  auto pb = oracle::product(p);
  auto w = oracle::generic_witness();
  auto cases = case_conditions(p);
  REQUIRE(cases.size() == 16);
  for (const auto& c : cases) {
    auto v = oracle::identity_residual(pb, w, oracle::basis(2, c.a), oracle::basis(2, c.b), oracle::basis(2, c.x),
                                       oracle::basis(2, c.y));
    REQUIRE(c.equations.size() == 2);
    CHECK_MESSAGE(c.equations[0] == v[0], c.label);
    CHECK_MESSAGE(c.equations[1] == v[1], c.label);
  }
}

TEST_CASE("case labels follow the listed basis choices") {
  Catalog cat = catalog();
  auto cases = case_conditions(*cat.symbolic(cat.get("A1")));
  auto find = [&](const std::string& label) {
    for (const auto& c : cases)
      if (c.label == label) return c;
    FAIL("missing label " << label);
    return cases.front();
  };
  auto c = find("1.a");
  CHECK((c.a == 0 && c.b == 0 && c.x == 0 && c.y == 0));
  c = find("2.b");  // a = x = y = e2, b = e1
  CHECK((c.a == 1 && c.b == 0 && c.x == 1 && c.y == 1));
  c = find("7.a");  // a = x = e1, b = y = e2
  CHECK((c.a == 0 && c.b == 1 && c.x == 0 && c.y == 1));
  c = find("8.b");  // b = x = e2, a = y = e1
  CHECK((c.a == 0 && c.b == 1 && c.x == 1 && c.y == 0));
}

TEST_CASE("printed A1(alpha) conditions agree with the computed ones") {
  Catalog cat = catalog();
  auto printed = printed_a1_conditions();
  for (const auto& c : case_conditions(*cat.symbolic(cat.get("A1")))) {
    auto it = printed.find(c.label);
    if (it == printed.end()) {
      for (const auto& e : c.equations) CHECK_MESSAGE(e.is_zero(), c.label << " should be trivial");
      continue;
    }
    if (c.label == "1.a") continue;  // see the next test
    for (const auto& alpha : alphas()) CHECK_MESSAGE(same_span(c.equations, parsed(it->second), alpha), c.label);
  }
}

TEST_CASE("printed case 1.a carries 2*phi11 where the identity gives phi11") {
  Catalog cat = catalog();
  std::vector<MultiPoly> computed;
  for (const auto& c : case_conditions(*cat.symbolic(cat.get("A1"))))
    if (c.label == "1.a") computed = c.equations;
  auto printed = parsed(printed_a1_conditions().at("1.a"));
  auto corrected = parsed({"lambda1 + phi11 - 1", "(-2 + alpha)*(2 - alpha - lambda1) + phi11"});
  CHECK_FALSE(same_span(computed, printed, Rational(7)));
  for (const auto& alpha : alphas()) CHECK(same_span(computed, corrected, alpha));
}

TEST_CASE("A1(alpha) is rigid for every alpha") {
  // With the corrected case 1.a, lambda1 = 3 - alpha and phi11 = alpha - 2 solve
  // the whole system, so rigidity is not limited to alpha = 1, 2.
  Catalog cat = catalog();
  for (const auto& alpha : alphas()) {
    StructureTensor t = cat.instantiate("A1", {{"alpha", alpha}});
    CHECK(is_rigid(t).verdict == Verdict::yes);
  }
  CHECK(is_conservative(cat.instantiate("A1", {{"alpha", Rational(1)}})).verdict == Verdict::yes);
  CHECK(is_conservative(cat.instantiate("A1", {{"alpha", Rational(2)}})).verdict == Verdict::yes);
  CHECK(is_conservative(cat.instantiate("A1", {{"alpha", Rational(3)}})).verdict == Verdict::no);
}

TEST_CASE("reported witnesses satisfy the identity") {
  Catalog cat = catalog();
  for (const Family* f : cat.all())
    for (const auto& a : cat.sample(*f, f->is_point() ? 1 : 3, 6)) {
      StructureTensor t = cat.instantiate(*f, a);
      for (auto kind : {IdentityKind::conservative, IdentityKind::rigid}) {
        IdentityReport r = decide_identity(t, kind);
        if (r.verdict != Verdict::yes) continue;
        REQUIRE(r.witness);
        Assignment zeros;
        for (const auto& s : r.witness->free_symbols) zeros[s] = 0;
        BilinearMap fm = map_entries<MultiPoly>(r.witness->F, [&](const MultiPoly& p) { return p.partial_eval(zeros); });
        BilinearForm phi(2);
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) phi(i, j) = r.witness->phi(i, j).partial_eval(zeros);
        CHECK_MESSAGE(witness_satisfies(t, fm, phi), f->name);
        if (kind == IdentityKind::conservative)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) CHECK(phi(i, j).is_zero());
      }
    }
}

TEST_CASE("known verdicts") {
  Catalog cat = catalog();
  CHECK(is_terminal(cat.instantiate("T09")).verdict == Verdict::yes);
  CHECK(is_terminal(zero_algebra(2)).verdict == Verdict::yes);
  CHECK(is_rigid(cat.instantiate("B1", {{"alpha", Rational(0)}})).verdict == Verdict::no);
  CHECK(is_terminal(cat.instantiate("A2")).verdict == Verdict::no);
  CHECK(is_conservative(cat.instantiate("A2")).verdict == Verdict::yes);
  CHECK(is_rigid(cat.instantiate("C", {{"alpha", Rational(1)}, {"beta", Rational(0)}})).verdict == Verdict::yes);
  CHECK(is_rigid(cat.instantiate("C", {{"alpha", Rational(1)}, {"beta", Rational(1)}})).verdict == Verdict::no);
  CHECK(is_rigid(cat.instantiate("C", {{"alpha", Rational(2)}, {"beta", Rational(0)}})).verdict == Verdict::no);
}

TEST_CASE("solution dimensions") {
  Catalog cat = catalog();
  // A1(1): lambda2, mu2, tau2, nu2 and all four phi entries stay free.
  auto r = is_rigid(cat.instantiate("A1", {{"alpha", Rational(1)}}));
  REQUIRE(r.solution_dim);
  CHECK(*r.solution_dim == 8);
  // The zero algebra leaves all twelve unknowns free.
  auto z = is_rigid(zero_algebra(2));
  REQUIRE(z.solution_dim);
  CHECK(*z.solution_dim == 12);
}

TEST_CASE("terminal implies conservative implies rigid on random algebras") {
  Rng rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    StructureTensor t(2);
    for (auto* e : {&t(0, 0, 0), &t(0, 1, 1), &t(1, 0, 1), &t(0, 0, 1), &t(1, 1, 0)})
      if (rng.chance(60)) *e = MultiPoly(Rational(rng.integer(-2, 2)));
    Verdict term = is_terminal(t).verdict, cons = is_conservative(t).verdict, rig = is_rigid(t).verdict;
    if (term == Verdict::yes) CHECK(cons == Verdict::yes);
    if (cons == Verdict::yes) CHECK(rig == Verdict::yes);
    CHECK(pinned_conservative_holds(t) == (term == Verdict::yes));
  }
}

TEST_CASE("pinned terminal F is (2/3) ab + (1/3) ba") {
  Catalog cat = catalog();
  StructureTensor t = cat.instantiate("T05");
  BilinearMap f = pinned_terminal_F(t);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int k = 0; k < 2; ++k)
        CHECK(f(a, b, k) == Rational(2, 3) * t(a, b, k) + Rational(1, 3) * t(b, a, k));
}

TEST_CASE("Jordan identity") {
  Catalog cat = catalog();
  CHECK(is_jordan(cat.instantiate("T09")));
  CHECK(is_jordan(zero_algebra(2)));
  CHECK_THROWS_AS(is_jordan(cat.instantiate("T04")), Error);
  // e1^2 = e2, e2^2 = e1 is commutative but not Jordan.
  StructureTensor t(2);
  t(0, 0, 1) = MultiPoly(Rational(1));
  t(1, 1, 0) = MultiPoly(Rational(1));
  CHECK(is_commutative(t));
  CHECK_FALSE(is_jordan(t));
}

TEST_CASE("parametric decisions for negative families") {
  Catalog cat = catalog();
  for (const char* name : {"A4", "B1", "D3"}) {
    const Family& f = cat.get(name);
    auto r = decide_parametric(*cat.symbolic(f), IdentityKind::rigid, cat.domain_equations(f), cat.domain_inequations(f));
    CHECK_MESSAGE(r.verdict == Verdict::no, name);
  }
  const Family& t07 = cat.get("T07");
  auto r = decide_parametric(*cat.symbolic(t07), IdentityKind::conservative, cat.domain_equations(t07),
                             cat.domain_inequations(t07));
  CHECK(r.verdict == Verdict::yes);
}

TEST_CASE("terminal conditions vanish identically on the parametric terminal rows") {
  Catalog cat = catalog();
  for (const char* name : {"T07", "T08", "T10"})
    for (const auto& p : terminal_conditions(*cat.symbolic(cat.get(name)))) CHECK(p.is_zero());
  bool b1_terminal = true;
  for (const auto& p : terminal_conditions(*cat.symbolic(cat.get("B1")))) b1_terminal = b1_terminal && p.is_zero();
  CHECK_FALSE(b1_terminal);
}

TEST_CASE("displayed witnesses satisfy the identity") {
  Catalog cat = catalog();
  auto displays = load_witness_displays(std::string(ALGVAR_DEFAULT_DATA_DIR) + "/witnesses.json");
  std::set<std::string> covered;
  for (const auto& d : displays)
    for (const auto& row : d.rows) {
      covered.insert(row);
      bool conservative = row[0] == 'C';
      for (const auto& a : display_samples(cat, d, row, 8, 4)) {
        auto [f, phi] = display_at(d, a, conservative);
        CHECK_MESSAGE(witness_satisfies(cat.instantiate(row, a), f, phi), d.id << " on " << row);
      }
    }
  for (int t : {2, 3})
    for (const Family* f : cat.table(t)) CHECK_MESSAGE(covered.count(f->name), f->name);
}

TEST_CASE("the printed D1(1,1) display fails the rigid identity") {
  Catalog cat = catalog();
  auto displays = load_witness_displays(std::string(ALGVAR_DEFAULT_DATA_DIR) + "/witnesses.json");
  for (const auto& d : displays) {
    if (!d.as_printed) continue;
    CHECK(d.id == "D1(1,1)");
    StructureTensor r10 = cat.instantiate("R10");
    bool any_fail = false;
    for (const auto& a : display_samples(cat, d, "R10", 1, 1)) {
      auto [f, phi] = display_at(d, a, false, true);
      // Free phi12 makes the F(e1, e2) entry wrong unless phi11 = phi12.
      any_fail = any_fail || !witness_satisfies(r10, f, phi);
    }
    CHECK(any_fail);
  }
}
