#include "doctest.h"

#include "algvar/algebra_ops.hpp"
#include "algvar/catalog.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/groebner.hpp"
#include "algvar/sampling.hpp"

using namespace algvar;

namespace {

std::vector<MultiPoly> polys(std::initializer_list<const char*> texts) {
  std::vector<MultiPoly> out;
  for (const char* t : texts) out.push_back(parse_poly(t));
  return out;
}

bool witness_holds(const StructureTensor& a, const StructureTensor& b, const RationalMatrix& w) {
  LinearMap g = to_poly(w);
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (g.apply(a.basis_product(i, j)) != b.apply(g.column(i), g.column(j))) return false;
  return true;
}

}  // namespace

TEST_CASE("Groebner basis of a small ideal") {
  Ideal ideal(polys({"x^2 - y", "x*y - 1"}), {"x", "y"});
  GroebnerResult r = buchberger(ideal);
  REQUIRE(r.status == GroebnerStatus::complete);
  CHECK(r.basis.satisfies_buchberger_criterion());
  CHECK(r.basis.contains(parse_poly("y^3 - 1")));
  CHECK(r.basis.contains(parse_poly("x - y^2")));
  CHECK_FALSE(r.basis.contains(parse_poly("y - 1")));
  CHECK_FALSE(r.basis.is_unit());
}

TEST_CASE("inconsistent systems give the unit ideal") {
  GroebnerResult r = buchberger(Ideal(polys({"x*y - 1", "x"}), {"x", "y"}));
  REQUIRE(r.status == GroebnerStatus::complete);
  CHECK(r.basis.is_unit());
}

TEST_CASE("generators reduce to zero modulo their own basis") {
  Rng rng(13);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<MultiPoly> gens;
    for (int g = 0; g < 3; ++g) {
      MultiPoly p;
      for (int t = 0; t < 3; ++t)
        p += MultiPoly(rng.rational()) * MultiPoly::monomial("x", static_cast<int>(rng.integer(0, 2))) *
             MultiPoly::monomial("y", static_cast<int>(rng.integer(0, 2))) *
             MultiPoly::monomial("z", static_cast<int>(rng.integer(0, 1)));
      gens.push_back(p);
    }
    GroebnerResult r = buchberger(Ideal(gens, {"x", "y", "z"}));
    if (r.status != GroebnerStatus::complete) continue;
    CHECK(r.basis.satisfies_buchberger_criterion());
    for (const auto& g : gens) CHECK(r.basis.contains(g));
    CHECK(r.basis.contains(gens[0] * gens[1] + parse_poly("x*y") * gens[2]));
  }
}

TEST_CASE("caps give resource_exhausted, never a wrong basis") {
  GroebnerOptions tiny{2, 3};
  GroebnerResult r = buchberger(Ideal(polys({"x^3 - y*z", "y^3 - x*z", "z^3 - x*y"}), {"x", "y", "z"}), tiny);
  CHECK(r.status == GroebnerStatus::resource_exhausted);
}

TEST_CASE("is_empty with saturation") {
  CHECK(is_empty(polys({"x*y"}), polys({"x", "y"})).verdict == Verdict::yes);
  auto r = is_empty(polys({"x^2 - 2"}), {});
  CHECK(r.verdict == Verdict::no);  // irrational zero: no rational point, basis not unit
  CHECK_FALSE(r.point);
  auto s = is_empty(polys({"x - 3", "x*y - 6"}), polys({"y"}));
  CHECK(s.verdict == Verdict::no);
  REQUIRE(s.point);
  CHECK(s.point->at("x") == Rational(3));
  CHECK(s.point->at("y") == Rational(2));
}

TEST_CASE("find_rational_point respects the nonvanishing set") {
  auto p = find_rational_point(polys({"x^2 - 4"}), polys({"x - 2"}), {"x"});
  REQUIRE(p);
  CHECK(p->at("x") == Rational(-2));
  CHECK_FALSE(find_rational_point(polys({"x^2 - 4"}), polys({"x^2 - 4*x + 4", "x + 2"}), {"x"}));
}

TEST_CASE("isomorphism: catalog examples") {
  Catalog cat = Catalog::load(ALGVAR_DEFAULT_DATA_DIR);
  CHECK(are_isomorphic(cat.instantiate("T01"), cat.instantiate("T02")).verdict == Verdict::no);
  CHECK(are_isomorphic(cat.instantiate("T04"), cat.instantiate("T05")).verdict == Verdict::no);
  CHECK(are_isomorphic(cat.instantiate("T06"), cat.instantiate("T03")).verdict == Verdict::no);
  StructureTensor t10a = cat.instantiate("T10", {{"alpha", Rational(1, 3)}});
  StructureTensor t10b = cat.instantiate("T10", {{"alpha", Rational(2, 3)}});
  CHECK(are_isomorphic(t10a, t10b).verdict == Verdict::no);
}

TEST_CASE("isomorphism: random rebasing is detected with a witness") {
  Rng rng(31);
  Catalog cat = Catalog::load(ALGVAR_DEFAULT_DATA_DIR);
  for (const Family* f : cat.table(4)) {
    StructureTensor a = cat.instantiate(*f, cat.sample(*f, 1, 2).front());
    RationalMatrix g = rng.invertible_matrix(2);
    StructureTensor b = to_poly(change_basis(to_rational(a), g));
    IsomorphismResult r = are_isomorphic(a, b);
    CHECK_MESSAGE(r.verdict == Verdict::yes, f->name);
    if (r.witness) CHECK(witness_holds(a, b, *r.witness));
  }
}

TEST_CASE("isomorphism requires equal dimensions") {
  CHECK_THROWS_AS(are_isomorphic(zero_algebra(2), zero_algebra(3)), DimensionMismatch);
}
