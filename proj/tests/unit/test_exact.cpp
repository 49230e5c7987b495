#include "doctest.h"

#include <stdexcept>

#include "algvar/algebra_ops.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/laurent.hpp"
#include "algvar/linalg.hpp"
#include "algvar/multipoly.hpp"
#include "algvar/rational.hpp"
#include "algvar/sampling.hpp"

using namespace algvar;

namespace {

MultiPoly random_poly(Rng& rng) {
  const char* vars[] = {"a", "b", "c"};
  MultiPoly p;
  int terms = static_cast<int>(rng.integer(0, 4));
  for (int i = 0; i < terms; ++i) {
    MultiPoly m(rng.rational());
    for (const char* v : vars) m *= MultiPoly::monomial(v, static_cast<int>(rng.integer(0, 2)));
    p += m;
  }
  return p;
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational(2, 3).inverse() == Rational(3, 2));
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(Rational(1, 2).pow(-2) == Rational(4));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1 / 2"), ParseError);
}

TEST_CASE("rational arithmetic does not overflow") {
  Rational x(1);
  for (int i = 0; i < 40; ++i) x *= Rational(1000000007, 3);
  CHECK(x.numerator().get_str().size() > 300);
  for (int i = 0; i < 40; ++i) x /= Rational(1000000007, 3);
  CHECK(x == Rational(1));
}

TEST_CASE("polynomial ring axioms on random samples") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p + q == q + p);
    CHECK(p * q == q * p);
    CHECK((p + q) + r == p + (q + r));
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
    Assignment at{{"a", rng.rational()}, {"b", rng.rational()}, {"c", rng.rational()}};
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p + q).eval(at) == p.eval(at) + q.eval(at));
  }
}

TEST_CASE("polynomial normal form is canonical") {
  MultiPoly a = parse_poly("x*y - y*x");
  CHECK(a.is_zero());
  CHECK(a.variables().empty());
  MultiPoly b = parse_poly("(x + 1)^2 - x^2 - 2*x");
  CHECK(b == MultiPoly(Rational(1)));
  CHECK(parse_poly("2*b*a") == parse_poly("a*b*2"));
  CHECK(parse_poly("3/2*a^2*b - 1").to_string() == parse_poly(parse_poly("3/2*a^2*b - 1").to_string()).to_string());
}

TEST_CASE("exact division and content") {
  MultiPoly p = parse_poly("x^2 - y^2");
  auto q = p.divide_exact(parse_poly("x - y"));
  REQUIRE(q);
  CHECK(*q == parse_poly("x + y"));
  CHECK_FALSE(parse_poly("x^2 + 1").divide_exact(parse_poly("x - 1")));
  CHECK(parse_poly("4/3*x + 2/3").primitive() == parse_poly("2*x + 1"));
}

TEST_CASE("parser substitutions and errors") {
  Substitution s{{"gamma", MultiPoly(Rational(2))}};
  CHECK(parse_poly("beta/gamma", s) == parse_poly("1/2*beta"));
  CHECK_THROWS_AS(parse_poly("beta/gamma"), ParseError);
  CHECK_THROWS_AS(parse_poly("1 +"), ParseError);
  CHECK_THROWS_AS(parse_poly("x^-1"), ParseError);
  CHECK(eval_expr("(1 - alpha)/alpha", {{"alpha", Rational(1, 3)}}) == Rational(2));
  CHECK_THROWS_AS(eval_expr("alpha + 1", {}), MissingVariable);
}

TEST_CASE("Laurent polynomials") {
  LaurentPoly p = parse_laurent("t^-1 + alpha*t^2");
  CHECK(p.order() == -1);
  CHECK(p.max_exponent() == 2);
  CHECK(p.coefficient(2) == MultiPoly::variable("alpha"));
  CHECK_THROWS_AS(p.eval_at_zero(), PoleAtZero);
  LaurentPoly q = parse_laurent("t^2 + t");
  CHECK((q * parse_laurent("t^-1")).eval_at_zero() == MultiPoly(Rational(1)));
  CHECK(parse_laurent("(t^2 + t)/t") == parse_laurent("t + 1"));
  LaurentPoly sub = substitute_laurent(parse_poly("alpha^2"), {{"alpha", parse_laurent("1 + t^-1")}});
  CHECK(sub == parse_laurent("t^-2 + 2*t^-1 + 1"));
}

TEST_CASE("rref, rank and nullspace") {
  RationalRows m = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m, 3) == 2);
  RationalRows ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  for (const auto& row : m) {
    Rational dot;
    for (int j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot.is_zero());
  }
  auto sol = solve_affine(m, {6, 12, 2}, 3);
  REQUIRE(sol);
  CHECK(sol->directions.size() == 1);
  CHECK_FALSE(solve_affine(m, {6, 13, 2}, 3));
}

TEST_CASE("nullspace property on random matrices") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = static_cast<int>(rng.integer(1, 5)), cols = static_cast<int>(rng.integer(1, 6));
    RationalRows m(rows, std::vector<Rational>(cols));
    for (auto& r : m)
      for (auto& x : r) x = rng.chance(40) ? Rational(0) : rng.rational();
    RationalRows ns = nullspace(m, cols);
    CHECK(rank(m, cols) + static_cast<int>(ns.size()) == cols);
    for (const auto& v : ns)
      for (const auto& r : m) {
        Rational dot;
        for (int j = 0; j < cols; ++j) dot += r[j] * v[j];
        CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("sampling is deterministic per seed") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 20; ++i) {
    Rational x = a.rational();
    CHECK(x == b.rational());
    differs = differs || x != c.rational();
  }
  CHECK(differs);
  Rng d(1);
  RationalMatrix g = d.invertible_matrix(3);
  CHECK_FALSE(determinant(g).is_zero());
  RationalMatrix l = d.lower_triangular(2);
  CHECK(l(0, 1).is_zero());
  CHECK_FALSE(determinant(l).is_zero());
}
