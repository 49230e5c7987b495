#include "doctest.h"

#include "algvar/algebra_ops.hpp"
#include "algvar/catalog.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/separating.hpp"

using namespace algvar;

namespace {

const std::string kData = ALGVAR_DEFAULT_DATA_DIR;

SeparatingOptions quick() {
  SeparatingOptions o;
  o.samples = 20;
  o.borel_per_sample = 2;
  o.target_samples = 3;
  return o;
}

}  // namespace

TEST_CASE("constant symbols are one-based") {
  CHECK(constant_symbol(0, 1, 0) == "c121");
  auto all = constant_symbols(2);
  CHECK(all.size() == 8);
  CHECK(all.front() == "c111");
  CHECK(all.back() == "c222");
}

TEST_CASE("all listed separating sets pass") {
  Catalog cat = Catalog::load(kData);
  auto t6 = load_separating_sets(kData + "/table6.json");
  auto t8 = load_separating_sets(kData + "/table8.json");
  CHECK(t6.size() == 7);
  CHECK(t8.size() == 3);
  for (const auto* rows : {&t6, &t8})
    for (const auto& s : *rows) {
      SeparatingReport r = verify_separating_set(cat, s, quick());
      CHECK_MESSAGE(r.passed(), s.id << ": " << r.counterexample);
      CHECK(r.membership);
      CHECK(r.stability_symbolic == Verdict::yes);
      CHECK(r.targets.size() == s.excluded.size());
    }
}

TEST_CASE("targets inside the closure are not separated") {
  Catalog cat = Catalog::load(kData);
  for (auto s : load_separating_sets(kData + "/table6.json")) {
    // Every terminal row degenerates to the zero algebra and lies in its own orbit.
    s.excluded = {{"k2", {}}, {s.source, {}}};
    SeparatingReport r = verify_separating_set(cat, s, quick());
    for (const auto& t : r.targets) CHECK_MESSAGE(t.symbolic == Verdict::no, s.id << " " << t.target);
    CHECK_FALSE(r.passed());
  }
}

TEST_CASE("degenerate condition sets fail") {
  Catalog cat = Catalog::load(kData);
  SeparatingSet none{"none", "T01", {}, {{"T06", {}}}};
  SeparatingReport r = verify_separating_set(cat, none, quick());
  CHECK_FALSE(r.emptiness());
  SeparatingSet shifted{"shifted", "T01", {"c111 - 1"}, {{"T06", {}}}};
  r = verify_separating_set(cat, shifted, quick());
  CHECK_FALSE(r.stability_sampled);
  CHECK(r.stability_symbolic != Verdict::yes);
  CHECK_FALSE(r.passed());
  SeparatingSet outside{"outside", "T01", {"c111"}, {{"T06", {}}}};
  r = verify_separating_set(cat, outside, quick());
  CHECK_FALSE(r.membership);
  CHECK_FALSE(r.counterexample.empty());
}

TEST_CASE("transformed condition") {
  StructureTensor t(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) t(i, j, k) = MultiPoly::variable(constant_symbol(i, j, k));
  MultiPoly p = parse_poly("c111*c222 - c121");
  CHECK(transformed_condition(p, t, MultiPoly(Rational(1))) == p);
  // Scaling the numerators by det leaves the homogeneous part fixed up to det^deg.
  MultiPoly det = parse_poly("d");
  StructureTensor scaled = map_entries<MultiPoly>(t, [&](const MultiPoly& x) { return x * det; });
  CHECK(transformed_condition(parse_poly("c111*c222"), scaled, det) == parse_poly("c111*c222*d^2"));
}

TEST_CASE("condition points satisfy the conditions") {
  std::vector<MultiPoly> conds = {parse_poly("c221"), parse_poly("c122 - c111"),
                                  parse_poly("c111*(c122 + c212) - c112*c211")};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto pt = sample_condition_point(conds, constant_symbols(2), seed);
    if (!pt) continue;
    for (const auto& c : conds) CHECK(c.eval(*pt).is_zero());
  }
}

TEST_CASE("separating set JSON") {
  auto s = separating_from_json(nlohmann::json::parse(
      R"({"id": "x", "source": "T09", "conditions": ["c221"], "excluded": ["T04", {"family": "T07", "exclusions": ["alpha"]}]})"));
  CHECK(s.excluded.size() == 2);
  CHECK(s.excluded[1].label() == "T07 (alpha != 0)");
  CHECK_THROWS(separating_from_json(nlohmann::json::parse(R"({"id": "x"})")));
}
