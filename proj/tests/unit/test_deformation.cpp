#include "doctest.h"

#include "algvar/algebra_ops.hpp"
#include "algvar/catalog.hpp"
#include "algvar/deformation.hpp"
#include "algvar/expr_parser.hpp"
#include "oracle.hpp"

using namespace algvar;

namespace {

const std::string kData = ALGVAR_DEFAULT_DATA_DIR;

Catalog catalog() { return Catalog::load(kData); }

DegenerationWitness find(const std::string& file, const std::string& id) {
  for (auto& w : load_witnesses(kData + "/" + file))
    if (w.id == id) return w;
  FAIL("no witness " << id);
  return {};
}

Rational at_t(const LaurentPoly& p, const Rational& t) {
  Rational s;
  for (const auto& [k, c] : p.terms()) s += c.eval({}) * t.pow(k);
  return s;
}

DegenerationWitness make(const std::string& source, const std::string& target, std::vector<std::string> basis,
                         std::map<std::string, std::string> args = {}) {
  nlohmann::json j = {{"id", source + "->" + target},
                      {"source", source},
                      {"target", {{"family", target}, {"args", args}}},
                      {"basis", nlohmann::json::array({nlohmann::json::array({basis[0], basis[1]}),
                                                    nlohmann::json::array({basis[2], basis[3]})})}};
  return witness_from_json(j);
}

}  // namespace

TEST_CASE("T01 -> T03 structure constants in the listed basis match the oracle") {
  Catalog cat = catalog();
  DegenerationWitness w = find("table5.json", "T01->T03");
  StructureTensor src = cat.instantiate("T01");
  LaurentTensor lt = map_entries<LaurentPoly>(src, [](const MultiPoly& p) { return LaurentPoly(p); });
  auto [num, det] = change_basis_fraction(lt, w.basis);
  for (Rational t : {Rational(1, 2), Rational(-3), Rational(2, 7), Rational(5)}) {
    RationalMatrix g(2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) g(r, c) = at_t(w.basis(r, c), t);
    RationalTensor ref = oracle::rebase(to_rational(src), g);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) CHECK(at_t(num(i, j, k), t) / at_t(det, t) == ref(i, j, k));
  }
  // E1 = t e1, E2 = t^2 e2: E1E1 = t E1 + E2, E1E2 = t E2, others zero.
  DegenerationCheck c = verify_degeneration(cat, w);
  REQUIRE(c.verified);
  CHECK(c.det_order == 3);
  CHECK(c.limit.entries() == cat.instantiate("T03").entries());
}

TEST_CASE("every listed degeneration verifies with the target as limit") {
  Catalog cat = catalog();
  for (const char* file : {"table5.json", "table7.json", "limits.json"}) {
    auto ws = load_witnesses(kData + "/" + file);
    CHECK_FALSE(ws.empty());
    for (const auto& w : ws) {
      DegenerationCheck c = verify_degeneration(cat, w);
      CHECK_MESSAGE(c.verified, w.id << ": " << c.reason);
      CHECK(c.limit.entries() == reference_tensor(cat, w.target).entries());
    }
  }
  CHECK(load_witnesses(kData + "/table5.json").size() == 10);
  CHECK(load_witnesses(kData + "/table7.json").size() == 5);
}

TEST_CASE("zero witnesses verify for every terminal row") {
  Catalog cat = catalog();
  for (const Family* f : cat.table(4)) CHECK(verify_degeneration(cat, zero_witness(f->name)).verified);
}

TEST_CASE("bad witnesses are rejected") {
  Catalog cat = catalog();
  // Wrong target.
  CHECK_FALSE(verify_degeneration(cat, make("T01", "T06", {"t", "0", "0", "t^2"})).verified);
  // Pole at t = 0: with E2 = t e2, E1E1 = E1 + t^-1 E2.
  DegenerationCheck pole = verify_degeneration(cat, make("T01", "T03", {"1", "0", "0", "t"}));
  CHECK_FALSE(pole.verified);
  CHECK_FALSE(pole.reason.empty());
  // Singular basis.
  CHECK_THROWS_AS(verify_degeneration(cat, make("T01", "T03", {"t", "t", "t", "t"})), Error);
  // det leading coefficient alpha vanishes at alpha = 0 inside the T07 domain.
  CHECK_FALSE(verify_degeneration(cat, make("T07", "T03", {"t", "0", "alpha*t^2", "alpha*t^2"})).verified);
}

TEST_CASE("witness JSON round trip") {
  DegenerationWitness w = find("table7.json", "T07(*)->T04");
  DegenerationWitness back = witness_from_json(witness_to_json(w));
  CHECK(back.id == w.id);
  CHECK(back.basis.entries() == w.basis.entries());
  CHECK(back.index == w.index);
  CHECK_FALSE(back.uniform());
  CHECK_THROWS(witness_from_json(nlohmann::json::parse(R"({"id": "x"})")));
}

TEST_CASE("composition of degenerations") {
  Catalog cat = catalog();
  DegenerationWitness a = find("table5.json", "T09->T07(0)");
  DegenerationWitness b = find("table5.json", "T07->T03");
  auto composite = compose_verified(cat, a, b);
  REQUIRE(composite);
  CHECK(composite->source == "T09");
  CHECK(composite->target.family == "T03");
  CHECK(verify_degeneration(cat, *composite).verified);
  CHECK_THROWS_AS(compose(b, find("table7.json", "T07(*)->T01"), 1), Error);
  CHECK(rescale(parse_laurent("t^-1 + 2*t^2"), 3) == parse_laurent("t^-3 + 2*t^6"));
}

TEST_CASE("necessary conditions for a degeneration") {
  Catalog cat = catalog();
  LemmaCheck ok = check_lemma_necessary(cat.instantiate("T09"), cat.instantiate("T03"));
  CHECK(ok.pass);
  CHECK(ok.der_a == 0);
  CHECK(ok.der_b == 2);
  LemmaCheck back = check_lemma_necessary(cat.instantiate("T03"), cat.instantiate("T09"));
  CHECK_FALSE(back.pass);
  CHECK(back.which.find("Der") != std::string::npos);
  LemmaCheck square = check_lemma_necessary(cat.instantiate("T03"), zero_algebra(2));
  CHECK(square.pass);
}

TEST_CASE("parameter-free degenerations satisfy the necessary conditions") {
  Catalog cat = catalog();
  for (const char* file : {"table5.json", "table7.json", "limits.json"})
    for (const auto& w : load_witnesses(kData + "/" + file)) {
      if (!w.uniform()) continue;
      DegenerationCheck c = verify_degeneration(cat, w);
      REQUIRE(c.verified);
      const Family& src = cat.get(w.source);
      Assignment at = src.is_point() ? Assignment{} : cat.sample(src, 1, 5).front();
      StructureTensor limit = evaluate(c.limit, at);
      CHECK_MESSAGE(check_lemma_necessary(cat.instantiate(src, at), limit).pass, w.id);
    }
}
