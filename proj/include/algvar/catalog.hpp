#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/tensor.hpp"

namespace algvar {

struct ParamConstraint {
  enum class Kind { equation, inequation };
  Kind kind = Kind::inequation;
  std::string poly;  // polynomial string in the family parameters
  std::string describe() const;
};

/// Reference to a catalog row with arguments given as expressions in the
/// referring row's parameters, e.g. {"D2", {alpha: "alpha", beta: "0"}}.
struct FamilyRef {
  std::string family;
  std::map<std::string, std::string> args;
};

struct Family {
  std::string name;
  int table = 1;
  int dim = 2;
  std::vector<std::string> params;
  std::vector<std::vector<std::vector<std::string>>> constants;
  std::vector<ParamConstraint> constraints;
  std::optional<FamilyRef> origin;
  std::vector<FamilyRef> aliases;

  bool is_point() const { return params.empty(); }
};

struct GammaValues {
  Rational d;
  std::pair<Rational, Rational> c1, c2, c3;
};

/// D, C1, C2, C3 of a quadruple; throws when D = 0 (C3 undefined).
GammaValues gamma_functions(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

class Catalog {
 public:
  /// Loads table1.json ... table4.json from `dir`.
  static Catalog load(const std::string& dir);
  static Catalog from_json(const std::vector<nlohmann::json>& tables);

  bool has(const std::string& name) const { return families_.count(name) != 0; }
  const Family& get(const std::string& name) const;
  std::vector<const Family*> table(int t) const;
  std::vector<const Family*> all() const;

  /// Numeric instance; checks the row constraints and, when the row names an
  /// origin, instantiates the origin as well (so its constraints hold too).
  StructureTensor instantiate(const Family& f, const Assignment& values) const;
  StructureTensor instantiate(const std::string& name, const Assignment& values = {}) const;

  /// Tensor with parameters as symbols; nullopt when an entry divides by a parameter.
  std::optional<StructureTensor> symbolic(const Family& f) const;

  std::vector<MultiPoly> domain_equations(const Family& f) const;
  std::vector<MultiPoly> domain_inequations(const Family& f) const;
  /// First violated constraint, if any.
  std::optional<std::string> violated(const Family& f, const Assignment& values) const;

  /// Seeded points satisfying every constraint (and the origin's).
  std::vector<Assignment> sample(const Family& f, int count, std::uint64_t seed) const;

  /// Values of the referenced row's parameters.
  static Assignment resolve(const FamilyRef& ref, const Assignment& values);
  /// Symbolic version: arguments as polynomials in the referring parameters.
  static Substitution resolve_symbolic(const FamilyRef& ref);

 private:
  std::map<std::string, Family> families_;
  std::vector<std::string> order_;
};

Family family_from_json(const nlohmann::json& j, int table);

enum class ConjectureKind { direct_sum, nu };

/// n-dimensional analogues: sum of n copies of k e (e^2 = e), and nu_n(alpha)
/// with basis e, n_1..n_{n-1}: e^2 = e, e n_i = alpha n_i, n_i e = (1 - alpha) n_i.
StructureTensor conjecture_family(ConjectureKind kind, int n, std::optional<Rational> alpha = std::nullopt);

}  // namespace algvar
