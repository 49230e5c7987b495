#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "algvar/multipoly.hpp"
#include "algvar/tensor.hpp"

namespace algvar {

namespace gb {

inline constexpr int kMaxVars = 24;

struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  int deg = 0;
};

struct Term {
  Monomial m;
  mpq_class c;
};

/// Terms sorted by decreasing grevlex order.
using Poly = std::vector<Term>;

}  // namespace gb

struct GroebnerOptions {
  int degree_cap = 20;
  long pair_cap = 50000;
};

/// Polynomial ideal over Q with a fixed graded-reverse-lexicographic order.
/// Variables listed first are largest.
class Ideal {
 public:
  Ideal(std::vector<MultiPoly> generators, std::vector<std::string> variable_order = {});
  const std::vector<MultiPoly>& generators() const { return generators_; }
  const std::vector<std::string>& variables() const { return variables_; }

 private:
  std::vector<MultiPoly> generators_;
  std::vector<std::string> variables_;
};

class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::vector<std::string> variables, std::vector<gb::Poly> polys);

  const std::vector<std::string>& variables() const { return variables_; }
  std::vector<MultiPoly> polys() const;
  std::size_t size() const { return polys_.size(); }
  bool is_unit() const;

  /// Normal form with respect to the basis. Variables of p outside the
  /// basis ring are appended to it (they behave as extra, smallest variables).
  MultiPoly reduce(const MultiPoly& p) const;
  bool contains(const MultiPoly& p) const { return reduce(p).is_zero(); }

  /// Post-hoc Buchberger criterion: every S-polynomial reduces to zero.
  bool satisfies_buchberger_criterion() const;

  std::vector<std::string> dump() const;

 private:
  std::vector<std::string> variables_;
  std::vector<gb::Poly> polys_;
};

enum class GroebnerStatus { complete, resource_exhausted };

struct GroebnerResult {
  GroebnerStatus status = GroebnerStatus::complete;
  GroebnerBasis basis;  // meaningful only when complete
  long pairs_processed = 0;
  int max_degree = 0;
};

/// Buchberger's algorithm with the Gebauer-Moeller pair criteria and the
/// normal selection strategy. Never returns a wrong basis: hitting either
/// cap yields resource_exhausted.
GroebnerResult buchberger(const Ideal& ideal, const GroebnerOptions& options = {});

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct EmptinessResult {
  /// yes: no common zero over the algebraic closure (1 is in the ideal).
  /// no: a zero exists (rational point found, or the basis is not unit).
  Verdict verdict = Verdict::unknown;
  std::optional<Assignment> point;
  GroebnerResult groebner;
};

/// Decides whether {system = 0, nonvanishing != 0} is empty over the
/// algebraic closure, saturating by the nonvanishing polynomials with a
/// Rabinowitsch variable placed last in the order.
EmptinessResult is_empty(const std::vector<MultiPoly>& system, const std::vector<MultiPoly>& nonvanishing,
                         const GroebnerOptions& options = {},
                         const std::vector<std::string>& variable_order = {},
                         bool search_point = true);

struct PointSearchOptions {
  int max_height = 12;
  long node_budget = 200000;
};

/// Bounded-height backtracking search for a rational zero of `system` at
/// which every polynomial of `nonvanishing` is nonzero.
std::optional<Assignment> find_rational_point(const std::vector<MultiPoly>& system,
                                              const std::vector<MultiPoly>& nonvanishing,
                                              const std::vector<std::string>& variables,
                                              const PointSearchOptions& options = {});

struct IsomorphismResult {
  Verdict verdict = Verdict::unknown;
  std::optional<RationalMatrix> witness;  // g with g(A(x,y)) = B(gx, gy)
  std::string reason;
};

IsomorphismResult are_isomorphic(const StructureTensor& a, const StructureTensor& b,
                                 const GroebnerOptions& options = {});

/// Entry names of a generic n x n matrix: g11, g12, ... (row, column).
std::string matrix_entry_name(const std::string& prefix, int row, int col);
LinearMap generic_matrix(int n, const std::string& prefix = "g");

}  // namespace algvar
