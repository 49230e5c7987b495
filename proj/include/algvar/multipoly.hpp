#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "algvar/rational.hpp"

namespace algvar {

using Exponents = std::vector<int>;
using Assignment = std::map<std::string, Rational>;

/// Graded lexicographic order, larger monomials first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over the rationals.
///
/// The variable context is the sorted list of names that actually occur, so
/// two polynomials are equal exactly when their representations are equal.
/// Binary operations merge contexts by name.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(const Rational& c);

  static MultiPoly variable(const std::string& name);
  static MultiPoly monomial(const std::string& name, int exponent, const Rational& coeff = 1);

  const std::vector<std::string>& variables() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  /// Constant term; for a constant polynomial this is its value.
  Rational constant_term() const;
  bool contains(const std::string& var) const;

  int total_degree() const;
  int degree(const std::string& var) const;
  Rational leading_coefficient() const;

  /// Coefficients with respect to one variable: p = sum_k c_k var^k.
  std::map<int, MultiPoly> coefficients_in(const std::string& var) const;

  Rational eval(const Assignment& values) const;
  MultiPoly partial_eval(const Assignment& values) const;
  MultiPoly substitute(const std::map<std::string, MultiPoly>& values) const;

  /// Gcd of numerators over lcm of denominators, signed like the leading
  /// coefficient; p / content(p) has integer coprime coefficients and a
  /// positive leading coefficient.
  Rational content() const;
  MultiPoly primitive() const;

  /// Quotient when b divides *this exactly, otherwise nullopt.
  std::optional<MultiPoly> divide_exact(const MultiPoly& b) const;

  /// Terms re-expressed over a superset of the current variables.
  TermMap terms_over(const std::vector<std::string>& vars) const;
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  std::string to_string() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator-(const MultiPoly& a);

  MultiPoly pow(int exponent) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  friend std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.to_string();
  }

 private:
  void add_scaled(const MultiPoly& o, const Rational& scale);
  void prune();

  std::vector<std::string> vars_;
  TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

}  // namespace algvar
