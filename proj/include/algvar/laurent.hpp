#pragma once

#include <functional>
#include <map>
#include <ostream>
#include <string>

#include "algvar/multipoly.hpp"

namespace algvar {

/// Laurent polynomial in the deformation variable t with MultiPoly
/// coefficients, so parametric families deform without special casing.
class LaurentPoly {
 public:
  using TermMap = std::map<int, MultiPoly>;

  LaurentPoly() = default;
  explicit LaurentPoly(const Rational& c) : LaurentPoly(MultiPoly(c)) {}
  explicit LaurentPoly(const MultiPoly& c);

  /// coeff * t^k
  static LaurentPoly monomial(int k, const MultiPoly& coeff = MultiPoly(Rational(1)));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Single term c * t^k.
  bool is_monomial() const { return terms_.size() == 1; }

  /// Minimal exponent carrying a nonzero coefficient; throws on zero.
  int order() const;
  int max_exponent() const;
  MultiPoly coefficient(int k) const;

  /// Constant-in-t part; throws PoleAtZero when order() < 0.
  MultiPoly eval_at_zero() const;

  LaurentPoly map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const;

  std::string to_string(const std::string& var = "t") const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a);

  LaurentPoly pow(int exponent) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

 private:
  TermMap terms_;
};

inline bool is_zero(const LaurentPoly& p) { return p.is_zero(); }

/// Replaces the given variables of p by Laurent polynomials (e.g. a
/// parametrized index alpha = 1 + t^-1).
LaurentPoly substitute_laurent(const MultiPoly& p, const std::map<std::string, LaurentPoly>& values);

}  // namespace algvar
