#include "algvar/laurent.hpp"

#include <sstream>

#include "algvar/errors.hpp"

namespace algvar {

LaurentPoly::LaurentPoly(const MultiPoly& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

LaurentPoly LaurentPoly::monomial(int k, const MultiPoly& coeff) {
  LaurentPoly p;
  if (!coeff.is_zero()) p.terms_.emplace(k, coeff);
  return p;
}

int LaurentPoly::order() const {
  if (terms_.empty()) throw Error("order of the zero Laurent polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw Error("degree of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

MultiPoly LaurentPoly::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? MultiPoly() : it->second;
}

MultiPoly LaurentPoly::eval_at_zero() const {
  if (terms_.empty()) return MultiPoly();
  if (order() < 0)
    throw PoleAtZero("pole of order " + std::to_string(-order()) + " at t = 0 in " + to_string());
  return coefficient(0);
}

LaurentPoly LaurentPoly::map_coefficients(const std::function<MultiPoly(const MultiPoly&)>& f) const {
  LaurentPoly out;
  for (const auto& [k, c] : terms_) {
    MultiPoly v = f(c);
    if (!v.is_zero()) out.terms_.emplace(k, std::move(v));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [k, c] : o.terms_) {
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) out += LaurentPoly::monomial(ka + kb, ca * cb);
  return out;
}

LaurentPoly operator-(const LaurentPoly& a) {
  LaurentPoly out = a;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::pow(int exponent) const {
  if (exponent < 0) {
    if (!is_monomial()) throw Error("negative power of a non-monomial Laurent polynomial");
    const auto& [k, c] = *terms_.begin();
    if (!c.is_constant()) throw Error("negative power with non-constant coefficient");
    return monomial(k * exponent, MultiPoly(c.constant_term().pow(exponent)));
  }
  LaurentPoly result(Rational(1));
  LaurentPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::string coeff = c.to_string();
    if (k == 0) {
      os << coeff;
      continue;
    }
    if (coeff != "1") os << (c.term_count() > 1 ? "(" + coeff + ")" : coeff) << "*";
    os << var;
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

LaurentPoly substitute_laurent(const MultiPoly& p, const std::map<std::string, LaurentPoly>& values) {
  const auto& vars = p.variables();
  LaurentPoly sum;
  for (const auto& [e, c] : p.terms()) {
    LaurentPoly term{MultiPoly(c)};
    MultiPoly kept(Rational(1));
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto it = values.find(vars[i]);
      if (it != values.end())
        term *= it->second.pow(e[i]);
      else
        kept *= MultiPoly::monomial(vars[i], e[i]);
    }
    sum += term * LaurentPoly(kept);
  }
  return sum;
}

}  // namespace algvar
