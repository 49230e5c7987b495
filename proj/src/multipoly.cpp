#include "algvar/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "algvar/errors.hpp"

namespace algvar {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponents{}, c);
}

MultiPoly MultiPoly::variable(const std::string& name) { return monomial(name, 1); }

MultiPoly MultiPoly::monomial(const std::string& name, int exponent, const Rational& coeff) {
  if (exponent < 0) throw std::invalid_argument("negative exponent in polynomial");
  if (exponent == 0) return MultiPoly(coeff);
  MultiPoly p;
  if (coeff.is_zero()) return p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{exponent}, coeff);
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  MultiPoly p;
  if (std::is_sorted(vars.begin(), vars.end())) {
    p.vars_ = std::move(vars);
    for (auto& [e, c] : terms)
      if (!c.is_zero()) p.terms_.emplace(e, c);
  } else {
    // Canonical contexts are sorted; permute the exponent vectors.
    std::vector<std::size_t> order(vars.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vars[a] < vars[b]; });
    for (std::size_t i = 0; i < order.size(); ++i) p.vars_.push_back(vars[order[i]]);
    for (auto& [e, c] : terms) {
      if (c.is_zero()) continue;
      Exponents f(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) f[i] = e[order[i]];
      p.terms_[f] += c;
    }
  }
  p.prune();
  return p;
}

Rational MultiPoly::constant_term() const {
  Exponents zero(vars_.size(), 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::contains(const std::string& var) const {
  return std::binary_search(vars_.begin(), vars_.end(), var);
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

int MultiPoly::degree(const std::string& var) const {
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) return terms_.empty() ? -1 : 0;
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[idx]);
  return d;
}

Rational MultiPoly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

MultiPoly::TermMap MultiPoly::terms_over(const std::vector<std::string>& vars) const {
  if (vars == vars_) return terms_;
  std::vector<std::size_t> position(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::lower_bound(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end() || *it != vars_[i])
      throw std::invalid_argument("variable context is not a superset");
    position[i] = static_cast<std::size_t>(it - vars.begin());
  }
  TermMap out;
  for (const auto& [e, c] : terms_) {
    Exponents f(vars.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[position[i]] = e[i];
    out.emplace(std::move(f), c);
  }
  return out;
}

void MultiPoly::prune() {
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents f;
    f.reserve(vars.size());
    for (std::size_t i = 0; i < e.size(); ++i)
      if (used[i]) f.push_back(e[i]);
    terms.emplace(std::move(f), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

void MultiPoly::add_scaled(const MultiPoly& o, const Rational& scale) {
  if (o.terms_.empty()) return;
  if (o.vars_ != vars_) {
    auto merged = merge_variables(vars_, o.vars_);
    if (merged != vars_) {
      terms_ = terms_over(merged);
      vars_ = merged;
    }
  }
  auto other = o.terms_over(vars_);
  bool removed = false;
  for (auto& [e, c] : other) {
    auto it = terms_.find(e);
    Rational v = c * scale;
    if (it == terms_.end()) {
      terms_.emplace(e, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) {
        terms_.erase(it);
        removed = true;
      }
    }
  }
  if (removed) prune();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, Rational(1));
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, Rational(-1));
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    *this = MultiPoly();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  auto vars = merge_variables(a.vars_, b.vars_);
  auto ta = a.terms_over(vars);
  auto tb = b.terms_over(vars);
  MultiPoly::TermMap out;
  for (const auto& [ea, ca] : ta) {
    for (const auto& [eb, cb] : tb) {
      Exponents e(vars.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto [it, inserted] = out.emplace(std::move(e), c);
      if (!inserted) it->second += c;
    }
  }
  return MultiPoly::from_terms(std::move(vars), std::move(out));
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r = a;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative power of polynomial");
  MultiPoly result(Rational(1));
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::map<int, MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  std::map<int, MultiPoly> out;
  auto it = std::lower_bound(vars_.begin(), vars_.end(), var);
  if (it == vars_.end() || *it != var) {
    if (!is_zero()) out.emplace(0, *this);
    return out;
  }
  auto idx = static_cast<std::size_t>(it - vars_.begin());
  std::map<int, TermMap> buckets;
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    int k = f[idx];
    f[idx] = 0;
    buckets[k].emplace(std::move(f), c);
  }
  for (auto& [k, terms] : buckets) out.emplace(k, from_terms(vars_, std::move(terms)));
  return out;
}

Rational MultiPoly::eval(const Assignment& values) const {
  std::vector<Rational> point;
  point.reserve(vars_.size());
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) throw MissingVariable(v);
    point.push_back(it->second);
  }
  Rational sum;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= point[i].pow(e[i]);
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::partial_eval(const Assignment& values) const {
  std::map<std::string, MultiPoly> subst;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it != values.end()) subst.emplace(v, MultiPoly(it->second));
  }
  if (subst.empty()) return *this;
  return substitute(subst);
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& values) const {
  bool touches = false;
  for (const auto& v : vars_)
    if (values.count(v)) touches = true;
  if (!touches) return *this;
  std::vector<std::map<int, MultiPoly>> power_cache(vars_.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = power_cache[i];
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    MultiPoly base = values.count(vars_[i]) ? values.at(vars_[i]) : MultiPoly::variable(vars_[i]);
    return cache.emplace(k, base.pow(k)).first->second;
  };
  MultiPoly sum;
  for (const auto& [e, c] : terms_) {
    MultiPoly t(c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0) t *= power(i, e[i]);
    sum += t;
  }
  return sum;
}

Rational MultiPoly::content() const {
  if (terms_.empty()) return Rational(0);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.raw().get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  Rational r(g, l);
  return leading_coefficient().sign() < 0 ? -r : r;
}

MultiPoly MultiPoly::primitive() const {
  if (terms_.empty()) return *this;
  return *this * content().inverse();
}

std::optional<MultiPoly> MultiPoly::divide_exact(const MultiPoly& b) const {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (is_zero()) return MultiPoly();
  if (b.is_constant()) return *this * b.constant_term().inverse();
  MultiPoly rest = *this;
  MultiPoly quotient;
  while (!rest.is_zero()) {
    auto vars = merge_variables(rest.vars_, b.vars_);
    auto rt = rest.terms_over(vars);
    auto bt = b.terms_over(vars);
    const auto& [rlead, rcoef] = *rt.begin();
    const auto& [blead, bcoef] = *bt.begin();
    Exponents q(vars.size());
    for (std::size_t i = 0; i < q.size(); ++i) {
      q[i] = rlead[i] - blead[i];
      if (q[i] < 0) return std::nullopt;
    }
    TermMap single;
    single.emplace(std::move(q), rcoef / bcoef);
    MultiPoly m = from_terms(std::move(vars), std::move(single));
    quotient += m;
    rest -= m * b;
  }
  return quotient;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = c.abs();
    bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (constant || !mag.is_one()) {
      os << mag.to_string();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << "*";
      os << vars_[i];
      if (e[i] != 1) os << "^" << e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace algvar
