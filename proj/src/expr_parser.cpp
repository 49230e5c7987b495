#include "algvar/expr_parser.hpp"

#include <cctype>

#include "algvar/errors.hpp"

namespace algvar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::string& laurent_var, const Substitution& subst)
      : text_(text), laurent_var_(laurent_var), subst_(subst) {}

  LaurentPoly parse() {
    LaurentPoly v = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly v = term();
    for (;;) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  LaurentPoly term() {
    LaurentPoly v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        LaurentPoly d = unary();
        v *= invert(d);
      } else {
        return v;
      }
    }
  }

  LaurentPoly invert(const LaurentPoly& d) {
    if (d.is_zero()) fail("division by zero");
    if (!d.is_monomial() || !d.terms().begin()->second.is_constant())
      fail("division by non-constant " + d.to_string(laurent_var_.empty() ? "t" : laurent_var_));
    const auto& [k, c] = *d.terms().begin();
    if (k != 0 && laurent_var_.empty()) fail("division by a polynomial");
    return LaurentPoly::monomial(-k, MultiPoly(c.constant_term().inverse()));
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    bool paren = accept('(');
    bool negative = accept('-');
    int e = integer();
    if (paren && !accept(')')) fail("expected ')'");
    return raise(base, negative ? -e : e);
  }

  LaurentPoly raise(const LaurentPoly& base, int e) {
    if (e >= 0) return base.pow(e);
    if (laurent_var_.empty()) fail("negative exponent");
    return invert(base).pow(-e);
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  LaurentPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly(Rational::parse(text_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (!laurent_var_.empty() && name == laurent_var_) return LaurentPoly::monomial(1);
      auto it = subst_.find(name);
      if (it != subst_.end()) return LaurentPoly(it->second);
      return LaurentPoly(MultiPoly::variable(name));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::string& laurent_var_;
  const Substitution& subst_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const Substitution& subst) {
  static const std::string none;
  LaurentPoly v = Parser(text, none, subst).parse();
  return v.coefficient(0);
}

LaurentPoly parse_laurent(std::string_view text, const std::string& var, const Substitution& subst) {
  return Parser(text, var, subst).parse();
}

Rational eval_expr(std::string_view text, const Assignment& values) {
  Substitution subst;
  for (const auto& [k, v] : values) subst.emplace(k, MultiPoly(v));
  MultiPoly p = parse_poly(text, subst);
  if (!p.is_constant()) throw MissingVariable(p.variables().front());
  return p.constant_term();
}

}  // namespace algvar
