#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "algvar/errors.hpp"
#include "algvar/expr_parser.hpp"
#include "algvar/laurent.hpp"
#include "algvar/multipoly.hpp"
#include "algvar/rational.hpp"

namespace algvar {

template <class S>
using Vec = std::vector<S>;

/// Square matrix acting on coordinate vectors; column j is the image of e_j.
template <class S>
class BasicLinearMap {
 public:
  BasicLinearMap() = default;
  explicit BasicLinearMap(int n) : n_(n), m_(static_cast<std::size_t>(n * n)) {}

  static BasicLinearMap identity(int n) {
    BasicLinearMap g(n);
    for (int i = 0; i < n; ++i) g(i, i) = S(1);
    return g;
  }

  int dim() const { return n_; }
  S& operator()(int row, int col) { return m_[static_cast<std::size_t>(row * n_ + col)]; }
  const S& operator()(int row, int col) const { return m_[static_cast<std::size_t>(row * n_ + col)]; }

  Vec<S> apply(const Vec<S>& x) const {
    if (static_cast<int>(x.size()) != n_) throw DimensionMismatch("vector size does not match map");
    Vec<S> y(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r)
      for (int c = 0; c < n_; ++c)
        if (!is_zero(x[c]) && !is_zero((*this)(r, c))) y[r] += (*this)(r, c) * x[c];
    return y;
  }

  Vec<S> column(int c) const {
    Vec<S> v(static_cast<std::size_t>(n_));
    for (int r = 0; r < n_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  friend BasicLinearMap operator*(const BasicLinearMap& a, const BasicLinearMap& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("composing maps of different dimension");
    BasicLinearMap out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int j = 0; j < a.n_; ++j)
        for (int k = 0; k < a.n_; ++k)
          if (!is_zero(a(i, k)) && !is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
    return out;
  }

  friend bool operator==(const BasicLinearMap& a, const BasicLinearMap& b) {
    return a.n_ == b.n_ && a.m_ == b.m_;
  }

  const std::vector<S>& entries() const { return m_; }

 private:
  int n_ = 0;
  std::vector<S> m_;
};

/// Bilinear map V x V -> V stored as c(i, j, k) = coefficient of e_k in
/// B(e_i, e_j). Houses algebra products and the auxiliary multiplication F.
template <class S>
class BasicBilinearMap {
 public:
  BasicBilinearMap() = default;
  explicit BasicBilinearMap(int n) : n_(n), c_(static_cast<std::size_t>(n * n * n)) {}

  int dim() const { return n_; }
  S& operator()(int i, int j, int k) { return c_[index(i, j, k)]; }
  const S& operator()(int i, int j, int k) const { return c_[index(i, j, k)]; }

  Vec<S> apply(const Vec<S>& x, const Vec<S>& y) const {
    if (static_cast<int>(x.size()) != n_ || static_cast<int>(y.size()) != n_)
      throw DimensionMismatch("vector size does not match bilinear map");
    Vec<S> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (int j = 0; j < n_; ++j) {
        if (is_zero(y[j])) continue;
        S xy = x[i] * y[j];
        for (int k = 0; k < n_; ++k)
          if (!is_zero((*this)(i, j, k))) out[k] += xy * (*this)(i, j, k);
      }
    }
    return out;
  }

  /// Product of two basis vectors as a coordinate vector.
  Vec<S> basis_product(int i, int j) const {
    Vec<S> out(static_cast<std::size_t>(n_));
    for (int k = 0; k < n_; ++k) out[k] = (*this)(i, j, k);
    return out;
  }

  bool is_zero_map() const {
    for (const auto& v : c_)
      if (!is_zero(v)) return false;
    return true;
  }

  const std::vector<S>& entries() const { return c_; }

  friend bool operator==(const BasicBilinearMap& a, const BasicBilinearMap& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>((i * n_ + j) * n_ + k);
  }
  int n_ = 0;
  std::vector<S> c_;
};

/// Bilinear form V x V -> k, phi(i, j) = phi(e_i, e_j).
template <class S>
class BasicBilinearForm {
 public:
  BasicBilinearForm() = default;
  explicit BasicBilinearForm(int n) : n_(n), phi_(static_cast<std::size_t>(n * n)) {}
  int dim() const { return n_; }
  S& operator()(int i, int j) { return phi_[static_cast<std::size_t>(i * n_ + j)]; }
  const S& operator()(int i, int j) const { return phi_[static_cast<std::size_t>(i * n_ + j)]; }
  friend bool operator==(const BasicBilinearForm& a, const BasicBilinearForm& b) {
    return a.n_ == b.n_ && a.phi_ == b.phi_;
  }

 private:
  int n_ = 0;
  std::vector<S> phi_;
};

/// Dense trilinear map, t(i, j, l, k) = coefficient of e_k in T(e_i, e_j, e_l).
template <class S>
class BasicTrilinearMap {
 public:
  BasicTrilinearMap() = default;
  explicit BasicTrilinearMap(int n) : n_(n), t_(static_cast<std::size_t>(n * n * n * n)) {}
  int dim() const { return n_; }
  S& operator()(int i, int j, int l, int k) { return t_[index(i, j, l, k)]; }
  const S& operator()(int i, int j, int l, int k) const { return t_[index(i, j, l, k)]; }
  bool is_zero_map() const {
    for (const auto& v : t_)
      if (!is_zero(v)) return false;
    return true;
  }
  const std::vector<S>& entries() const { return t_; }
  friend bool operator==(const BasicTrilinearMap& a, const BasicTrilinearMap& b) {
    return a.n_ == b.n_ && a.t_ == b.t_;
  }

 private:
  std::size_t index(int i, int j, int l, int k) const {
    return static_cast<std::size_t>(((i * n_ + j) * n_ + l) * n_ + k);
  }
  int n_ = 0;
  std::vector<S> t_;
};

using LinearMap = BasicLinearMap<MultiPoly>;
using BilinearMap = BasicBilinearMap<MultiPoly>;
using StructureTensor = BasicBilinearMap<MultiPoly>;
using BilinearForm = BasicBilinearForm<MultiPoly>;
using TrilinearMap = BasicTrilinearMap<MultiPoly>;

using RationalTensor = BasicBilinearMap<Rational>;
using RationalMatrix = BasicLinearMap<Rational>;

template <class S>
Vec<S> basis_vector(int n, int i) {
  Vec<S> v(static_cast<std::size_t>(n));
  v[i] = S(1);
  return v;
}

template <class To, class From, class F>
BasicBilinearMap<To> map_entries(const BasicBilinearMap<From>& t, F&& f) {
  int n = t.dim();
  BasicBilinearMap<To> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) out(i, j, k) = f(t(i, j, k));
  return out;
}

template <class To, class From, class F>
BasicLinearMap<To> map_entries(const BasicLinearMap<From>& g, F&& f) {
  int n = g.dim();
  BasicLinearMap<To> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = f(g(i, j));
  return out;
}

/// Numeric view of a parameter-free tensor; throws when an entry is not constant.
RationalTensor to_rational(const StructureTensor& t);
StructureTensor to_poly(const RationalTensor& t);
RationalMatrix to_rational(const LinearMap& g);
LinearMap to_poly(const RationalMatrix& g);
bool is_numeric(const StructureTensor& t);

StructureTensor zero_algebra(int n);

/// All symbols occurring in the entries.
std::vector<std::string> tensor_variables(const StructureTensor& t);
StructureTensor substitute(const StructureTensor& t, const Substitution& values);
StructureTensor evaluate(const StructureTensor& t, const Assignment& values);

std::string to_string(const StructureTensor& t);

}  // namespace algvar
