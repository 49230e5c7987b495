#pragma once

#include <utility>

#include "algvar/tensor.hpp"

namespace algvar {

template <class S>
void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimensions " + std::to_string(a) +
                                      " and " + std::to_string(b) + " differ");
}

/// x . y under the product T.
template <class S>
Vec<S> multiply(const BasicBilinearMap<S>& t, const Vec<S>& x, const Vec<S>& y) {
  return t.apply(x, y);
}

/// Left multiplication operator L_a : y -> a . y.
template <class S>
BasicLinearMap<S> left_mult(const BasicBilinearMap<S>& t, const Vec<S>& a) {
  int n = t.dim();
  require_same_dim<S>(n, static_cast<int>(a.size()), "left_mult");
  BasicLinearMap<S> l(n);
  for (int i = 0; i < n; ++i) {
    if (is_zero(a[i])) continue;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (!is_zero(t(i, j, k))) l(k, j) += a[i] * t(i, j, k);
  }
  return l;
}

/// [A, a](x) = A(a, x).
template <class S>
BasicLinearMap<S> slice(const BasicBilinearMap<S>& a_map, const Vec<S>& a) {
  return left_mult(a_map, a);
}

/// [A, B](x, y) = A(B(x, y)) - B(A x, y) - B(x, A y).
template <class S>
BasicBilinearMap<S> bracket_lin_bil(const BasicLinearMap<S>& a, const BasicBilinearMap<S>& b) {
  int n = b.dim();
  require_same_dim<S>(a.dim(), n, "bracket_lin_bil");
  BasicBilinearMap<S> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        S v;
        for (int m = 0; m < n; ++m) {
          if (!is_zero(a(k, m)) && !is_zero(b(i, j, m))) v += a(k, m) * b(i, j, m);
          if (!is_zero(a(m, i)) && !is_zero(b(m, j, k))) v -= a(m, i) * b(m, j, k);
          if (!is_zero(a(m, j)) && !is_zero(b(i, m, k))) v -= a(m, j) * b(i, m, k);
        }
        out(i, j, k) = std::move(v);
      }
  return out;
}

/// [A, B](x, y, z) = A(B(x,y),z) + A(x,B(y,z)) + A(y,B(x,z))
///                 - B(A(x,y),z) - B(x,A(y,z)) - B(y,A(x,z)).
template <class S>
BasicTrilinearMap<S> bracket_bil_bil(const BasicBilinearMap<S>& a, const BasicBilinearMap<S>& b) {
  int n = a.dim();
  require_same_dim<S>(n, b.dim(), "bracket_bil_bil");
  BasicTrilinearMap<S> out(n);
  auto compose = [n](const BasicBilinearMap<S>& outer, const BasicBilinearMap<S>& inner, int p, int q,
                     int r, bool inner_first, int k) {
    // inner_first: outer(inner(p,q), r); otherwise outer(p, inner(q, r)).
    S v;
    for (int m = 0; m < n; ++m) {
      const S& in = inner(inner_first ? p : q, inner_first ? q : r, m);
      if (is_zero(in)) continue;
      const S& o = inner_first ? outer(m, r, k) : outer(p, m, k);
      if (!is_zero(o)) v += in * o;
    }
    return v;
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int k = 0; k < n; ++k) {
          S v = compose(a, b, x, y, z, true, k);
          v += compose(a, b, x, y, z, false, k);
          v += compose(a, b, y, x, z, false, k);
          v -= compose(b, a, x, y, z, true, k);
          v -= compose(b, a, x, y, z, false, k);
          v -= compose(b, a, y, x, z, false, k);
          out(x, y, z, k) = std::move(v);
        }
  return out;
}

template <class S>
S determinant(const BasicLinearMap<S>& g) {
  int n = g.dim();
  if (n == 0) return S(1);
  if (n == 1) return g(0, 0);
  if (n == 2) return g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  S det;
  for (int c = 0; c < n; ++c) {
    if (is_zero(g(0, c))) continue;
    BasicLinearMap<S> minor(n - 1);
    for (int r = 1; r < n; ++r)
      for (int cc = 0, mc = 0; cc < n; ++cc)
        if (cc != c) minor(r - 1, mc++) = g(r, cc);
    S term = g(0, c) * determinant(minor);
    if (c % 2 == 0)
      det += term;
    else
      det -= term;
  }
  return det;
}

/// adj(g) with g * adj(g) = det(g) * I.
template <class S>
BasicLinearMap<S> adjugate(const BasicLinearMap<S>& g) {
  int n = g.dim();
  BasicLinearMap<S> adj(n);
  if (n == 1) {
    adj(0, 0) = S(1);
    return adj;
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      BasicLinearMap<S> minor(n - 1);
      for (int rr = 0, mr = 0; rr < n; ++rr) {
        if (rr == r) continue;
        for (int cc = 0, mc = 0; cc < n; ++cc)
          if (cc != c) minor(mr, mc++) = g(rr, cc);
        ++mr;
      }
      S cof = determinant(minor);
      adj(c, r) = ((r + c) % 2 == 0) ? cof : S() - cof;
    }
  return adj;
}

/// Structure constants of T in the basis E_i = g(e_i), scaled by det(g):
/// returns (N, det) with c'_{ij}^k = N(i, j, k) / det. Works over any
/// commutative ring, so symbolic and Laurent bases need no inversion.
template <class S>
std::pair<BasicBilinearMap<S>, S> change_basis_fraction(const BasicBilinearMap<S>& t,
                                                        const BasicLinearMap<S>& g) {
  int n = t.dim();
  require_same_dim<S>(n, g.dim(), "change_basis");
  BasicLinearMap<S> adj = adjugate(g);
  S det = determinant(g);
  // Products of the new basis vectors in old coordinates.
  BasicBilinearMap<S> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<S> prod = t.apply(g.column(i), g.column(j));
      for (int k = 0; k < n; ++k) {
        S v;
        for (int c = 0; c < n; ++c)
          if (!is_zero(adj(k, c)) && !is_zero(prod[c])) v += adj(k, c) * prod[c];
        out(i, j, k) = std::move(v);
      }
    }
  return {std::move(out), std::move(det)};
}

/// Structure constants in the basis E_i = g(e_i) given g and its inverse.
template <class S>
BasicBilinearMap<S> change_basis(const BasicBilinearMap<S>& t, const BasicLinearMap<S>& g,
                                 const BasicLinearMap<S>& g_inverse) {
  int n = t.dim();
  require_same_dim<S>(n, g.dim(), "change_basis");
  BasicBilinearMap<S> out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Vec<S> prod = g_inverse.apply(t.apply(g.column(i), g.column(j)));
      for (int k = 0; k < n; ++k) out(i, j, k) = prod[k];
    }
  return out;
}

/// Inverse of a matrix whose determinant is a unit (a nonzero constant).
RationalMatrix inverse(const RationalMatrix& g);
LinearMap inverse(const LinearMap& g);

RationalTensor change_basis(const RationalTensor& t, const RationalMatrix& g);
/// Requires det(g) to be a nonzero constant; otherwise pass the inverse
/// explicitly or use change_basis_fraction.
StructureTensor change_basis(const StructureTensor& t, const LinearMap& g);

/// The trilinear maps [[[P, e_a], P], P] for each basis vector e_a.
template <class S>
std::vector<BasicTrilinearMap<S>> terminal_tensors(const BasicBilinearMap<S>& p) {
  int n = p.dim();
  std::vector<BasicTrilinearMap<S>> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    auto la = slice(p, basis_vector<S>(n, a));
    out.push_back(bracket_bil_bil(bracket_lin_bil(la, p), p));
  }
  return out;
}

}  // namespace algvar
