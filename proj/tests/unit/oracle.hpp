#pragma once

// Brute-force reference computations. Everything here works on plain vectors
// and expands the multilinear definitions term by term, without the library's
// operator helpers, so the main path can be checked against it.

#include <functional>
#include <vector>

#include "algvar/linalg.hpp"
#include "algvar/tensor.hpp"

namespace oracle {

using algvar::MultiPoly;
using algvar::Rational;
using PVec = std::vector<MultiPoly>;
using Bil = std::function<PVec(const PVec&, const PVec&)>;

inline PVec basis(int n, int i) {
  PVec v(n);
  v[i] = MultiPoly(Rational(1));
  return v;
}

inline PVec add(PVec a, const PVec& b, int sign = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += sign > 0 ? b[i] : -b[i];
  return a;
}

inline PVec scale(PVec a, const MultiPoly& s) {
  for (auto& x : a) x = x * s;
  return a;
}

/// x y = sum_{i,j,k} x_i y_j c_ij^k e_k.
inline Bil product(const algvar::StructureTensor& t) {
  return [t](const PVec& x, const PVec& y) {
    int n = t.dim();
    PVec out(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) out[k] += x[i] * y[j] * t(i, j, k);
    return out;
  };
}

/// [L_u, Q](x, y) = u Q(x,y) - Q(u x, y) - Q(x, u y), with L_u from `p`.
inline Bil bracket_left(const Bil& p, const PVec& u, const Bil& q) {
  return [p, u, q](const PVec& x, const PVec& y) {
    return add(add(p(u, q(x, y)), q(p(u, x), y), -1), q(x, p(u, y)), -1);
  };
}

/// [A, B](x, y, z) by its six-term definition.
inline PVec bracket_bil_bil(const Bil& a, const Bil& b, const PVec& x, const PVec& y, const PVec& z) {
  PVec v = add(a(b(x, y), z), a(x, b(y, z)));
  v = add(v, a(y, b(x, z)));
  v = add(v, b(a(x, y), z), -1);
  v = add(v, b(x, a(y, z)), -1);
  return add(v, b(y, a(x, z)), -1);
}

/// Generic F and phi with the unknown names lambda1 ... phi22 (n = 2).
struct GenericWitness {
  Bil f;
  std::function<MultiPoly(const PVec&, const PVec&)> phi;
};

inline GenericWitness generic_witness() {
  const char* names[4][2] = {{"lambda1", "lambda2"}, {"mu1", "mu2"}, {"tau1", "tau2"}, {"nu1", "nu2"}};
  const char* phis[4] = {"phi11", "phi12", "phi21", "phi22"};
  GenericWitness w;
  w.f = [names](const PVec& a, const PVec& b) {
    PVec out(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 2; ++k) out[k] += a[i] * b[j] * MultiPoly::variable(names[2 * i + j][k]);
    return out;
  };
  w.phi = [phis](const PVec& a, const PVec& b) {
    MultiPoly s;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) s += a[i] * b[j] * MultiPoly::variable(phis[2 * i + j]);
    return s;
  };
  return w;
}

/// [L_b,[L_a,P]](x,y) + [L_{F(a,b)},P](x,y) - phi(a,b) P(x,y).
inline PVec identity_residual(const Bil& p, const GenericWitness& w, const PVec& a, const PVec& b, const PVec& x,
                              const PVec& y) {
  PVec lhs = bracket_left(p, b, bracket_left(p, a, p))(x, y);
  PVec fterm = bracket_left(p, w.f(a, b), p)(x, y);
  return add(add(lhs, fterm), scale(p(x, y), w.phi(a, b)), -1);
}

/// Structure constants in the basis E_i = column i of g, by solving
/// g c = E_i E_j for each pair (Cramer's rule, n = 2).
inline algvar::RationalTensor rebase(const algvar::RationalTensor& t, const algvar::RationalMatrix& g) {
  Rational det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
  algvar::RationalTensor out(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational p[2];
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int k = 0; k < 2; ++k) p[k] += g(a, i) * g(b, j) * t(a, b, k);
      out(i, j, 0) = (p[0] * g(1, 1) - g(0, 1) * p[1]) / det;
      out(i, j, 1) = (g(0, 0) * p[1] - g(1, 0) * p[0]) / det;
    }
  return out;
}

}  // namespace oracle
