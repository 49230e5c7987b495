#include "algvar/algebra_ops.hpp"
#include "algvar/linalg.hpp"
#include "algvar/tensor.hpp"

#include <set>
#include <sstream>

namespace algvar {

namespace {

Rational constant_of(const MultiPoly& p) {
  if (!p.is_constant())
    throw Error("expected a numeric entry, found " + p.to_string());
  return p.constant_term();
}

}  // namespace

RationalTensor to_rational(const StructureTensor& t) {
  return map_entries<Rational>(t, constant_of);
}

StructureTensor to_poly(const RationalTensor& t) {
  return map_entries<MultiPoly>(t, [](const Rational& r) { return MultiPoly(r); });
}

RationalMatrix to_rational(const LinearMap& g) { return map_entries<Rational>(g, constant_of); }

LinearMap to_poly(const RationalMatrix& g) {
  return map_entries<MultiPoly>(g, [](const Rational& r) { return MultiPoly(r); });
}

bool is_numeric(const StructureTensor& t) {
  for (const auto& v : t.entries())
    if (!v.is_constant()) return false;
  return true;
}

StructureTensor zero_algebra(int n) { return StructureTensor(n); }

std::vector<std::string> tensor_variables(const StructureTensor& t) {
  std::set<std::string> names;
  for (const auto& v : t.entries()) names.insert(v.variables().begin(), v.variables().end());
  return {names.begin(), names.end()};
}

StructureTensor substitute(const StructureTensor& t, const Substitution& values) {
  return map_entries<MultiPoly>(t, [&](const MultiPoly& p) { return p.substitute(values); });
}

StructureTensor evaluate(const StructureTensor& t, const Assignment& values) {
  return map_entries<MultiPoly>(t, [&](const MultiPoly& p) { return MultiPoly(p.eval(values)); });
}

std::string to_string(const StructureTensor& t) {
  std::ostringstream os;
  int n = t.dim();
  bool first = true;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::ostringstream rhs;
      bool any = false;
      for (int k = 0; k < n; ++k) {
        const auto& c = t(i, j, k);
        if (c.is_zero()) continue;
        if (any) rhs << " + ";
        any = true;
        std::string s = c.to_string();
        if (s == "1")
          rhs << "e" << k + 1;
        else if (c.term_count() > 1)
          rhs << "(" << s << ")*e" << k + 1;
        else
          rhs << s << "*e" << k + 1;
      }
      if (!any) continue;
      if (!first) os << ", ";
      first = false;
      os << "e" << i + 1 << "e" << j + 1 << " = " << rhs.str();
    }
  if (first) return "zero product";
  return os.str();
}

RationalMatrix inverse(const RationalMatrix& g) {
  int n = g.dim();
  RationalRows rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rows[i].resize(static_cast<std::size_t>(2 * n));
    for (int j = 0; j < n; ++j) rows[i][j] = g(i, j);
    rows[i][n + i] = 1;
  }
  Echelon e = rref(rows, 2 * n);
  if (e.rank() < n || e.pivots[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
  RationalMatrix inv(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = e.rows[i][n + j];
  return inv;
}

LinearMap inverse(const LinearMap& g) {
  MultiPoly det = determinant(g);
  if (det.is_zero()) throw SingularMatrix("matrix is singular");
  if (!det.is_constant())
    throw SingularMatrix("determinant " + det.to_string() +
                         " is not a unit; pass the inverse explicitly");
  Rational inv = det.constant_term().inverse();
  LinearMap adj = adjugate(g);
  return map_entries<MultiPoly>(adj, [&](const MultiPoly& p) { return p * inv; });
}

RationalTensor change_basis(const RationalTensor& t, const RationalMatrix& g) {
  return change_basis(t, g, inverse(g));
}

StructureTensor change_basis(const StructureTensor& t, const LinearMap& g) {
  return change_basis(t, g, inverse(g));
}

}  // namespace algvar
