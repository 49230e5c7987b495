#include "algvar/invariants.hpp"

#include "algvar/linalg.hpp"

namespace algvar {

int derivation_algebra_dim(const StructureTensor& poly) {
  RationalTensor t = to_rational(poly);
  const int n = t.dim();
  // Unknown d(p, q) = component p of D(e_q), column index p * n + q.
  auto col = [n](int p, int q) { return p * n + q; };
  RationalRows rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        std::vector<Rational> row(static_cast<std::size_t>(n * n));
        for (int m = 0; m < n; ++m) {
          row[col(k, m)] += t(i, j, m);
          row[col(m, i)] -= t(m, j, k);
          row[col(m, j)] -= t(i, m, k);
        }
        rows.push_back(std::move(row));
      }
  return n * n - rank(rows, n * n);
}

int product_span_dim(const StructureTensor& poly) {
  RationalTensor t = to_rational(poly);
  const int n = t.dim();
  RationalRows rows;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) row[k] = t(i, j, k);
      rows.push_back(std::move(row));
    }
  return rank(rows, n);
}

int commutator_span_dim(const StructureTensor& poly) {
  RationalTensor t = to_rational(poly);
  const int n = t.dim();
  RationalRows rows;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> row(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) row[k] = t(i, j, k) - t(j, i, k);
      rows.push_back(std::move(row));
    }
  return rows.empty() ? 0 : rank(rows, n);
}

int orbit_dim(const StructureTensor& t) { return t.dim() * t.dim() - derivation_algebra_dim(t); }

}  // namespace algvar
