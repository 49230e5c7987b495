#include "algvar/linalg.hpp"

#include <stdexcept>

namespace algvar {

namespace {

std::vector<std::vector<mpz_class>> integer_rows(const RationalRows& m, int columns) {
  std::vector<std::vector<mpz_class>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    if (static_cast<int>(row.size()) != columns) throw std::invalid_argument("ragged matrix");
    mpz_class l = 1;
    for (const auto& v : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.raw().get_den_mpz_t());
    std::vector<mpz_class> r(static_cast<std::size_t>(columns));
    for (int j = 0; j < columns; ++j) r[j] = row[j].raw().get_num() * (l / row[j].raw().get_den());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Echelon rref(const RationalRows& matrix, int columns) {
  auto a = integer_rows(matrix, columns);
  const int m = static_cast<int>(a.size());
  Echelon result;
  result.columns = columns;
  mpz_class previous = 1;
  int r = 0;
  for (int c = 0; c < columns && r < m; ++c) {
    int pivot = -1;
    for (int i = r; i < m; ++i)
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[r], a[pivot]);
    for (int i = r + 1; i < m; ++i) {
      for (int j = c + 1; j < columns; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    previous = a[r][c];
    result.pivots.push_back(c);
    ++r;
  }
  // Back substitution to reduced form over the rationals.
  RationalRows rows;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> row(static_cast<std::size_t>(columns));
    Rational inv = Rational(a[i][result.pivots[i]], mpz_class(1)).inverse();
    for (int j = 0; j < columns; ++j)
      if (a[i][j] != 0) row[j] = Rational(a[i][j], mpz_class(1)) * inv;
    rows.push_back(std::move(row));
  }
  for (int i = r - 1; i >= 0; --i) {
    int pc = result.pivots[i];
    for (int k = 0; k < i; ++k) {
      Rational f = rows[k][pc];
      if (f.is_zero()) continue;
      for (int j = pc; j < columns; ++j)
        if (!rows[i][j].is_zero()) rows[k][j] -= f * rows[i][j];
    }
  }
  result.rows = std::move(rows);
  return result;
}

int rank(const RationalRows& matrix, int columns) { return rref(matrix, columns).rank(); }

RationalRows nullspace(const RationalRows& matrix, int columns) {
  Echelon e = rref(matrix, columns);
  std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
  for (int p : e.pivots) is_pivot[p] = true;
  RationalRows basis;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(columns));
    v[f] = 1;
    for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const RationalRows& matrix, const std::vector<Rational>& rhs,
                                           int columns) {
  if (rhs.size() != matrix.size()) throw std::invalid_argument("rhs size mismatch");
  RationalRows augmented = matrix;
  for (std::size_t i = 0; i < augmented.size(); ++i) augmented[i].push_back(rhs[i]);
  Echelon e = rref(augmented, columns + 1);
  if (!e.pivots.empty() && e.pivots.back() == columns) return std::nullopt;
  AffineSolution sol;
  sol.particular.assign(static_cast<std::size_t>(columns), Rational());
  for (int i = 0; i < e.rank(); ++i) sol.particular[e.pivots[i]] = e.rows[i][columns];
  sol.pivots = e.pivots;
  std::vector<bool> is_pivot(static_cast<std::size_t>(columns), false);
  for (int p : e.pivots) is_pivot[p] = true;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    sol.free_columns.push_back(f);
    std::vector<Rational> v(static_cast<std::size_t>(columns));
    v[f] = 1;
    for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rows[i][f];
    sol.directions.push_back(std::move(v));
  }
  return sol;
}

}  // namespace algvar
