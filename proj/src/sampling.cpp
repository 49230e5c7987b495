#include "algvar/sampling.hpp"

#include "algvar/algebra_ops.hpp"

namespace algvar {

long Rng::integer(long lo, long hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational Rng::rational(long max_num, long max_den) {
  long p = integer(-max_num, max_num);
  long q = integer(1, max_den);
  return Rational(p, q);
}

Rational Rng::nonzero_rational(long max_num, long max_den) {
  for (;;) {
    Rational r = rational(max_num, max_den);
    if (!r.is_zero()) return r;
  }
}

RationalMatrix Rng::invertible_matrix(int n) {
  for (;;) {
    RationalMatrix g(n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g(r, c) = rational(5, 3);
    if (!determinant(g).is_zero()) return g;
  }
}

RationalMatrix Rng::lower_triangular(int n) {
  RationalMatrix g(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) g(r, c) = r == c ? nonzero_rational(5, 3) : rational(5, 3);
  return g;
}

}  // namespace algvar
