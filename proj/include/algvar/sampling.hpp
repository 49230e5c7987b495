#pragma once

#include <cstdint>
#include <random>

#include "algvar/tensor.hpp"

namespace algvar {

/// Deterministic source of small rationals. Bounded draws use plain modulo
/// reduction so sequences are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform-ish integer in [lo, hi].
  long integer(long lo, long hi);
  bool chance(int percent) { return integer(0, 99) < percent; }
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(long max_num = 9, long max_den = 5);
  Rational nonzero_rational(long max_num = 9, long max_den = 5);

  RationalMatrix invertible_matrix(int n);
  RationalMatrix lower_triangular(int n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace algvar
