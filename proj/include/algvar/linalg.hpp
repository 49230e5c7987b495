#pragma once

#include <optional>
#include <vector>

#include "algvar/rational.hpp"

namespace algvar {

using RationalRows = std::vector<std::vector<Rational>>;

/// Reduced row echelon form. The forward pass is fraction-free (Bareiss on
/// the row-scaled integer matrix); only the final back substitution divides.
struct Echelon {
  RationalRows rows;        // nonzero rows of the RREF, pivot entries 1
  std::vector<int> pivots;  // pivot column of each row
  int columns = 0;
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon rref(const RationalRows& matrix, int columns);
int rank(const RationalRows& matrix, int columns);
/// Basis of {x : M x = 0}, one vector per free column in increasing order.
RationalRows nullspace(const RationalRows& matrix, int columns);

/// Solution set of M x = b as particular solution + nullspace basis.
struct AffineSolution {
  std::vector<Rational> particular;
  RationalRows directions;
  std::vector<int> pivots;
  std::vector<int> free_columns;
};
std::optional<AffineSolution> solve_affine(const RationalRows& matrix, const std::vector<Rational>& rhs,
                                           int columns);

}  // namespace algvar
