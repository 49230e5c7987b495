#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algvar/groebner.hpp"
#include "algvar/multipoly.hpp"

namespace algvar {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// One constructible piece {E = 0, N != 0} of parameter space on which the
/// linear system has constant rank and a uniform solved form.
struct ParamCell {
  std::vector<MultiPoly> equations;
  std::vector<MultiPoly> inequations;
  bool consistent = false;
  int rank = 0;
  int solution_dim = -1;  // affine dimension when consistent
  std::vector<int> pivots;
  /// Gauss-Jordan rows restricted to the pivots: rows[r] has entries for all
  /// columns (zero on other pivot columns), rhs[r] the right side.
  PolyMatrix rows;
  std::vector<MultiPoly> rhs;
  std::optional<Assignment> sample;  // a rational point of the cell, if found

  bool contains(const Assignment& point) const;
};

struct ParamSolverOptions {
  GroebnerOptions groebner{12, 4000};
  int max_cells = 64;
};

struct ParamSolveResult {
  bool complete = true;  // false when the cell budget or Groebner caps were hit
  std::vector<ParamCell> cells;
  std::string note;
};

/// Solves A x = b where entries of A, b are polynomials in parameters, over
/// the domain {domain_eqs = 0, domain_neqs != 0}. Fraction-free Gauss-Jordan
/// elimination; whenever a pivot or a consistency entry is neither zero nor
/// nonzero on the current cell the cell is split in two.
ParamSolveResult solve_parametric(const PolyMatrix& a, const std::vector<MultiPoly>& b, int columns,
                                  const std::vector<MultiPoly>& domain_eqs,
                                  const std::vector<MultiPoly>& domain_neqs,
                                  const ParamSolverOptions& options = {});

}  // namespace algvar
