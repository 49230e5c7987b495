#pragma once

#include "algvar/tensor.hpp"

namespace algvar {

/// dim Der(A) = dim {D : D(xy) = D(x)y + xD(y)}; equals dim Aut(A) in
/// characteristic zero. Requires a parameter-free tensor.
int derivation_algebra_dim(const StructureTensor& t);

/// dim span{e_i e_j}, the square A^2 of the algebra.
int product_span_dim(const StructureTensor& t);

/// dim span{e_i e_j - e_j e_i}. Diagnostic only.
int commutator_span_dim(const StructureTensor& t);

/// Orbit dimension under GL_n: n^2 - dim Der.
int orbit_dim(const StructureTensor& t);

}  // namespace algvar
