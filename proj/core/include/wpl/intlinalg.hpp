#pragma once

#include "wpl/numeric.hpp"

#include <cstddef>
#include <vector>

namespace wpl {

using IntVec = std::vector<Int>;
/// Row-major integer matrix; rows may be empty (0 x c) but must be rectangular.
using IntMat = std::vector<IntVec>;

IntMat identity_matrix(std::size_t n);
IntMat mat_mul(const IntMat& a, const IntMat& b);
IntVec mat_vec_mul(const IntMat& a, const IntVec& v);

/// Exact determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMat& a);

/// Smith normal form decomposition U * M * V = D with U, V unimodular and
/// D diagonal with non-negative entries d_1 | d_2 | ... .
struct SmithNormalForm {
  IntMat u;          ///< rows(M) x rows(M), unimodular
  IntMat d;          ///< same shape as M, diagonal
  IntMat v;          ///< cols(M) x cols(M), unimodular
  IntVec invariants; ///< nonzero diagonal entries in divisibility order
  std::size_t rank = 0;
};

SmithNormalForm smith_normal_form(const IntMat& m);

/// Basis, as rows, of the full integer kernel {x : M x = 0} of M acting on
/// column vectors. The returned lattice is saturated: Z^c / (kernel + row
/// space relations) has no hidden torsion coming from the basis choice.
IntMat kernel_basis(const IntMat& m);

/// Hermite-style canonical basis (as rows, pivots positive, entries above a
/// pivot reduced into [0, pivot)) of the lattice spanned by the given rows.
/// Two row sets span the same lattice iff their canonical bases are equal.
IntMat row_lattice_basis(const IntMat& rows);

}  // namespace wpl
