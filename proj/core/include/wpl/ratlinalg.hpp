#pragma once

#include "wpl/numeric.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace wpl {

using RatVec = std::vector<Rat>;
/// Row-major rational matrix.
using RatMat = std::vector<RatVec>;

/// Reduce to reduced row echelon form in place; returns the pivot column of
/// each nonzero row (zero rows are moved to the bottom and dropped).
std::vector<std::size_t> rref(RatMat& a);

std::size_t rat_rank(RatMat a);

/// Basis, as rows, of {x : A x = 0}; deterministic (free variables in
/// increasing column order, coefficient 1 in their own slot).
RatMat rat_kernel_basis(const RatMat& a, std::size_t cols);

/// Incrementally built row space with exact membership queries.
class RowSpace {
public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

  /// True iff v already lies in the span.
  bool contains(RatVec v) const;

  /// Adds v; returns true iff the span grew.
  bool insert(RatVec v);

  /// The reduced spanning rows (pivot entries 1, pivots increasing).
  const std::vector<std::pair<std::size_t, RatVec>>& rows() const {
    return rows_;
  }

private:
  void reduce(RatVec& v) const;

  std::size_t dim_;
  std::vector<std::pair<std::size_t, RatVec>> rows_;  // sorted by pivot column
};

}  // namespace wpl
