#include "wpl/ratlinalg.hpp"

#include "wpl/errors.hpp"

#include <algorithm>

namespace wpl {

std::vector<std::size_t> rref(RatMat& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) {
    return pivots;
  }
  const std::size_t cols = a.front().size();
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw DataMismatchError("rref: ragged matrix");
    }
  }
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = a.size();
    for (std::size_t i = row; i < a.size(); ++i) {
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    }
    if (sel == a.size()) {
      continue;
    }
    std::swap(a[row], a[sel]);
    const Rat inv = Rat(1) / a[row][col];
    for (std::size_t j = col; j < cols; ++j) {
      a[row][j] *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) {
        continue;
      }
      const Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) {
        a[i][j] -= f * a[row][j];
      }
    }
    pivots.push_back(col);
    ++row;
  }
  a.resize(row);
  return pivots;
}

std::size_t rat_rank(RatMat a) {
  return rref(a).size();
}

RatMat rat_kernel_basis(const RatMat& a, std::size_t cols) {
  for (const auto& row : a) {
    if (row.size() != cols) {
      throw DataMismatchError("rat_kernel_basis: ragged matrix");
    }
  }
  RatMat r = a;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) {
    is_pivot[c] = true;
  }
  RatMat basis;
  for (std::size_t free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[free_col]) {
      continue;
    }
    RatVec v(cols, Rat(0));
    v[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -r[i][free_col];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

void RowSpace::reduce(RatVec& v) const {
  for (const auto& [pivot, row] : rows_) {
    if (v[pivot] == 0) {
      continue;
    }
    const Rat f = v[pivot];
    for (std::size_t j = 0; j < dim_; ++j) {
      v[j] -= f * row[j];
    }
  }
}

bool RowSpace::contains(RatVec v) const {
  if (v.size() != dim_) {
    throw DataMismatchError("RowSpace: vector dimension mismatch");
  }
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

bool RowSpace::insert(RatVec v) {
  if (v.size() != dim_) {
    throw DataMismatchError("RowSpace: vector dimension mismatch");
  }
  reduce(v);
  std::size_t pivot = dim_;
  for (std::size_t j = 0; j < dim_; ++j) {
    if (v[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == dim_) {
    return false;
  }
  const Rat inv = Rat(1) / v[pivot];
  for (std::size_t j = pivot; j < dim_; ++j) {
    v[j] *= inv;
  }
  // Back-substitute into the stored rows so the basis stays fully reduced.
  for (auto& [p, row] : rows_) {
    if (row[pivot] == 0) {
      continue;
    }
    const Rat f = row[pivot];
    for (std::size_t j = 0; j < dim_; ++j) {
      row[j] -= f * v[j];
    }
  }
  auto pos = std::lower_bound(
      rows_.begin(), rows_.end(), pivot,
      [](const auto& entry, std::size_t p) { return entry.first < p; });
  rows_.insert(pos, {pivot, std::move(v)});
  return true;
}

}  // namespace wpl
