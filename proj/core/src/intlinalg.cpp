#include "wpl/intlinalg.hpp"

#include "wpl/errors.hpp"

#include <algorithm>
#include <utility>

namespace wpl {

namespace {

void check_rectangular(const IntMat& m, const char* who) {
  for (const auto& row : m) {
    if (row.size() != m.front().size()) {
      throw DataMismatchError(std::string(who) + ": ragged matrix");
    }
  }
}

}  // namespace

IntMat identity_matrix(std::size_t n) {
  IntMat id(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    id[i][i] = 1;
  }
  return id;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  if (a.empty() || b.empty()) {
    return {};
  }
  check_rectangular(a, "mat_mul");
  check_rectangular(b, "mat_mul");
  const std::size_t r = a.size();
  const std::size_t k = a.front().size();
  const std::size_t c = b.front().size();
  if (k != b.size()) {
    throw DataMismatchError("mat_mul: inner dimensions differ");
  }
  IntMat out(r, IntVec(c, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < c; ++j) {
        out[i][j] += a[i][t] * b[t][j];
      }
    }
  }
  return out;
}

IntVec mat_vec_mul(const IntMat& a, const IntVec& v) {
  IntVec out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != v.size()) {
      throw DataMismatchError("mat_vec_mul: dimension mismatch");
    }
    for (std::size_t j = 0; j < v.size(); ++j) {
      out[i] += a[i][j] * v[j];
    }
  }
  return out;
}

Int det(const IntMat& a) {
  if (a.empty()) {
    return Int(1);
  }
  check_rectangular(a, "det");
  const std::size_t n = a.size();
  if (a.front().size() != n) {
    throw DataMismatchError("det: matrix is not square");
  }
  IntMat m = a;
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == n) {
        return Int(0);
      }
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

namespace {

/// Mutable Smith-normal-form state: row operations mirror into u, column
/// operations mirror into v, so u*m0*v == d holds throughout.
struct SnfState {
  IntMat d, u, v;
  std::size_t rows, cols;

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    std::swap(d[i], d[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : v) std::swap(row[i], row[j]);
  }
  /// row i += q * row j
  void add_row(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < cols; ++t) d[i][t] += q * d[j][t];
    for (std::size_t t = 0; t < rows; ++t) u[i][t] += q * u[j][t];
  }
  /// col i += q * col j
  void add_col(std::size_t i, std::size_t j, const Int& q) {
    for (std::size_t t = 0; t < rows; ++t) d[t][i] += q * d[t][j];
    for (std::size_t t = 0; t < v.size(); ++t) v[t][i] += q * v[t][j];
  }
  void negate_row(std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : u[i]) x = -x;
  }
};

}  // namespace

SmithNormalForm smith_normal_form(const IntMat& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m.front().size() : 0;
  if (rows) {
    check_rectangular(m, "smith_normal_form");
  }

  SnfState st{m, identity_matrix(rows), identity_matrix(cols), rows, cols};

  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    bool submatrix_zero = false;
    while (true) {
      // Locate the nonzero entry of smallest magnitude in the trailing block.
      std::size_t pi = rows, pj = cols;
      Int best;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          if (st.d[i][j] == 0) continue;
          Int mag = abs(st.d[i][j]);
          if (pi == rows || mag < best) {
            best = mag;
            pi = i;
            pj = j;
          }
        }
      }
      if (pi == rows) {
        submatrix_zero = true;
        break;
      }
      st.swap_rows(t, pi);
      st.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (st.d[i][t] == 0) continue;
        Int q = st.d[i][t] / st.d[t][t];
        if (q != 0) st.add_row(i, t, -q);
        if (st.d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (st.d[t][j] == 0) continue;
        Int q = st.d[t][j] / st.d[t][t];
        if (q != 0) st.add_col(j, t, -q);
        if (st.d[t][j] != 0) clean = false;
      }
      if (!clean) {
        continue;
      }

      // Enforce the divisibility chain: the pivot must divide every entry of
      // the trailing block; merging an offending row makes the gcd drop.
      bool merged = false;
      for (std::size_t i = t + 1; i < rows && !merged; ++i) {
        for (std::size_t j = t + 1; j < cols && !merged; ++j) {
          if (st.d[i][j] % st.d[t][t] != 0) {
            st.add_row(t, i, Int(1));
            merged = true;
          }
        }
      }
      if (merged) {
        continue;
      }
      break;
    }
    if (submatrix_zero) {
      break;
    }
    if (st.d[t][t] < 0) {
      st.negate_row(t);
    }
  }

  SmithNormalForm out;
  out.u = std::move(st.u);
  out.d = std::move(st.d);
  out.v = std::move(st.v);
  out.rank = t;
  for (std::size_t i = 0; i < t; ++i) {
    out.invariants.push_back(out.d[i][i]);
  }
  return out;
}

IntMat kernel_basis(const IntMat& m) {
  if (m.empty()) {
    throw DataMismatchError("kernel_basis: empty matrix has no column count");
  }
  check_rectangular(m, "kernel_basis");
  const std::size_t cols = m.front().size();
  SmithNormalForm snf = smith_normal_form(m);
  IntMat basis;
  for (std::size_t j = snf.rank; j < cols; ++j) {
    IntVec col(cols);
    for (std::size_t i = 0; i < cols; ++i) {
      col[i] = snf.v[i][j];
    }
    basis.push_back(std::move(col));
  }
  return basis;
}

IntMat row_lattice_basis(const IntMat& rows) {
  if (rows.empty()) {
    return {};
  }
  check_rectangular(rows, "row_lattice_basis");
  IntMat a = rows;
  const std::size_t cols = a.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < a.size(); ++col) {
    // Combine all rows at or below pivot_row until a single one carries a
    // nonzero entry in this column.
    while (true) {
      std::size_t first = a.size(), second = a.size();
      for (std::size_t i = pivot_row; i < a.size(); ++i) {
        if (a[i][col] == 0) continue;
        if (first == a.size()) {
          first = i;
        } else {
          second = i;
          break;
        }
      }
      if (second == a.size()) {
        break;
      }
      if (abs(a[first][col]) < abs(a[second][col])) {
        std::swap(first, second);
      }
      Int q = a[first][col] / a[second][col];
      for (std::size_t j = 0; j < cols; ++j) {
        a[first][j] -= q * a[second][j];
      }
    }
    std::size_t nz = a.size();
    for (std::size_t i = pivot_row; i < a.size(); ++i) {
      if (a[i][col] != 0) {
        nz = i;
        break;
      }
    }
    if (nz == a.size()) {
      continue;
    }
    std::swap(a[pivot_row], a[nz]);
    if (a[pivot_row][col] < 0) {
      for (auto& x : a[pivot_row]) x = -x;
    }
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Int q = floor_div(a[i][col], a[pivot_row][col]);
      if (q != 0) {
        for (std::size_t j = 0; j < cols; ++j) {
          a[i][j] -= q * a[pivot_row][j];
        }
      }
    }
    ++pivot_row;
  }
  a.resize(pivot_row);
  return a;
}

}  // namespace wpl
