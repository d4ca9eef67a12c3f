#include <rolle/linalg.hpp>

#include <stdexcept>

namespace rolle {

size_t rank(QMatrix m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[r], m[pivot]);
    const Rational inv = 1 / m[r][col];
    for (size_t j = col; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

std::optional<std::vector<Rational>> solve_consistent(QMatrix a, std::vector<Rational> b) {
  const size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve_consistent: shape mismatch");
  const size_t cols = rows ? a[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    std::swap(b[r], b[pivot]);
    const Rational inv = 1 / a[r][col];
    for (size_t j = col; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][col] == 0) continue;
      const Rational f = a[i][col];
      for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(col);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
  return x;
}

Rational det(QMatrix m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: not square");
  Rational d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      d = -d;
    }
    d *= m[col][col];
    const Rational inv = 1 / m[col][col];
    for (size_t i = col + 1; i < n; ++i) {
      if (m[i][col] == 0) continue;
      const Rational f = m[i][col] * inv;
      for (size_t j = col; j < n; ++j) m[i][j] -= f * m[col][j];
    }
  }
  return d;
}

UniPoly det(std::vector<std::vector<UniPoly>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("det: not square");
  if (n == 0) return UniPoly::constant(1);
  UniPoly prev = UniPoly::constant(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  UniPoly d = m[n - 1][n - 1];
  return sign == 1 ? d : -d;
}

Rational greedy_minor_det(const QMatrix& m, size_t size) {
  if (size == 0) return 1;
  if (m.empty() || m[0].size() < size || m.size() < size) return 0;
  QMatrix work = m;
  const size_t rows = work.size(), cols = work[0].size();
  std::vector<size_t> sel_rows, sel_cols;
  std::vector<bool> used_row(rows, false);
  for (size_t col = 0; col < cols && sel_cols.size() < size; ++col) {
    size_t pivot = rows;
    for (size_t i = 0; i < rows; ++i) {
      if (!used_row[i] && work[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == rows) continue;
    used_row[pivot] = true;
    sel_rows.push_back(pivot);
    sel_cols.push_back(col);
    const Rational inv = 1 / work[pivot][col];
    for (size_t i = 0; i < rows; ++i) {
      if (used_row[i] || work[i][col] == 0) continue;
      const Rational f = work[i][col] * inv;
      for (size_t j = col; j < cols; ++j) work[i][j] -= f * work[pivot][j];
    }
  }
  if (sel_cols.size() < size) return 0;
  QMatrix sub(size, std::vector<Rational>(size));
  for (size_t i = 0; i < size; ++i)
    for (size_t j = 0; j < size; ++j) sub[i][j] = m[sel_rows[i]][sel_cols[j]];
  return det(std::move(sub));
}

}  // namespace rolle
