#include "crlab/linalg.hpp"

#include <algorithm>

#include "crlab/errors.hpp"

namespace crlab {

Polynomial determinant(const PolyMatrix& m0, const ArenaPtr& arena) {
  const std::size_t n = m0.size();
  if (n == 0) return Polynomial::constant(arena, Coeff(1));
  for (const auto& row : m0) internal_check(row.size() == n, "determinant of non-square matrix");
  PolyMatrix m = m0;
  Polynomial prev = Polynomial::constant(arena, Coeff(1));
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return Polynomial(arena);
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(num, prev);
      }
      m[i][k] = Polynomial(arena);
    }
    prev = m[k][k];
  }
  Polynomial d = m[n - 1][n - 1];
  return negate ? -d : d;
}

PolyMatrix adjugate(const PolyMatrix& m, const ArenaPtr& arena) {
  const std::size_t n = m.size();
  PolyMatrix adj(n, std::vector<Polynomial>(n, Polynomial(arena)));
  if (n == 1) {
    adj[0][0] = Polynomial::constant(arena, Coeff(1));
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PolyMatrix minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Polynomial cof = determinant(minor, arena);
      if ((i + j) % 2 == 1) cof = -cof;
      adj[j][i] = std::move(cof);
    }
  }
  return adj;
}

std::vector<std::size_t> row_reduce(CoeffMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const Coeff inv = Coeff(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!m[r][j].is_zero()) m[r][j] *= inv;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Coeff f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!m[r][j].is_zero()) m[i][j] -= f * m[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Coeff determinant(CoeffMatrix m) {
  const std::size_t n = m.size();
  Coeff det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return Coeff(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const Coeff inv = Coeff(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      const Coeff f = m[i][c] * inv;
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

std::size_t rank(CoeffMatrix m) { return row_reduce(m).size(); }

std::vector<CoeffVector> kernel(CoeffMatrix m) {
  if (m.empty()) return {};
  const std::size_t cols = m[0].size();
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<CoeffVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    CoeffVector v(cols, Coeff(0));
    v[f] = Coeff(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

SparseRow RowSpace::to_sparse(const CoeffVector& row) {
  SparseRow out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) out.emplace_back(j, row[j]);
  }
  return out;
}

namespace {

// row - f * other, both sorted by column.
SparseRow axpy(const SparseRow& row, const Coeff& f, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -(f * other[j].second));
      ++j;
    } else {
      Coeff v = row[i].second - f * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseRow RowSpace::reduce(SparseRow row) const {
  std::size_t k = 0;
  while (k < row.size()) {
    const std::size_t c = row[k].first;
    const auto& pivot = by_pivot_[c];
    if (!pivot) {
      ++k;
      continue;
    }
    // Stored rows have leading coefficient 1 at column c, so entries before k
    // are untouched by the update.
    const Coeff f = row[k].second;
    row = axpy(row, f, *pivot);
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  for (const auto& e : row) internal_check(e.first < columns_, "row column out of range");
  // Only the leading entry needs a fresh pivot; reduce until it has none.
  while (!row.empty()) {
    const std::size_t c = row.front().first;
    if (by_pivot_[c]) {
      const Coeff f = row.front().second;
      row = axpy(row, f, *by_pivot_[c]);
      continue;
    }
    const Coeff inv = Coeff(1) / row.front().second;
    for (auto& e : row) e.second *= inv;
    by_pivot_[c] = std::move(row);
    ++rank_;
    return true;
  }
  return false;
}

std::optional<CoeffVector> RowSpace::first_kernel_vector() const {
  std::size_t free = 0;
  while (free < columns_ && by_pivot_[free]) ++free;
  if (free == columns_) return std::nullopt;
  CoeffVector x(columns_, Coeff(0));
  x[free] = Coeff(1);
  // Rows only touch columns at or after their pivot: solve from the right.
  for (std::size_t p = columns_; p-- > 0;) {
    if (!by_pivot_[p]) continue;
    Coeff sum(0);
    for (const auto& [c, v] : *by_pivot_[p]) {
      if (c != p && !x[c].is_zero()) sum += v * x[c];
    }
    x[p] = -sum;
  }
  return x;
}

bool RowSpace::contains(SparseRow row) const { return reduce(std::move(row)).empty(); }

}  // namespace crlab
