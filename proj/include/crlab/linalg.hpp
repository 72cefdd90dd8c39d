#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crlab/polynomial.hpp"

namespace crlab {

using CoeffVector = std::vector<Coeff>;
using CoeffMatrix = std::vector<CoeffVector>;
using PolyMatrix = std::vector<std::vector<Polynomial>>;

// Fraction-free (Bareiss) determinant; every intermediate division is exact.
Polynomial determinant(const PolyMatrix& m, const ArenaPtr& arena);
// Classical adjugate, adj(M) * M = det(M) * I.
PolyMatrix adjugate(const PolyMatrix& m, const ArenaPtr& arena);

Coeff determinant(CoeffMatrix m);
std::size_t rank(CoeffMatrix m);

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(CoeffMatrix& m);

// Basis of the right kernel, one vector per free column in increasing order.
// Each basis vector has a 1 in its free column.
std::vector<CoeffVector> kernel(CoeffMatrix m);

using SparseRow = std::vector<std::pair<std::size_t, Coeff>>;  // sorted by column

// Incrementally maintained row space in sparse echelon form: each stored row
// has a distinct leading column.
class RowSpace {
 public:
  explicit RowSpace(std::size_t columns) : columns_(columns), by_pivot_(columns) {}

  // Adds the row; true when the rank grew.
  bool insert(SparseRow row);
  bool insert(const CoeffVector& row) { return insert(to_sparse(row)); }
  bool contains(SparseRow row) const;
  bool contains(const CoeffVector& row) const { return contains(to_sparse(row)); }
  std::size_t rank() const { return rank_; }
  std::size_t columns() const { return columns_; }
  bool is_pivot(std::size_t column) const { return by_pivot_[column].has_value(); }

  // Kernel vector of the stored rows with a 1 in the first non-pivot column
  // and 0 in every other non-pivot column; nullopt when the kernel is trivial.
  std::optional<CoeffVector> first_kernel_vector() const;

  static SparseRow to_sparse(const CoeffVector& row);

 private:
  // Eliminates stored leading columns; returns the remainder.
  SparseRow reduce(SparseRow row) const;

  std::size_t columns_;
  std::size_t rank_ = 0;
  std::vector<std::optional<SparseRow>> by_pivot_;
};

}  // namespace crlab
