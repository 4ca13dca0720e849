#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "spinc/exact_matrix.hpp"

namespace spinc {

/// Kronecker product: entry (i1*b.rows+i2, j1*b.cols+j2) = a(i1,j1) * b(i2,j2).
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product of a list of factors, left to right. An empty list gives [1].
ExactMatrix kronecker(std::span<const ExactMatrix> factors);

/// Vertical concatenation. Throws DimensionMismatch on ragged column counts.
/// An empty list gives a 0x0 matrix.
ExactMatrix stack_rows(std::span<const ExactMatrix> ms);

/// Rank via fraction-free (Bareiss) elimination with full pivoting over Z[i].
std::size_t rank(const ExactMatrix& m);

/// Rank via textbook Gauss-Jordan elimination over Q(i). Kept as an
/// independent route for cross-checking `rank`.
std::size_t rank_naive(const ExactMatrix& m);

/// Reduced row echelon form over Q(i) with the pivot column list.
struct RowEchelon {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};
RowEchelon rref(const ExactMatrix& m);

/// Basis of {v : m v = 0}. Vectors come out in the canonical normal form:
/// stacked as rows they form a reduced row echelon matrix (pivot entries 1),
/// so the result depends only on the kernel and not on pivoting order.
/// Rank-nullity is asserted internally.
std::vector<Vector> kernel_basis(const ExactMatrix& m);

/// Same contract as kernel_basis, computed by Gauss-Jordan over Q(i).
std::vector<Vector> kernel_basis_naive(const ExactMatrix& m);

/// Canonical basis of span(vs): rows of the RREF of the stacked vectors,
/// zero rows dropped.
std::vector<Vector> canonical_basis(const std::vector<Vector>& vs, std::size_t dim);

/// Incrementally maintained row space in reduced echelon form. Used for
/// membership tests (Lie closure, span comparisons).
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }

  /// Residual of v after elimination against the stored basis.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Adds v; returns false if it was already in the span.
  bool insert(const Vector& v);

 private:
  std::size_t dim_;
  std::vector<Vector> basis_;  // pivot entry of basis_[k] is 1, at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace spinc
