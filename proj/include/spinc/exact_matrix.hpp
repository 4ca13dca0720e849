#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "spinc/gaussian_rational.hpp"

namespace spinc {

using Vector = std::vector<GaussianRational>;

/// Dense row-major matrix over Q(i).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Column matrix holding v.
  static ExactMatrix column(const Vector& v);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static ExactMatrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  const std::vector<GaussianRational>& entries() const { return entries_; }

  bool is_zero() const;
  bool is_real() const;

  ExactMatrix transpose() const;
  ExactMatrix adjoint() const;  // conjugate transpose
  Vector col(std::size_t c) const;
  Vector row(std::size_t r) const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const GaussianRational& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const GaussianRational& s) { return a *= s; }
  friend ExactMatrix operator*(const GaussianRational& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator-(ExactMatrix a) { return a *= GaussianRational(-1); }
  /// Throws DimensionMismatch when inner dimensions differ. Zero entries of
  /// the left factor are skipped, which keeps products of the sparse
  /// Kronecker-built operators cheap.
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> entries_;
};

/// m * v. Throws DimensionMismatch.
Vector mat_vec(const ExactMatrix& m, const Vector& v);
/// [a, b] = ab - ba
ExactMatrix commutator(const ExactMatrix& a, const ExactMatrix& b);
bool is_zero(const Vector& v);
Vector scale(const Vector& v, const GaussianRational& s);

}  // namespace spinc
