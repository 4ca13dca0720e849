#include <doctest.h>

#include <random>

#include "spinc/clifford.hpp"
#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

using namespace spinc;

namespace {

const GaussianRational I = GaussianRational::i();

ExactMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng, int zero_weight = 0) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::uniform_int_distribution<int> coin(0, zero_weight);
  ExactMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (coin(rng) == 0) m(r, c) = GaussianRational(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
  return m;
}

// Rank-deficient matrix: product of random (r x k) and (k x c) factors.
ExactMatrix random_low_rank(std::size_t rows, std::size_t cols, std::size_t k, std::mt19937& rng) {
  return random_matrix(rows, k, rng) * random_matrix(k, cols, rng);
}

}  // namespace

TEST_CASE("kronecker") {
  CHECK(kronecker(ExactMatrix::identity(2), ExactMatrix::identity(2)) == ExactMatrix::identity(4));

  // U x T expanded by hand
  ExactMatrix expected{{0, 0, -I, 0}, {0, 0, 0, I}, {-I, 0, 0, 0}, {0, I, 0, 0}};
  CHECK(kronecker(pauli::U(), pauli::T()) == expected);

  ExactMatrix rect = kronecker(ExactMatrix(2, 3), ExactMatrix(4, 5));
  CHECK(rect.rows() == 8);
  CHECK(rect.cols() == 15);
}

TEST_CASE("kronecker mixed-product property") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    ExactMatrix a = random_matrix(2, 2, rng), b = random_matrix(2, 2, rng);
    ExactMatrix c = random_matrix(2, 2, rng), d = random_matrix(2, 2, rng);
    CHECK(kronecker(a, b) * kronecker(c, d) == kronecker(a * c, b * d));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(ExactMatrix::zero(4, 4)).size() == 4);
  CHECK(kernel_basis(ExactMatrix::identity(4)).empty());

  // x + i y = 0 by hand: normalized with leading entry 1 the kernel is (1, i),
  // i.e. i * (1, i) = (i, -1).
  auto k = kernel_basis(ExactMatrix{{1, I}, {-I, 1}});
  REQUIRE(k.size() == 1);
  CHECK(k[0] == Vector{1, I});
  CHECK(scale(k[0], I) == Vector{I, -1});
}

TEST_CASE("kernel vectors are annihilated exactly and basis is canonical") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rank_target = 1 + trial % 5;
    ExactMatrix m = random_low_rank(6, 7, rank_target, rng);
    auto k = kernel_basis(m);
    CHECK(k.size() + rank(m) == 7);
    for (const auto& v : k) CHECK(is_zero(mat_vec(m, v)));
    CHECK(k == kernel_basis_naive(m));
    // row-permuting the matrix does not change the normal form
    ExactMatrix flipped(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) flipped(m.rows() - 1 - r, c) = m(r, c);
    CHECK(kernel_basis(flipped) == k);
  }
}

TEST_CASE("Bareiss and Gauss-Jordan agree on rank") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    ExactMatrix m = trial % 2 ? random_matrix(6, 6, rng, 2) : random_low_rank(6, 6, 1 + trial % 6, rng);
    CHECK(rank(m) == rank_naive(m));
  }
  CHECK(rank(ExactMatrix::zero(3, 5)) == 0);
  CHECK(rank(ExactMatrix(0, 4)) == 0);
}

TEST_CASE("stack_rows") {
  std::vector<ExactMatrix> single{ExactMatrix::identity(2)};
  CHECK(stack_rows(single) == ExactMatrix::identity(2));

  std::mt19937 rng(29);
  ExactMatrix a = random_low_rank(3, 5, 2, rng);
  std::vector<ExactMatrix> with_zero{a, ExactMatrix::zero(4, 5)};
  CHECK(kernel_basis(stack_rows(with_zero)) == kernel_basis(a));

  std::vector<ExactMatrix> full{ExactMatrix{{1, 0}}, ExactMatrix{{0, 1}}};
  CHECK(kernel_basis(stack_rows(full)).empty());

  std::vector<ExactMatrix> ragged{ExactMatrix(1, 2), ExactMatrix(1, 3)};
  CHECK_THROWS_AS(stack_rows(ragged), DimensionMismatch);
}

TEST_CASE("stacking never lowers rank and intersects kernels") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<ExactMatrix> parts{random_low_rank(3, 6, 2, rng), random_low_rank(2, 6, 1, rng),
                                   random_low_rank(4, 6, 3, rng)};
    ExactMatrix s = stack_rows(parts);
    for (const auto& p : parts) CHECK(rank(s) >= rank(p));
    for (const auto& v : kernel_basis(s))
      for (const auto& p : parts) CHECK(is_zero(mat_vec(p, v)));
  }
}

TEST_CASE("RowSpace membership") {
  RowSpace span(3);
  CHECK(span.insert(Vector{1, I, 0}));
  CHECK(span.insert(Vector{0, 1, 1}));
  CHECK_FALSE(span.insert(Vector{2, 2 * I + 1, 1}));
  CHECK(span.contains(Vector{1, I + 3, 3}));
  CHECK_FALSE(span.contains(Vector{0, 0, 1}));
  CHECK(span.size() == 2);
}

TEST_CASE("matrix shape errors") {
  CHECK_THROWS_AS(ExactMatrix(2, 3) * ExactMatrix(2, 3), DimensionMismatch);
  CHECK_THROWS_AS(ExactMatrix(2, 3) + ExactMatrix(3, 2), DimensionMismatch);
  CHECK_THROWS_AS(mat_vec(ExactMatrix(2, 3), Vector(2)), DimensionMismatch);
}
