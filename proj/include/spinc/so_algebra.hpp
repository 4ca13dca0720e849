#pragma once

#include <vector>

#include "spinc/clifford.hpp"
#include "spinc/exact_matrix.hpp"

namespace spinc {

/// Element of so(p,q): an m x m real rational matrix B with B^T G + G B = 0,
/// G = diag(eps_1, ..., eps_m).
struct SOElement {
  Signature sig;
  ExactMatrix mat;

  /// Checks shape, realness and metric antisymmetry.
  bool satisfies_invariant() const;
  /// Throws InvalidInput unless satisfies_invariant().
  void validate() const;

  friend bool operator==(const SOElement&, const SOElement&) = default;
};

/// Element (B, i t) of so(p,q) + iR.
struct SpinCGenerator {
  SOElement b;
  Rational t{0};

  friend bool operator==(const SpinCGenerator&, const SpinCGenerator&) = default;
};

/// G = diag(eps_1, ..., eps_m)
ExactMatrix metric(const Signature& sig);

/// E_ij = -eps_j D_ij + eps_i D_ji for 0-based i < j.
SOElement so_basis_element(const Signature& sig, int i, int j);

/// {E_ij : i < j} in lexicographic order, m(m-1)/2 elements.
std::vector<SOElement> so_basis(const Signature& sig);

/// Lie bracket of two elements of the same so(p,q).
SOElement bracket(const SOElement& a, const SOElement& b);

/// Flattened row-major entries of the matrix, for span computations.
Vector flatten(const ExactMatrix& m);

/// True iff every pairwise bracket lies in the rational span of `gens`.
bool is_lie_closed(const std::vector<SOElement>& gens);

}  // namespace spinc
