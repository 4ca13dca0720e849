#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "spinc/clifford.hpp"
#include "spinc/holonomy.hpp"

namespace spinc {

/// Coefficients b_ij (0-based i < j) with B = sum b_ij E_ij.
struct BivectorDecomposition {
  Signature sig;
  std::map<std::pair<int, int>, Rational> coeffs;  // zero coefficients omitted

  /// sum b_ij E_ij
  SOElement reconstruct() const;
};

/// b_ij = -eps_j B(i,j). Throws InvalidInput if b is not in so(p,q).
BivectorDecomposition decompose_so(const SOElement& b);

/// rho(B) = sum_{i<j} b_ij / 2 * Phi(e_i) Phi(e_j): the spin representation of
/// so(p,q) transported through the inverse of the double cover's derivative,
/// which sends E_ij to e_i e_j / 2.
/// Throws DimensionMismatch when signatures differ.
ExactMatrix spin_transfer(const CliffordRep& rep, const SOElement& b);

/// rho(B) + (i t / 2) Id. Invariant spinors of (B, it) are exactly its kernel.
ExactMatrix spinc_operator(const CliffordRep& rep, const SpinCGenerator& g);

struct InvariantSpaceResult {
  std::size_t n_invariants = 0;
  std::vector<SpinorVector> basis;  // canonical normal form
  Signature ambient;
  std::optional<HolonomySpec> spec;
};

/// Joint kernel of spinc_operator over all generators, computed by
/// successive restriction: the current kernel basis K is replaced by K
/// times the kernel of (operator * K). Every basis vector is re-checked
/// against every operator before returning (std::logic_error if that ever
/// fails). An empty generator list gives the whole spinor space.
InvariantSpaceResult invariant_space(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens);

/// Same joint kernel computed as the kernel of the vertically stacked
/// operators. Only practical for small spinor spaces.
std::vector<SpinorVector> invariant_space_stacked(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens);

/// Resolves the spec, builds the ambient representation and computes N.
InvariantSpaceResult invariants_for(const HolonomySpec& spec, const FormLibrary& forms);

/// True iff the given generators have exactly span{u^+, u^-} as invariant
/// space. The overload without a generator list uses the su(p',q') image.
bool su_fixed_vectors_check(const CliffordRep& rep, int p_prime, int q_prime);
bool su_fixed_vectors_check(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens);

/// One line of the holonomy table reproduction.
struct Table1Row {
  HolonomySpec spec;
  std::string printed_ambient;
  Signature computed_ambient;
  std::size_t algebra_dimension = 0;
  std::size_t expected_n = 0;
  std::size_t computed_n = 0;
  bool match = false;
};

/// Rows to evaluate for a parameter bound: SU, U and Sp for every (p', q')
/// with 1 <= p' + q' <= bound, then the six exceptional rows.
std::vector<HolonomySpec> table1_specs(int bound);

Table1Row table1_row(const HolonomySpec& spec, const FormLibrary& forms);

std::vector<Table1Row> table1(int bound, const FormLibrary& forms);

}  // namespace spinc
