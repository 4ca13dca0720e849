#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "spinc/exact_matrix.hpp"

namespace spinc {

/// Signature (p, q): the first p basis vectors are timelike (eps = -1),
/// the remaining q spacelike (eps = +1).
struct Signature {
  int p = 0;
  int q = 0;

  int m() const { return p + q; }
  int n() const { return m() / 2; }
  std::size_t spinor_dim() const { return std::size_t{1} << n(); }
  /// eps_k for a 0-based index k.
  int epsilon(int k) const { return k < p ? -1 : 1; }
  bool valid() const { return p >= 0 && q >= 0 && m() >= 1; }
  /// Throws InvalidSignature unless valid().
  void validate() const;
  std::string to_string() const;

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// The 2x2 building blocks of the Kronecker construction.
namespace pauli {
ExactMatrix U();  // [[0,i],[i,0]]
ExactMatrix V();  // [[0,-1],[1,0]]
ExactMatrix E();  // identity
ExactMatrix T();  // diag(-1,1)
}  // namespace pauli

/// Matrices Phi(e_1), ..., Phi(e_m) acting on C^(2^n).
///
/// Even m = 2n: generator 2j-1 (resp. 2j) is tau * E x ... x E x U x T x ... x T
/// (resp. V in place of U) with j-1 trailing T factors, tau = i on timelike
/// directions and 1 on spacelike ones. Odd m: the first m-1 generators are
/// those of the even signature one dimension down, and e_m is the first
/// component i T x ... x T of the doubled representation. When q = 0 the
/// dropped direction is timelike and e_m picks up the extra tau = i, giving
/// -T x ... x T.
///
/// These matrices satisfy Phi(e_i)Phi(e_j) + Phi(e_j)Phi(e_i) = -2 eps_i delta_ij Id.
class CliffordRep {
 public:
  const Signature& signature() const { return sig_; }
  std::size_t spinor_dim() const { return sig_.spinor_dim(); }
  const std::vector<ExactMatrix>& generators() const { return gens_; }
  /// Phi(e_k), 0-based k.
  const ExactMatrix& gamma(int k) const { return gens_.at(static_cast<std::size_t>(k)); }
  /// Phi(e_k) Phi(e_l), 0-based.
  ExactMatrix product(int k, int l) const { return gamma(k) * gamma(l); }

  friend CliffordRep build_rep(Signature sig);

 private:
  CliffordRep(Signature sig, std::vector<ExactMatrix> gens) : sig_(sig), gens_(std::move(gens)) {}

  Signature sig_;
  std::vector<ExactMatrix> gens_;
};

/// Throws InvalidSignature for m = 0 or negative counts.
CliffordRep build_rep(Signature sig);

/// Coordinates in the basis u(nu_n, ..., nu_1) = u(nu_n) x ... x u(nu_1).
/// nu = +1 is bit 0 and nu = -1 is bit 1; u(nu_n) is the most significant
/// bit. So u(1,...,1) is index 0 and u(-1,...,-1) the last index.
struct SpinorVector {
  Vector coords;

  std::size_t dim() const { return coords.size(); }
  friend bool operator==(const SpinorVector&, const SpinorVector&) = default;
};

/// Basis spinor u(nu_n, ..., nu_1); `nus` lists nu_n first. Each entry must be +-1.
SpinorVector basis_spinor(const std::vector<int>& nus);
/// Basis spinor with the given index in C^(2^n).
SpinorVector basis_spinor(std::size_t dim, std::size_t index);
/// u(1, ..., 1)
SpinorVector u_plus(const Signature& sig);
/// u(-1, ..., -1)
SpinorVector u_minus(const Signature& sig);

/// (sum_k x_k Phi(e_k)) v. Throws DimensionMismatch on length mismatch.
SpinorVector clifford_multiply(const CliffordRep& rep, const Vector& x, const SpinorVector& v);

/// Central part of spin^c acting on spinors: v -> i t v.
SpinorVector spinc_scalar_action(const Rational& t, const SpinorVector& v);

/// <v,w> = i^(p(p-1)/2) (e_1 ... e_p v, w) with (z,z') = sum z_k conj(z'_k).
/// Empty Clifford product (identity) when p = 0.
GaussianRational hermitian_form(const CliffordRep& rep, const SpinorVector& v, const SpinorVector& w);

/// Standard hermitian product (z,z') = sum z_k conj(z'_k).
GaussianRational standard_product(const Vector& z, const Vector& w);

}  // namespace spinc
