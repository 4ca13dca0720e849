#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "spinc/so_algebra.hpp"

namespace spinc {

/// Multi-index of 0-based coordinates.
using MultiIndex = std::vector<int>;

/// k-form on R^(p,q) with rational coefficients on e^I, I strictly increasing.
class ExteriorForm {
 public:
  ExteriorForm(int degree, Signature sig) : degree_(degree), sig_(sig) {}

  int degree() const { return degree_; }
  const Signature& signature() const { return sig_; }
  const std::map<MultiIndex, Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  /// Adds c * e^{idx[0]} ^ ... ^ e^{idx[k-1]}. Indices may come in any order;
  /// they are sorted and the permutation sign applied. Repeated indices
  /// contribute nothing.
  void add(MultiIndex idx, const Rational& c);
  /// Coefficient of the sorted multi-index `idx` (0 when absent).
  Rational coeff(const MultiIndex& idx) const;

  friend bool operator==(const ExteriorForm&, const ExteriorForm&) = default;

 private:
  int degree_;
  Signature sig_;
  std::map<MultiIndex, Rational> coeffs_;  // no zero coefficients stored
};

/// Derivation action (B.phi)(X_1..X_k) = -sum_r phi(X_1, .., B X_r, .., X_k).
/// Throws DimensionMismatch when signatures differ.
ExteriorForm exterior_action(const SOElement& b, const ExteriorForm& phi);

/// Same action for an arbitrary m x m matrix acting on the coordinate space;
/// coefficients are returned over Q(i) keyed by sorted multi-index.
std::map<MultiIndex, GaussianRational> exterior_action(const ExactMatrix& b, const ExteriorForm& phi);

/// Basis of {B in so(p,q) : B.phi = 0}, via an exact kernel over the E_ij
/// coordinates. Output is in the canonical kernel normal form.
std::vector<SOElement> stabilizer_of_form(const Signature& sig, const ExteriorForm& phi);

/// Basis of {A in so(m,C) : A.phi = 0} for the complexification of phi,
/// where so(m,C) = {A : A^T + A = 0}. Complex m x m matrices.
std::vector<ExactMatrix> complex_stabilizer_of_form(const ExteriorForm& phi);

/// Realification so(m,C) -> so(m,m). A complex generator A + iB acts on
/// (y, x) in R^(2m) as [[A, B], [-B, A]], preserving Re(sum z_k w_k) whose
/// signature is (m, m) with the y-block timelike. Each input yields two
/// outputs: the images of A + iB and of i(A + iB).
/// Throws InvalidInput if some input is not complex antisymmetric.
std::vector<SOElement> realify_complex_so(const std::vector<ExactMatrix>& complex_generators);

// Calibration-form files.
//
// Plain text, one directive per line, '#' starts a comment:
//   name <identifier>
//   degree <k>
//   signature <p>,<q>
//   <i_1> <i_2> ... <i_k> <coefficient>
// Indices are 1-based. Coefficients are rationals ("1", "-1", "3/2").

/// Parsed form plus its declared name.
struct NamedForm {
  std::string name;
  ExteriorForm form;
};

/// Throws std::runtime_error with a line number on malformed input.
NamedForm parse_form(std::istream& in);
NamedForm load_form(const std::filesystem::path& path);
void write_form(std::ostream& out, const NamedForm& f);

}  // namespace spinc
