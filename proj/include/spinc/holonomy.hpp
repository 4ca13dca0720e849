#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinc/exterior.hpp"
#include "spinc/so_algebra.hpp"

namespace spinc {

enum class Family { SO, SU, U, Sp, G2, G2split, G2complex, Spin7, Spin43, Spin7complex };

std::string_view family_name(Family f);
/// Case-sensitive match against family_name; nullopt when unknown.
std::optional<Family> parse_family(std::string_view name);
/// All families, in declaration order.
const std::vector<Family>& all_families();
/// Families whose algebra depends on (p', q').
bool takes_params(Family f);

/// One holonomy algebra: a family plus (p', q') where applicable.
/// For SO the params are the ambient signature itself.
struct HolonomySpec {
  Family family = Family::SO;
  int p_prime = 0;
  int q_prime = 0;

  /// Signature of the ambient so(p,q) the algebra is realized in:
  /// SU/U -> (2p',2q'), Sp -> (4p',4q'), G2 -> (0,7), G2split -> (4,3),
  /// G2complex -> (7,7), Spin7 -> (0,8), Spin43 -> (4,4), Spin7complex -> (8,8).
  Signature ambient() const;
  /// Ambient as printed in the published holonomy table ("SO(7)", ...).
  std::string printed_ambient() const;
  /// Real dimension of the algebra.
  std::size_t expected_dimension() const;
  /// Published number of parallel spinors (SO is not in the table: returns
  /// nullopt).
  std::optional<std::size_t> expected_invariants() const;
  std::string label() const;  // e.g. "SU(1,1)", "G2"

  friend bool operator==(const HolonomySpec&, const HolonomySpec&) = default;
};

/// Block embedding u(p',q') -> so(2p',2q'): entry a + ib of the complex
/// matrix becomes the 2x2 block [[a, b], [-b, a]].
ExactMatrix realify_unitary(const ExactMatrix& complex_matrix);

/// Basis of su(p',q'): traceless C with C* G' + G' C = 0, G' = diag(-1..,+1..).
std::vector<ExactMatrix> su_basis(int p_prime, int q_prime);

struct UnitaryEmbedding {
  std::vector<SOElement> su;  // (p'+q')^2 - 1 elements, all t = 0
  SpinCGenerator central;     // rotation of the first complex line, t = 1
};

/// Images of su(p',q') in so(2p',2q') and the central u(1) generator.
///
/// The central generator is (J, 1) with J = D_21 - D_12, the rotation
/// e_1 -> e_2 of the first complex line. J coincides with E_12 when the line
/// is spacelike and equals -E_12 when it is timelike; in both cases
/// rho(J) u^+ = i/2 u^+ and rho(J) u^- = -i/2 u^-.
/// Throws InvalidParameter when p' + q' = 0.
UnitaryEmbedding embed_unitary(int p_prime, int q_prime);

/// Basis of sp(p',q') in so(4p',4q'): quaternionic anti-hermitian matrices
/// for G' = diag(-1..,+1..), mapped quaternion -> 2x2 complex -> 4x4 real.
/// Throws InvalidParameter when p' + q' = 0.
std::vector<SOElement> embed_symplectic(int p_prime, int q_prime);

/// The four calibration forms, loaded from a directory holding g2.form,
/// g2split.form, spin7.form and spin43.form.
class FormLibrary {
 public:
  /// Throws std::runtime_error when a file is missing or malformed, or when
  /// its degree/signature differs from what the family needs.
  static FormLibrary load(const std::filesystem::path& dir);
  /// Directory configured at build time.
  static std::filesystem::path default_dir();

  const ExteriorForm& g2() const { return g2_; }
  const ExteriorForm& g2_split() const { return g2_split_; }
  const ExteriorForm& spin7() const { return spin7_; }
  const ExteriorForm& spin43() const { return spin43_; }

 private:
  FormLibrary(ExteriorForm g2, ExteriorForm g2s, ExteriorForm s7, ExteriorForm s43)
      : g2_(std::move(g2)), g2_split_(std::move(g2s)), spin7_(std::move(s7)), spin43_(std::move(s43)) {}

  ExteriorForm g2_;
  ExteriorForm g2_split_;
  ExteriorForm spin7_;
  ExteriorForm spin43_;
};

/// Generator list (a vector-space basis of the algebra) for one spec.
/// t = 0 everywhere except the U family's central generator.
/// Throws InvalidParameter for p' + q' = 0 and UnsupportedSpec for
/// parameters that do not apply to the family.
std::vector<SpinCGenerator> resolve(const HolonomySpec& spec, const FormLibrary& forms);

}  // namespace spinc
