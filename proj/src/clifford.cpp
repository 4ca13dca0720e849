#include "spinc/clifford.hpp"

#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

namespace spinc {

void Signature::validate() const {
  if (!valid()) throw InvalidSignature("invalid signature " + to_string() + ": need p, q >= 0 and p + q >= 1");
}

std::string Signature::to_string() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

namespace pauli {
ExactMatrix U() { return {{0, GaussianRational::i()}, {GaussianRational::i(), 0}}; }
ExactMatrix V() { return {{0, -1}, {1, 0}}; }
ExactMatrix E() { return ExactMatrix::identity(2); }
ExactMatrix T() { return {{-1, 0}, {0, 1}}; }
}  // namespace pauli

namespace {

GaussianRational tau(const Signature& sig, int k) {
  return sig.epsilon(k) < 0 ? GaussianRational::i() : GaussianRational(1);
}

// E^(n-j) x middle x T^(j-1), j is 1-based
ExactMatrix slot_product(int n, int j, const ExactMatrix& middle) {
  std::vector<ExactMatrix> factors;
  factors.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n - j; ++k) factors.push_back(pauli::E());
  factors.push_back(middle);
  for (int k = 0; k < j - 1; ++k) factors.push_back(pauli::T());
  return kronecker(factors);
}

ExactMatrix t_chain(int n) {
  std::vector<ExactMatrix> factors(static_cast<std::size_t>(n), pauli::T());
  return kronecker(factors);
}

std::vector<ExactMatrix> even_generators(const Signature& sig) {
  const int n = sig.n();
  std::vector<ExactMatrix> gens;
  gens.reserve(static_cast<std::size_t>(sig.m()));
  for (int j = 1; j <= n; ++j) {
    gens.push_back(tau(sig, 2 * j - 2) * slot_product(n, j, pauli::U()));
    gens.push_back(tau(sig, 2 * j - 1) * slot_product(n, j, pauli::V()));
  }
  return gens;
}

}  // namespace

CliffordRep build_rep(Signature sig) {
  sig.validate();
  if (sig.m() % 2 == 0) return {sig, even_generators(sig)};

  // odd: drop the last direction, then append the first component of e_m
  Signature lower = sig.q > 0 ? Signature{sig.p, sig.q - 1} : Signature{sig.p - 1, 0};
  std::vector<ExactMatrix> gens = lower.m() == 0 ? std::vector<ExactMatrix>{} : even_generators(lower);
  gens.push_back(tau(sig, sig.m() - 1) * GaussianRational::i() * t_chain(sig.n()));
  return {sig, std::move(gens)};
}

SpinorVector basis_spinor(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionMismatch("basis_spinor: index out of range");
  SpinorVector v{Vector(dim)};
  v.coords[index] = 1;
  return v;
}

SpinorVector basis_spinor(const std::vector<int>& nus) {
  std::size_t index = 0;
  for (int nu : nus) {
    if (nu != 1 && nu != -1) throw InvalidInput("basis_spinor: nu must be +1 or -1");
    index = (index << 1) | (nu == -1 ? 1U : 0U);
  }
  return basis_spinor(std::size_t{1} << nus.size(), index);
}

SpinorVector u_plus(const Signature& sig) { return basis_spinor(sig.spinor_dim(), 0); }
SpinorVector u_minus(const Signature& sig) { return basis_spinor(sig.spinor_dim(), sig.spinor_dim() - 1); }

SpinorVector clifford_multiply(const CliffordRep& rep, const Vector& x, const SpinorVector& v) {
  if (x.size() != static_cast<std::size_t>(rep.signature().m()))
    throw DimensionMismatch("clifford_multiply: coefficient vector has " + std::to_string(x.size()) +
                            " entries, signature needs " + std::to_string(rep.signature().m()));
  if (v.dim() != rep.spinor_dim()) throw DimensionMismatch("clifford_multiply: spinor dimension differs");
  SpinorVector out{Vector(v.dim())};
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k].is_zero()) continue;
    Vector term = mat_vec(rep.generators()[k], v.coords);
    for (std::size_t r = 0; r < term.size(); ++r)
      if (!term[r].is_zero()) out.coords[r] += x[k] * term[r];
  }
  return out;
}

SpinorVector spinc_scalar_action(const Rational& t, const SpinorVector& v) {
  return {scale(v.coords, GaussianRational(Rational(0), t))};
}

GaussianRational standard_product(const Vector& z, const Vector& w) {
  if (z.size() != w.size()) throw DimensionMismatch("standard_product: length mismatch");
  GaussianRational s;
  for (std::size_t k = 0; k < z.size(); ++k)
    if (!z[k].is_zero() && !w[k].is_zero()) s += z[k] * w[k].conj();
  return s;
}

GaussianRational hermitian_form(const CliffordRep& rep, const SpinorVector& v, const SpinorVector& w) {
  if (v.dim() != rep.spinor_dim() || w.dim() != rep.spinor_dim())
    throw DimensionMismatch("hermitian_form: spinor dimension differs");
  const long p = rep.signature().p;
  Vector pv = v.coords;
  // e_1 ... e_p v: apply e_p first
  for (long k = p; k-- > 0;) pv = mat_vec(rep.gamma(static_cast<int>(k)), pv);
  return i_power(p * (p - 1) / 2) * standard_product(pv, w.coords);
}

}  // namespace spinc
