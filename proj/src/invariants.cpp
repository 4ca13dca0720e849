#include "spinc/invariants.hpp"

#include <stdexcept>

#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

namespace spinc {

SOElement BivectorDecomposition::reconstruct() const {
  const auto m = static_cast<std::size_t>(sig.m());
  SOElement out{sig, ExactMatrix(m, m)};
  for (const auto& [ij, c] : coeffs) out.mat += GaussianRational(c) * so_basis_element(sig, ij.first, ij.second).mat;
  return out;
}

BivectorDecomposition decompose_so(const SOElement& b) {
  b.validate();
  BivectorDecomposition d{b.sig, {}};
  for (int i = 0; i < b.sig.m(); ++i)
    for (int j = i + 1; j < b.sig.m(); ++j) {
      const Rational& x = b.mat(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).re();
      if (sgn(x) != 0) d.coeffs.emplace(std::pair{i, j}, b.sig.epsilon(j) > 0 ? Rational(-x) : x);
    }
  return d;
}

ExactMatrix spin_transfer(const CliffordRep& rep, const SOElement& b) {
  if (!(b.sig == rep.signature()))
    throw DimensionMismatch("spin_transfer: element of so" + b.sig.to_string() + " on spinors of " +
                            rep.signature().to_string());
  const std::size_t d = rep.spinor_dim();
  ExactMatrix out(d, d);
  for (const auto& [ij, c] : decompose_so(b).coeffs)
    out += GaussianRational(c / 2) * rep.product(ij.first, ij.second);
  return out;
}

ExactMatrix spinc_operator(const CliffordRep& rep, const SpinCGenerator& g) {
  ExactMatrix op = spin_transfer(rep, g.b);
  if (sgn(g.t) != 0) {
    const GaussianRational shift(Rational(0), g.t / 2);
    for (std::size_t k = 0; k < op.rows(); ++k) op(k, k) += shift;
  }
  return op;
}

namespace {

std::vector<SpinorVector> as_spinors(std::vector<Vector> vs) {
  std::vector<SpinorVector> out;
  out.reserve(vs.size());
  for (auto& v : vs) out.push_back({std::move(v)});
  return out;
}

}  // namespace

InvariantSpaceResult invariant_space(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens) {
  const std::size_t d = rep.spinor_dim();
  std::vector<ExactMatrix> ops;
  ops.reserve(gens.size());
  for (const auto& g : gens) ops.push_back(spinc_operator(rep, g));

  std::vector<Vector> basis(d, Vector(d));
  for (std::size_t k = 0; k < d; ++k) basis[k][k] = 1;
  for (const auto& op : ops) {
    if (basis.empty()) break;
    const ExactMatrix k_mat = ExactMatrix::from_columns(basis, d);
    const ExactMatrix restricted = op * k_mat;
    if (restricted.is_zero()) continue;
    std::vector<Vector> next;
    for (const auto& y : kernel_basis(restricted)) next.push_back(mat_vec(k_mat, y));
    basis = canonical_basis(next, d);
  }

  for (const auto& v : basis)
    for (const auto& op : ops)
      if (!is_zero(mat_vec(op, v))) throw std::logic_error("invariant_space: kernel certificate failed");

  InvariantSpaceResult res;
  res.n_invariants = basis.size();
  res.basis = as_spinors(std::move(basis));
  res.ambient = rep.signature();
  return res;
}

std::vector<SpinorVector> invariant_space_stacked(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens) {
  std::vector<ExactMatrix> ops;
  for (const auto& g : gens) ops.push_back(spinc_operator(rep, g));
  if (ops.empty()) ops.push_back(ExactMatrix(0, rep.spinor_dim()));
  return as_spinors(kernel_basis(stack_rows(ops)));
}

InvariantSpaceResult invariants_for(const HolonomySpec& spec, const FormLibrary& forms) {
  std::vector<SpinCGenerator> gens = resolve(spec, forms);
  InvariantSpaceResult res = invariant_space(build_rep(spec.ambient()), gens);
  res.spec = spec;
  return res;
}

bool su_fixed_vectors_check(const CliffordRep& rep, const std::vector<SpinCGenerator>& gens) {
  InvariantSpaceResult res = invariant_space(rep, gens);
  if (res.n_invariants != 2) return false;
  const Signature& sig = rep.signature();
  std::vector<Vector> expected{u_plus(sig).coords, u_minus(sig).coords};
  std::vector<Vector> got;
  for (const auto& v : res.basis) got.push_back(v.coords);
  return canonical_basis(expected, rep.spinor_dim()) == got;
}

bool su_fixed_vectors_check(const CliffordRep& rep, int p_prime, int q_prime) {
  if (!(rep.signature() == Signature{2 * p_prime, 2 * q_prime}))
    throw DimensionMismatch("su_fixed_vectors_check: representation is not for (2p', 2q')");
  std::vector<SpinCGenerator> gens;
  for (auto& e : embed_unitary(p_prime, q_prime).su) gens.push_back({std::move(e), Rational(0)});
  return su_fixed_vectors_check(rep, gens);
}

std::vector<HolonomySpec> table1_specs(int bound) {
  std::vector<HolonomySpec> specs;
  for (Family f : {Family::SU, Family::U, Family::Sp})
    for (int total = 1; total <= bound; ++total)
      for (int pp = total; pp >= 0; --pp) specs.push_back({f, pp, total - pp});
  for (Family f : {Family::G2, Family::G2split, Family::G2complex, Family::Spin7, Family::Spin43, Family::Spin7complex})
    specs.push_back({f, 0, 0});
  return specs;
}

Table1Row table1_row(const HolonomySpec& spec, const FormLibrary& forms) {
  std::vector<SpinCGenerator> gens = resolve(spec, forms);
  Table1Row row;
  row.spec = spec;
  row.printed_ambient = spec.printed_ambient();
  row.computed_ambient = spec.ambient();
  std::vector<SOElement> elems;
  for (const auto& g : gens) elems.push_back(g.b);
  RowSpace span(static_cast<std::size_t>(row.computed_ambient.m() * row.computed_ambient.m()) + 1);
  for (const auto& g : gens) {
    Vector v = flatten(g.b.mat);
    v.emplace_back(g.t);
    span.insert(v);
  }
  row.algebra_dimension = span.size();
  row.expected_n = spec.expected_invariants().value_or(0);
  row.computed_n = invariant_space(build_rep(row.computed_ambient), gens).n_invariants;
  row.match = row.computed_n == row.expected_n;
  return row;
}

std::vector<Table1Row> table1(int bound, const FormLibrary& forms) {
  std::vector<Table1Row> rows;
  for (const auto& spec : table1_specs(bound)) rows.push_back(table1_row(spec, forms));
  return rows;
}

}  // namespace spinc
