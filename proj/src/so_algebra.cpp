#include "spinc/so_algebra.hpp"

#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

namespace spinc {

ExactMatrix metric(const Signature& sig) {
  ExactMatrix g(static_cast<std::size_t>(sig.m()), static_cast<std::size_t>(sig.m()));
  for (int k = 0; k < sig.m(); ++k) g(static_cast<std::size_t>(k), static_cast<std::size_t>(k)) = sig.epsilon(k);
  return g;
}

bool SOElement::satisfies_invariant() const {
  const auto m = static_cast<std::size_t>(sig.m());
  if (!sig.valid() || mat.rows() != m || mat.cols() != m || !mat.is_real()) return false;
  // (B^T G + G B)_{rc} = eps_c B_{cr} + eps_r B_{rc}
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = r; c < m; ++c) {
      GaussianRational s = GaussianRational(sig.epsilon(static_cast<int>(c))) * mat(c, r) +
                           GaussianRational(sig.epsilon(static_cast<int>(r))) * mat(r, c);
      if (!s.is_zero()) return false;
    }
  return true;
}

void SOElement::validate() const {
  if (!satisfies_invariant())
    throw InvalidInput("matrix is not an element of so" + sig.to_string());
}

SOElement so_basis_element(const Signature& sig, int i, int j) {
  const auto m = static_cast<std::size_t>(sig.m());
  ExactMatrix e(m, m);
  e(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = -sig.epsilon(j);
  e(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = sig.epsilon(i);
  return {sig, std::move(e)};
}

std::vector<SOElement> so_basis(const Signature& sig) {
  std::vector<SOElement> out;
  for (int i = 0; i < sig.m(); ++i)
    for (int j = i + 1; j < sig.m(); ++j) out.push_back(so_basis_element(sig, i, j));
  return out;
}

SOElement bracket(const SOElement& a, const SOElement& b) {
  if (!(a.sig == b.sig)) throw DimensionMismatch("bracket: signatures differ");
  return {a.sig, commutator(a.mat, b.mat)};
}

Vector flatten(const ExactMatrix& m) { return m.entries(); }

bool is_lie_closed(const std::vector<SOElement>& gens) {
  if (gens.empty()) return true;
  const std::size_t dim = gens.front().mat.rows() * gens.front().mat.cols();
  RowSpace span(dim);
  for (const auto& g : gens) span.insert(flatten(g.mat));
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (!span.contains(flatten(commutator(gens[a].mat, gens[b].mat)))) return false;
  return true;
}

}  // namespace spinc
