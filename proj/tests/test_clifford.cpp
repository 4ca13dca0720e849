#include <doctest.h>

#include "spinc/clifford.hpp"
#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

using namespace spinc;

namespace {

const GaussianRational I = GaussianRational::i();

std::vector<Signature> all_signatures(int max_m) {
  std::vector<Signature> out;
  for (int m = 1; m <= max_m; ++m)
    for (int p = 0; p <= m; ++p) out.push_back({p, m - p});
  return out;
}

}  // namespace

TEST_CASE("build_rep smallest cases") {
  auto r02 = build_rep({0, 2});
  REQUIRE(r02.generators().size() == 2);
  CHECK(r02.gamma(0) == pauli::U());
  CHECK(r02.gamma(1) == pauli::V());

  auto r11 = build_rep({1, 1});
  CHECK(r11.gamma(0) == I * pauli::U());
  CHECK(r11.gamma(0) == ExactMatrix{{0, -1}, {-1, 0}});
  CHECK(r11.gamma(1) == pauli::V());

  auto r03 = build_rep({0, 3});
  REQUIRE(r03.generators().size() == 3);
  CHECK(r03.gamma(0) == pauli::U());
  CHECK(r03.gamma(1) == pauli::V());
  CHECK(r03.gamma(2) == I * pauli::T());

  CHECK_THROWS_AS(build_rep({0, 0}), InvalidSignature);
  CHECK_THROWS_AS(build_rep({-1, 2}), InvalidSignature);
}

TEST_CASE("one-dimensional signatures act on C^1") {
  CHECK(build_rep({0, 1}).gamma(0) == ExactMatrix{{I}});
  CHECK(build_rep({1, 0}).gamma(0) == ExactMatrix{{-1}});
}

TEST_CASE("generator count and size") {
  for (const auto& sig : all_signatures(8)) {
    auto rep = build_rep(sig);
    CHECK(rep.generators().size() == static_cast<std::size_t>(sig.m()));
    for (const auto& g : rep.generators()) {
      CHECK(g.rows() == (std::size_t{1} << (sig.m() / 2)));
      CHECK(g.is_square());
    }
  }
}

TEST_CASE("anticommutation relation, every signature with m <= 8") {
  for (const auto& sig : all_signatures(8)) {
    auto rep = build_rep(sig);
    const auto id = ExactMatrix::identity(rep.spinor_dim());
    for (int i = 0; i < sig.m(); ++i)
      for (int j = 0; j < sig.m(); ++j) {
        ExactMatrix ac = rep.product(i, j) + rep.product(j, i);
        if (i == j)
          CHECK(ac == GaussianRational(-2 * sig.epsilon(i)) * id);
        else
          CHECK(ac.is_zero());
      }
  }
}

TEST_CASE("odd construction extends the even one below it") {
  for (const auto& sig : all_signatures(7)) {
    if (sig.m() % 2 == 0 || sig.m() == 1) continue;
    auto rep = build_rep(sig);
    Signature lower = sig.q > 0 ? Signature{sig.p, sig.q - 1} : Signature{sig.p - 1, 0};
    auto low = build_rep(lower);
    for (int k = 0; k + 1 < sig.m(); ++k) CHECK(rep.gamma(k) == low.gamma(k));
    if (sig.q > 0) {
      std::vector<ExactMatrix> ts(static_cast<std::size_t>(sig.n()), pauli::T());
      ExactMatrix chain = ExactMatrix::identity(1);
      for (const auto& t : ts) chain = kronecker(chain, t);
      CHECK(rep.gamma(sig.m() - 1) == I * chain);
    }
  }
}

TEST_CASE("spinor basis encoding") {
  CHECK(basis_spinor({1, 1}).coords == Vector{1, 0, 0, 0});
  CHECK(basis_spinor({1, -1}).coords == Vector{0, 1, 0, 0});
  CHECK(basis_spinor({-1, 1}).coords == Vector{0, 0, 1, 0});
  CHECK(u_minus({0, 4}) == basis_spinor({-1, -1}));
  CHECK(u_plus({3, 3}).coords.front() == GaussianRational(1));
  CHECK_THROWS_AS(basis_spinor(std::vector<int>{1, 0}), InvalidInput);
}

TEST_CASE("clifford_multiply") {
  auto rep = build_rep({0, 2});
  const SpinorVector up = basis_spinor({1});
  const SpinorVector um = basis_spinor({-1});
  // U (1,0)^T = (0, i)^T
  CHECK(clifford_multiply(rep, Vector{1, 0}, up) == SpinorVector{scale(um.coords, I)});
  CHECK(is_zero(clifford_multiply(rep, Vector{0, 0}, up).coords));
  // e1 . (e2 . u^+) = i u^+
  SpinorVector e2u = clifford_multiply(rep, Vector{0, 1}, up);
  CHECK(clifford_multiply(rep, Vector{1, 0}, e2u) == SpinorVector{scale(up.coords, I)});
  // linear in x, complex coefficients allowed
  SpinorVector lin = clifford_multiply(rep, Vector{I, 2}, up);
  SpinorVector sum{scale(clifford_multiply(rep, Vector{1, 0}, up).coords, I)};
  SpinorVector two = clifford_multiply(rep, Vector{0, 1}, up);
  for (std::size_t k = 0; k < 2; ++k) sum.coords[k] += GaussianRational(2) * two.coords[k];
  CHECK(lin == sum);
  CHECK_THROWS_AS(clifford_multiply(rep, Vector{1, 0, 0}, up), DimensionMismatch);
}

TEST_CASE("spinc_scalar_action") {
  const SpinorVector v = basis_spinor({1, -1});
  // t = 0: the central part acts trivially, v + i*0*v = v
  SpinorVector zero = spinc_scalar_action(0, v);
  CHECK(is_zero(zero.coords));
  CHECK(spinc_scalar_action(1, u_plus({0, 2})).coords == Vector{I, 0});
  CHECK(spinc_scalar_action(-2, v).coords == scale(v.coords, GaussianRational(-2) * I));
}

TEST_CASE("hermitian_form") {
  SUBCASE("p = 0 is the standard product") {
    auto rep = build_rep({0, 4});
    SpinorVector v{Vector{1, I, 0, 2}};
    SpinorVector w{Vector{I, 1, 3, -1}};
    CHECK(hermitian_form(rep, v, w) == standard_product(v.coords, w.coords));
    CHECK(hermitian_form(build_rep({0, 2}), u_plus({0, 2}), u_plus({0, 2})) == GaussianRational(1));
  }
  SUBCASE("(2,0) is indefinite on the basis") {
    // i^1 Phi(e1) Phi(e2) = diag(1, -1) evaluated by hand
    auto rep = build_rep({2, 0});
    CHECK(hermitian_form(rep, basis_spinor({1}), basis_spinor({1})) == GaussianRational(1));
    CHECK(hermitian_form(rep, basis_spinor({-1}), basis_spinor({-1})) == GaussianRational(-1));
  }
  SUBCASE("conjugate-linear in the second slot") {
    auto rep = build_rep({1, 3});
    SpinorVector v{Vector{1, 0, I, 0}};
    SpinorVector w{Vector{0, 2, 1, I}};
    SpinorVector iw{scale(w.coords, I)};
    CHECK(hermitian_form(rep, v, iw) == -I * hermitian_form(rep, v, w));
  }
}

TEST_CASE("adjointness <X.v, w> = (-1)^(p+1) <v, X.w>, m <= 6, full basis") {
  for (const auto& sig : all_signatures(6)) {
    auto rep = build_rep(sig);
    const std::size_t d = rep.spinor_dim();
    const GaussianRational sign(sig.p % 2 == 0 ? -1 : 1);
    // real coefficient vectors: each generator plus one mixed combination
    std::vector<Vector> xs;
    for (int k = 0; k < sig.m(); ++k) {
      Vector x(static_cast<std::size_t>(sig.m()));
      x[static_cast<std::size_t>(k)] = 1;
      xs.push_back(x);
    }
    Vector mixed(static_cast<std::size_t>(sig.m()));
    for (int k = 0; k < sig.m(); ++k) mixed[static_cast<std::size_t>(k)] = Rational(k + 1, 3);
    xs.push_back(mixed);
    for (const auto& x : xs)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          SpinorVector v = basis_spinor(d, a), w = basis_spinor(d, b);
          CHECK(hermitian_form(rep, clifford_multiply(rep, x, v), w) ==
                sign * hermitian_form(rep, v, clifford_multiply(rep, x, w)));
        }
  }
}

TEST_CASE("hermitian form is nondegenerate") {
  for (const auto& sig : all_signatures(6)) {
    auto rep = build_rep(sig);
    const std::size_t d = rep.spinor_dim();
    ExactMatrix gram(d, d);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) gram(a, b) = hermitian_form(rep, basis_spinor(d, a), basis_spinor(d, b));
    CHECK(rank(gram) == d);
  }
}
