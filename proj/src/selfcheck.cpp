#include "spinc/selfcheck.hpp"

#include <exception>
#include <optional>
#include <random>

#include "spinc/clifford.hpp"
#include "spinc/holonomy.hpp"
#include "spinc/invariants.hpp"

namespace spinc {

namespace {

class Suite {
 public:
  explicit Suite(std::string name) { res_.name = std::move(name); }

  void check(bool ok, const std::string& what) {
    ++res_.checks;
    if (ok) return;
    if (res_.failures++ == 0) res_.first_failure = what;
  }
  SuiteResult done() && { return std::move(res_); }

 private:
  SuiteResult res_;
};

std::vector<Signature> signatures_up_to(int max_m, bool even_only = false) {
  std::vector<Signature> out;
  for (int m = 1; m <= max_m; ++m) {
    if (even_only && m % 2) continue;
    for (int p = 0; p <= m; ++p) out.push_back({p, m - p});
  }
  return out;
}

SuiteResult anticommutation() {
  Suite s("anticommutation");
  for (const auto& sig : signatures_up_to(8)) {
    CliffordRep rep = build_rep(sig);
    const ExactMatrix id = ExactMatrix::identity(rep.spinor_dim());
    for (int i = 0; i < sig.m(); ++i)
      for (int j = i; j < sig.m(); ++j) {
        ExactMatrix ac = rep.product(i, j) + rep.product(j, i);
        ExactMatrix expected = i == j ? GaussianRational(-2 * sig.epsilon(i)) * id : ExactMatrix::zero(id.rows(), id.cols());
        s.check(ac == expected, "anticommutation " + sig.to_string() + " e" + std::to_string(i + 1) + ",e" +
                                    std::to_string(j + 1));
      }
  }
  return std::move(s).done();
}

SuiteResult adjointness() {
  Suite s("adjointness");
  for (const auto& sig : signatures_up_to(6)) {
    CliffordRep rep = build_rep(sig);
    const std::size_t d = rep.spinor_dim();
    const GaussianRational sign(sig.p % 2 == 0 ? -1 : 1);  // (-1)^(p+1)
    for (int k = 0; k < sig.m(); ++k)
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
          SpinorVector v = basis_spinor(d, a);
          SpinorVector w = basis_spinor(d, b);
          SpinorVector xv{mat_vec(rep.gamma(k), v.coords)};
          SpinorVector xw{mat_vec(rep.gamma(k), w.coords)};
          s.check(hermitian_form(rep, xv, w) == sign * hermitian_form(rep, v, xw),
                  "adjointness " + sig.to_string() + " e" + std::to_string(k + 1));
        }
  }
  return std::move(s).done();
}

// rho(E_12) u^+ = (i/2) tau_1 tau_2 u^+ and the opposite on u^-; for the
// rotation J = D_21 - D_12 (when eps_1 = eps_2) the factor tau_1 tau_2 drops.
SuiteResult eigenvalues() {
  Suite s("eigenvalues");
  const GaussianRational half_i(Rational(0), Rational(1, 2));
  for (const auto& sig : signatures_up_to(8, true)) {
    CliffordRep rep = build_rep(sig);
    auto tau = [&](int k) { return sig.epsilon(k) < 0 ? GaussianRational::i() : GaussianRational(1); };
    const GaussianRational lam = half_i * tau(0) * tau(1);
    ExactMatrix rho = spin_transfer(rep, so_basis_element(sig, 0, 1));
    const SpinorVector up = u_plus(sig);
    const SpinorVector um = u_minus(sig);
    s.check(mat_vec(rho, up.coords) == scale(up.coords, lam), "rho(E_12) u^+ in " + sig.to_string());
    s.check(mat_vec(rho, um.coords) == scale(um.coords, -lam), "rho(E_12) u^- in " + sig.to_string());
    if (sig.epsilon(0) == sig.epsilon(1)) {
      ExactMatrix j(static_cast<std::size_t>(sig.m()), static_cast<std::size_t>(sig.m()));
      j(1, 0) = 1;
      j(0, 1) = -1;
      ExactMatrix rj = spin_transfer(rep, SOElement{sig, j});
      s.check(mat_vec(rj, up.coords) == scale(up.coords, half_i), "rho(J) u^+ in " + sig.to_string());
      s.check(mat_vec(rj, um.coords) == scale(um.coords, -half_i), "rho(J) u^- in " + sig.to_string());
    }
  }
  return std::move(s).done();
}

// B = A - G A^T G is metric-antisymmetric for any A.
SOElement random_so(const Signature& sig, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  const auto m = static_cast<std::size_t>(sig.m());
  ExactMatrix a(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) a(r, c) = Rational(num(rng), den(rng));
  ExactMatrix g = metric(sig);
  return {sig, a - g * a.transpose() * g};
}

SuiteResult decomposition() {
  Suite s("decomposition");
  std::mt19937 rng(20240601);
  for (const auto& sig : std::vector<Signature>{{0, 6}, {1, 5}, {2, 4}, {3, 3}, {6, 0}})
    for (int trial = 0; trial < 8; ++trial) {
      SOElement b = random_so(sig, rng);
      s.check(decompose_so(b).reconstruct() == b, "decomposition round trip in " + sig.to_string());
    }
  return std::move(s).done();
}

SuiteResult homomorphism() {
  Suite s("homomorphism");
  std::mt19937 rng(7);
  for (const auto& sig : std::vector<Signature>{{0, 4}, {2, 2}, {1, 4}, {3, 3}}) {
    CliffordRep rep = build_rep(sig);
    for (int trial = 0; trial < 5; ++trial) {
      SOElement a = random_so(sig, rng);
      SOElement b = random_so(sig, rng);
      s.check(spin_transfer(rep, bracket(a, b)) == commutator(spin_transfer(rep, a), spin_transfer(rep, b)),
              "spin_transfer bracket in " + sig.to_string());
    }
  }
  return std::move(s).done();
}

SuiteResult form_dimensions(const std::filesystem::path& dir) {
  Suite s("form_dimensions");
  struct Case {
    const char* label;
    const char* file;
    Signature sig;
    std::size_t real_dim;
    std::size_t complex_dim;  // realified dimension of the complexified stabilizer
    const char* complex_label;
  };
  const Case cases[] = {
      {"G2", "g2.form", {0, 7}, 14, 28, "G2complex"},
      {"G2split", "g2split.form", {4, 3}, 14, 0, nullptr},
      {"Spin7", "spin7.form", {0, 8}, 21, 42, "Spin7complex"},
      {"Spin43", "spin43.form", {4, 4}, 21, 0, nullptr},
  };
  for (const auto& c : cases) {
    const std::string what = std::string(c.label) + " dimension";
    try {
      NamedForm f = load_form(dir / c.file);
      if (!(f.form.signature() == c.sig)) {
        s.check(false, what + ": form declared over " + f.form.signature().to_string());
        continue;
      }
      const std::size_t got = stabilizer_of_form(c.sig, f.form).size();
      s.check(got == c.real_dim, what + ": stabilizer has dimension " + std::to_string(got) + ", expected " +
                                     std::to_string(c.real_dim));
      if (c.complex_label) {
        const std::size_t cgot = realify_complex_so(complex_stabilizer_of_form(f.form)).size();
        s.check(cgot == c.complex_dim, std::string(c.complex_label) + " dimension: realified stabilizer has dimension " +
                                           std::to_string(cgot) + ", expected " + std::to_string(c.complex_dim));
      }
    } catch (const std::exception& e) {
      s.check(false, what + ": " + e.what());
    }
  }
  return std::move(s).done();
}

SuiteResult lie_closure(const std::filesystem::path& dir) {
  Suite s("lie_closure");
  std::optional<FormLibrary> forms;
  try {
    forms = FormLibrary::load(dir);
  } catch (const std::exception& e) {
    s.check(false, std::string("calibration forms unavailable: ") + e.what());
    return std::move(s).done();
  }
  const std::vector<HolonomySpec> specs{
      {Family::SO, 2, 2},  {Family::SU, 1, 1},    {Family::SU, 2, 0},     {Family::U, 1, 1},
      {Family::Sp, 0, 1},  {Family::Sp, 1, 1},    {Family::G2, 0, 0},     {Family::G2split, 0, 0},
      {Family::Spin7, 0, 0}, {Family::Spin43, 0, 0}, {Family::G2complex, 0, 0}, {Family::Spin7complex, 0, 0},
  };
  for (const auto& spec : specs) {
    std::vector<SOElement> elems;
    bool metric_ok = true;
    for (auto& g : resolve(spec, *forms)) {
      metric_ok = metric_ok && g.b.satisfies_invariant();
      elems.push_back(std::move(g.b));
    }
    s.check(metric_ok, spec.label() + " generators are metric-antisymmetric");
    s.check(is_lie_closed(elems), spec.label() + " closes under the bracket");
  }
  return std::move(s).done();
}

}  // namespace

std::vector<SuiteResult> run_selfcheck(const std::filesystem::path& forms_dir) {
  std::vector<SuiteResult> out;
  out.push_back(anticommutation());
  out.push_back(adjointness());
  out.push_back(eigenvalues());
  out.push_back(decomposition());
  out.push_back(homomorphism());
  out.push_back(form_dimensions(forms_dir));
  out.push_back(lie_closure(forms_dir));
  return out;
}

}  // namespace spinc
