#include "spinc/holonomy.hpp"

#include <array>

#include "spinc/errors.hpp"

#ifndef SPINC_FORMS_DIR
#define SPINC_FORMS_DIR "data/forms"
#endif

namespace spinc {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 10> kNames{{
    {Family::SO, "SO"},
    {Family::SU, "SU"},
    {Family::U, "U"},
    {Family::Sp, "Sp"},
    {Family::G2, "G2"},
    {Family::G2split, "G2split"},
    {Family::G2complex, "G2complex"},
    {Family::Spin7, "Spin7"},
    {Family::Spin43, "Spin43"},
    {Family::Spin7complex, "Spin7complex"},
}};

std::string pq(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

void require_params(int p_prime, int q_prime, const char* who) {
  if (p_prime < 0 || q_prime < 0 || p_prime + q_prime == 0)
    throw InvalidParameter(std::string(who) + ": need p', q' >= 0 and p' + q' >= 1, got " + pq(p_prime, q_prime));
}

// A quaternion a + b i + c j + d k.
using Quaternion = std::array<Rational, 4>;

Quaternion qconj(const Quaternion& h) { return {h[0], -h[1], -h[2], -h[3]}; }

// z + w j -> [[z, w], [-conj(w), conj(z)]], z = a + bi, w = c + di
void put_quaternion(ExactMatrix& out, std::size_t r, std::size_t c, const Quaternion& h) {
  GaussianRational z(h[0], h[1]);
  GaussianRational w(h[2], h[3]);
  out(r, c) = z;
  out(r, c + 1) = w;
  out(r + 1, c) = -w.conj();
  out(r + 1, c + 1) = z.conj();
}

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [fam, name] : kNames)
    if (fam == f) return name;
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [fam, n] : kNames)
    if (n == name) return fam;
  return std::nullopt;
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> all = [] {
    std::vector<Family> v;
    for (const auto& [fam, name] : kNames) v.push_back(fam);
    return v;
  }();
  return all;
}

bool takes_params(Family f) { return f == Family::SO || f == Family::SU || f == Family::U || f == Family::Sp; }

Signature HolonomySpec::ambient() const {
  switch (family) {
    case Family::SO: return {p_prime, q_prime};
    case Family::SU:
    case Family::U: return {2 * p_prime, 2 * q_prime};
    case Family::Sp: return {4 * p_prime, 4 * q_prime};
    case Family::G2: return {0, 7};
    case Family::G2split: return {4, 3};
    case Family::G2complex: return {7, 7};
    case Family::Spin7: return {0, 8};
    case Family::Spin43: return {4, 4};
    case Family::Spin7complex: return {8, 8};
  }
  throw UnsupportedSpec("unknown holonomy family");
}

std::string HolonomySpec::printed_ambient() const {
  switch (family) {
    case Family::SO: return "SO" + pq(p_prime, q_prime);
    case Family::SU:
    case Family::U: return "SO" + pq(2 * p_prime, 2 * q_prime);
    case Family::Sp: return "SO" + pq(4 * p_prime, 4 * q_prime);
    case Family::G2: return "SO(7)";
    case Family::G2split: return "SO(4,3)";
    case Family::G2complex: return "SO(7)";
    case Family::Spin7: return "SO(8)";
    case Family::Spin43: return "SO(8,8)";
    case Family::Spin7complex: return "SO(8,8)";
  }
  throw UnsupportedSpec("unknown holonomy family");
}

std::size_t HolonomySpec::expected_dimension() const {
  const auto n = static_cast<std::size_t>(p_prime + q_prime);
  switch (family) {
    case Family::SO: return n * (n - 1) / 2;
    case Family::SU: return n * n - 1;
    case Family::U: return n * n;
    case Family::Sp: return n * (2 * n + 1);
    case Family::G2:
    case Family::G2split: return 14;
    case Family::G2complex: return 28;
    case Family::Spin7:
    case Family::Spin43: return 21;
    case Family::Spin7complex: return 42;
  }
  throw UnsupportedSpec("unknown holonomy family");
}

std::optional<std::size_t> HolonomySpec::expected_invariants() const {
  switch (family) {
    case Family::SO: return std::nullopt;
    case Family::SU: return 2;
    case Family::U: return 1;
    case Family::Sp: return static_cast<std::size_t>(p_prime + q_prime + 1);
    case Family::G2:
    case Family::G2split: return 1;
    case Family::G2complex: return 2;
    case Family::Spin7:
    case Family::Spin43:
    case Family::Spin7complex: return 1;
  }
  throw UnsupportedSpec("unknown holonomy family");
}

std::string HolonomySpec::label() const {
  std::string s(family_name(family));
  if (takes_params(family)) s += pq(p_prime, q_prime);
  return s;
}

ExactMatrix realify_unitary(const ExactMatrix& c) {
  ExactMatrix out(2 * c.rows(), 2 * c.cols());
  for (std::size_t k = 0; k < c.rows(); ++k)
    for (std::size_t l = 0; l < c.cols(); ++l) {
      const Rational& a = c(k, l).re();
      const Rational& b = c(k, l).im();
      out(2 * k, 2 * l) = a;
      out(2 * k, 2 * l + 1) = b;
      out(2 * k + 1, 2 * l) = Rational(-b);
      out(2 * k + 1, 2 * l + 1) = a;
    }
  return out;
}

std::vector<ExactMatrix> su_basis(int p_prime, int q_prime) {
  require_params(p_prime, q_prime, "su_basis");
  const auto n = static_cast<std::size_t>(p_prime + q_prime);
  auto g = [&](std::size_t k) { return static_cast<long>(k) < p_prime ? -1 : 1; };
  const GaussianRational i = GaussianRational::i();
  std::vector<ExactMatrix> out;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    ExactMatrix c(n, n);
    c(k, k) = i;
    c(k + 1, k + 1) = -i;
    out.push_back(std::move(c));
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l) {
      const long s = g(k) * g(l);
      ExactMatrix re(n, n);
      re(k, l) = 1;
      re(l, k) = -s;
      out.push_back(std::move(re));
      ExactMatrix im(n, n);
      im(k, l) = i;
      im(l, k) = GaussianRational(s) * i;
      out.push_back(std::move(im));
    }
  return out;
}

UnitaryEmbedding embed_unitary(int p_prime, int q_prime) {
  require_params(p_prime, q_prime, "embed_unitary");
  const Signature sig{2 * p_prime, 2 * q_prime};
  UnitaryEmbedding out;
  for (const auto& c : su_basis(p_prime, q_prime)) {
    SOElement e{sig, realify_unitary(c)};
    e.validate();
    out.su.push_back(std::move(e));
  }
  const auto m = static_cast<std::size_t>(sig.m());
  ExactMatrix j(m, m);
  j(1, 0) = 1;
  j(0, 1) = -1;
  out.central = {SOElement{sig, std::move(j)}, Rational(1)};
  return out;
}

std::vector<SOElement> embed_symplectic(int p_prime, int q_prime) {
  require_params(p_prime, q_prime, "embed_symplectic");
  const auto n = static_cast<std::size_t>(p_prime + q_prime);
  auto g = [&](std::size_t k) { return static_cast<long>(k) < p_prime ? -1 : 1; };
  const Signature sig{4 * p_prime, 4 * q_prime};
  const std::array<Quaternion, 4> units{{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};

  std::vector<ExactMatrix> complex;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 1; u < 4; ++u) {
      ExactMatrix c(2 * n, 2 * n);
      put_quaternion(c, 2 * k, 2 * k, units[u]);
      complex.push_back(std::move(c));
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = k + 1; l < n; ++l)
      for (const auto& h : units) {
        // X_lk = -g_k g_l conj(X_kl)
        Quaternion lower = qconj(h);
        if (g(k) * g(l) > 0)
          for (auto& x : lower) x = -x;
        ExactMatrix c(2 * n, 2 * n);
        put_quaternion(c, 2 * k, 2 * l, h);
        put_quaternion(c, 2 * l, 2 * k, lower);
        complex.push_back(std::move(c));
      }

  std::vector<SOElement> out;
  for (const auto& c : complex) {
    SOElement e{sig, realify_unitary(c)};
    e.validate();
    out.push_back(std::move(e));
  }
  return out;
}

std::filesystem::path FormLibrary::default_dir() { return SPINC_FORMS_DIR; }

FormLibrary FormLibrary::load(const std::filesystem::path& dir) {
  auto get = [&](const char* file, int degree, Signature sig) {
    NamedForm f = load_form(dir / file);
    if (f.form.degree() != degree || !(f.form.signature() == sig))
      throw std::runtime_error((dir / file).string() + ": expected a degree-" + std::to_string(degree) +
                               " form over " + sig.to_string());
    return std::move(f.form);
  };
  return {get("g2.form", 3, {0, 7}), get("g2split.form", 3, {4, 3}), get("spin7.form", 4, {0, 8}),
          get("spin43.form", 4, {4, 4})};
}

namespace {

std::vector<SpinCGenerator> with_zero_t(std::vector<SOElement> elems) {
  std::vector<SpinCGenerator> out;
  out.reserve(elems.size());
  for (auto& e : elems) out.push_back({std::move(e), Rational(0)});
  return out;
}

}  // namespace

std::vector<SpinCGenerator> resolve(const HolonomySpec& spec, const FormLibrary& forms) {
  if (takes_params(spec.family)) {
    if (spec.family == Family::SO) {
      spec.ambient().validate();
    } else {
      require_params(spec.p_prime, spec.q_prime, "resolve");
    }
  } else if (spec.p_prime != 0 || spec.q_prime != 0) {
    throw UnsupportedSpec(std::string(family_name(spec.family)) + " takes no parameters");
  }
  switch (spec.family) {
    case Family::SO: return with_zero_t(so_basis(spec.ambient()));
    case Family::SU: return with_zero_t(embed_unitary(spec.p_prime, spec.q_prime).su);
    case Family::U: {
      UnitaryEmbedding u = embed_unitary(spec.p_prime, spec.q_prime);
      std::vector<SpinCGenerator> out = with_zero_t(std::move(u.su));
      out.push_back(std::move(u.central));
      return out;
    }
    case Family::Sp: return with_zero_t(embed_symplectic(spec.p_prime, spec.q_prime));
    case Family::G2: return with_zero_t(stabilizer_of_form({0, 7}, forms.g2()));
    case Family::G2split: return with_zero_t(stabilizer_of_form({4, 3}, forms.g2_split()));
    case Family::Spin7: return with_zero_t(stabilizer_of_form({0, 8}, forms.spin7()));
    case Family::Spin43: return with_zero_t(stabilizer_of_form({4, 4}, forms.spin43()));
    case Family::G2complex: return with_zero_t(realify_complex_so(complex_stabilizer_of_form(forms.g2())));
    case Family::Spin7complex: return with_zero_t(realify_complex_so(complex_stabilizer_of_form(forms.spin7())));
  }
  throw UnsupportedSpec("unknown holonomy family");
}

}  // namespace spinc
