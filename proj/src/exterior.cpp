#include "spinc/exterior.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "spinc/errors.hpp"
#include "spinc/linalg.hpp"

namespace spinc {

namespace {

// Sorts idx in place and returns the permutation sign, 0 on a repeated index.
int sort_with_sign(MultiIndex& idx) {
  int sign = 1;
  for (std::size_t a = 1; a < idx.size(); ++a)
    for (std::size_t b = a; b > 0 && idx[b - 1] >= idx[b]; --b) {
      if (idx[b - 1] == idx[b]) return 0;
      std::swap(idx[b - 1], idx[b]);
      sign = -sign;
    }
  for (std::size_t a = 1; a < idx.size(); ++a)
    if (idx[a - 1] == idx[a]) return 0;
  return sign;
}

}  // namespace

void ExteriorForm::add(MultiIndex idx, const Rational& c) {
  if (static_cast<int>(idx.size()) != degree_) throw DimensionMismatch("ExteriorForm::add: wrong number of indices");
  for (int k : idx)
    if (k < 0 || k >= sig_.m()) throw DimensionMismatch("ExteriorForm::add: index out of range");
  const int sign = sort_with_sign(idx);
  if (sign == 0 || sgn(c) == 0) return;
  Rational& slot = coeffs_[idx];
  slot += sign > 0 ? c : Rational(-c);
  if (sgn(slot) == 0) coeffs_.erase(idx);
}

Rational ExteriorForm::coeff(const MultiIndex& idx) const {
  auto it = coeffs_.find(idx);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

std::map<MultiIndex, GaussianRational> exterior_action(const ExactMatrix& b, const ExteriorForm& phi) {
  const auto m = static_cast<std::size_t>(phi.signature().m());
  if (b.rows() != m || b.cols() != m) throw DimensionMismatch("exterior_action: matrix size differs from form dimension");
  std::map<MultiIndex, GaussianRational> out;
  // For a term c e^I: replacing i_s by j gives K; with J = sort(K) of sign s,
  // (B.phi)_J picks up -B(i_s, j) c s.
  for (const auto& [idx, c] : phi.coeffs()) {
    for (std::size_t s = 0; s < idx.size(); ++s) {
      const auto src = static_cast<std::size_t>(idx[s]);
      for (std::size_t j = 0; j < m; ++j) {
        const GaussianRational& bij = b(src, j);
        if (bij.is_zero()) continue;
        MultiIndex k = idx;
        k[s] = static_cast<int>(j);
        const int sign = sort_with_sign(k);
        if (sign == 0) continue;
        GaussianRational contrib = -bij * GaussianRational(c);
        if (sign < 0) contrib = -contrib;
        auto [it, fresh] = out.try_emplace(k, contrib);
        if (!fresh) it->second += contrib;
      }
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

ExteriorForm exterior_action(const SOElement& b, const ExteriorForm& phi) {
  if (!(b.sig == phi.signature()))
    throw DimensionMismatch("exterior_action: element of so" + b.sig.to_string() + " on a form over " +
                            phi.signature().to_string());
  ExteriorForm out(phi.degree(), phi.signature());
  for (const auto& [idx, z] : exterior_action(b.mat, phi)) out.add(idx, z.re());
  return out;
}

namespace {

// Kernel of the linear map c -> sum_k c_k (basis[k].phi), columns indexed by basis.
std::vector<Vector> annihilator_coords(const std::vector<ExactMatrix>& basis, const ExteriorForm& phi) {
  std::map<MultiIndex, std::size_t> row_of;
  std::vector<std::map<MultiIndex, GaussianRational>> images;
  images.reserve(basis.size());
  for (const auto& b : basis) {
    images.push_back(exterior_action(b, phi));
    for (const auto& [idx, z] : images.back()) row_of.try_emplace(idx, 0);
  }
  std::size_t r = 0;
  for (auto& [idx, row] : row_of) row = r++;
  ExactMatrix system(row_of.size(), basis.size());
  for (std::size_t c = 0; c < images.size(); ++c)
    for (const auto& [idx, z] : images[c]) system(row_of.at(idx), c) = z;
  if (system.rows() == 0) {
    std::vector<Vector> all(basis.size(), Vector(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) all[k][k] = 1;
    return all;
  }
  return kernel_basis(system);
}

ExactMatrix combine(const std::vector<ExactMatrix>& basis, const Vector& coeffs) {
  ExactMatrix out(basis.front().rows(), basis.front().cols());
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!coeffs[k].is_zero()) out += coeffs[k] * basis[k];
  return out;
}

}  // namespace

std::vector<SOElement> stabilizer_of_form(const Signature& sig, const ExteriorForm& phi) {
  if (!(sig == phi.signature())) throw DimensionMismatch("stabilizer_of_form: signature differs from form");
  std::vector<ExactMatrix> basis;
  for (auto& e : so_basis(sig)) basis.push_back(std::move(e.mat));
  std::vector<SOElement> out;
  for (const auto& c : annihilator_coords(basis, phi)) out.push_back({sig, combine(basis, c)});
  return out;
}

std::vector<ExactMatrix> complex_stabilizer_of_form(const ExteriorForm& phi) {
  const auto m = static_cast<std::size_t>(phi.signature().m());
  std::vector<ExactMatrix> basis;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      ExactMatrix a(m, m);
      a(i, j) = -1;
      a(j, i) = 1;
      basis.push_back(std::move(a));
    }
  std::vector<ExactMatrix> out;
  for (const auto& c : annihilator_coords(basis, phi)) out.push_back(combine(basis, c));
  return out;
}

std::vector<SOElement> realify_complex_so(const std::vector<ExactMatrix>& complex_generators) {
  std::vector<SOElement> out;
  for (const auto& x : complex_generators) {
    if (!x.is_square() || !(x.transpose() + x).is_zero())
      throw InvalidInput("realify_complex_so: generator is not complex antisymmetric");
    const std::size_t m = x.rows();
    const Signature sig{static_cast<int>(m), static_cast<int>(m)};
    for (const GaussianRational& phase : {GaussianRational(1), GaussianRational::i()}) {
      ExactMatrix real(2 * m, 2 * m);
      for (std::size_t r = 0; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          const GaussianRational z = phase * x(r, c);
          const Rational& a = z.re();
          const Rational& b = z.im();
          real(r, c) = a;
          real(r, m + c) = b;
          real(m + r, c) = Rational(-b);
          real(m + r, m + c) = a;
        }
      out.push_back({sig, std::move(real)});
    }
  }
  return out;
}

NamedForm parse_form(std::istream& in) {
  std::string name;
  int degree = -1;
  Signature sig{-1, -1};
  std::vector<std::pair<MultiIndex, Rational>> terms;
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::runtime_error("form file line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "name") {
      if (!(ls >> name)) fail("missing name");
    } else if (head == "degree") {
      if (!(ls >> degree) || degree < 1) fail("bad degree");
    } else if (head == "signature") {
      std::string pq;
      ls >> pq;
      auto comma = pq.find(',');
      if (comma == std::string::npos) fail("signature must be p,q");
      try {
        sig = {std::stoi(pq.substr(0, comma)), std::stoi(pq.substr(comma + 1))};
      } catch (const std::exception&) {
        fail("signature must be p,q");
      }
      if (!sig.valid()) fail("invalid signature");
    } else {
      std::vector<std::string> tok{head};
      for (std::string t; ls >> t;) tok.push_back(t);
      if (degree < 0 || !sig.valid()) fail("term before degree/signature");
      if (static_cast<int>(tok.size()) != degree + 1) fail("term needs " + std::to_string(degree) + " indices and a coefficient");
      MultiIndex idx;
      for (int k = 0; k < degree; ++k) {
        int v = 0;
        try {
          std::size_t used = 0;
          v = std::stoi(tok[static_cast<std::size_t>(k)], &used);
          if (used != tok[static_cast<std::size_t>(k)].size()) fail("bad index");
        } catch (const std::logic_error&) {
          fail("bad index");
        }
        if (v < 1 || v > sig.m()) fail("index out of range");
        idx.push_back(v - 1);
      }
      Rational c;
      try {
        GaussianRational z = GaussianRational::parse(tok.back());
        if (!z.is_real()) fail("coefficient must be real");
        c = z.re();
      } catch (const std::invalid_argument&) {
        fail("bad coefficient");
      }
      terms.emplace_back(std::move(idx), std::move(c));
    }
  }
  if (degree < 0 || !sig.valid()) throw std::runtime_error("form file: missing degree or signature");
  NamedForm out{name, ExteriorForm(degree, sig)};
  for (auto& [idx, c] : terms) out.form.add(std::move(idx), c);
  return out;
}

NamedForm load_form(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open form file " + path.string());
  try {
    return parse_form(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_form(std::ostream& out, const NamedForm& f) {
  out << "name " << f.name << "\n";
  out << "degree " << f.form.degree() << "\n";
  out << "signature " << f.form.signature().p << "," << f.form.signature().q << "\n";
  for (const auto& [idx, c] : f.form.coeffs()) {
    for (int k : idx) out << (k + 1) << ' ';
    out << c.get_str() << "\n";
  }
}

}  // namespace spinc
