#include "spinc/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "spinc/errors.hpp"

namespace spinc {

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const GaussianRational& x = a(i1, j1);
      if (x.is_zero()) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          if (b(i2, j2).is_zero()) continue;
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
        }
    }
  return out;
}

ExactMatrix kronecker(std::span<const ExactMatrix> factors) {
  ExactMatrix out = ExactMatrix::identity(1);
  for (const auto& f : factors) out = kronecker(out, f);
  return out;
}

ExactMatrix stack_rows(std::span<const ExactMatrix> ms) {
  if (ms.empty()) return {};
  const std::size_t cols = ms.front().cols();
  std::size_t rows = 0;
  for (const auto& m : ms) {
    if (m.cols() != cols)
      throw DimensionMismatch("stack_rows: column counts " + std::to_string(cols) + " and " + std::to_string(m.cols()));
    rows += m.rows();
  }
  ExactMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : ms) {
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = m(r, c);
    r0 += m.rows();
  }
  return out;
}

namespace {

// Gaussian integer, used only inside the fraction-free elimination.
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  mpz_class norm() const { return re * re + im * im; }
};

// a*b - c*d
GaussInt mul_sub(const GaussInt& a, const GaussInt& b, const GaussInt& c, const GaussInt& d) {
  GaussInt r;
  r.re = a.re * b.re - a.im * b.im - (c.re * d.re - c.im * d.im);
  r.im = a.re * b.im + a.im * b.re - (c.re * d.im + c.im * d.re);
  return r;
}

// Exact division; the Bareiss recurrence guarantees divisibility.
void divexact(GaussInt& a, const GaussInt& b) {
  if (sgn(b.im) == 0) {
    mpz_divexact(a.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
    mpz_divexact(a.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
    return;
  }
  mpz_class n = b.norm();
  mpz_class re = a.re * b.re + a.im * b.im;
  mpz_class im = a.im * b.re - a.re * b.im;
  mpz_divexact(a.re.get_mpz_t(), re.get_mpz_t(), n.get_mpz_t());
  mpz_divexact(a.im.get_mpz_t(), im.get_mpz_t(), n.get_mpz_t());
}

struct BareissResult {
  std::vector<std::vector<GaussInt>> a;  // echelon rows (first `rank` rows meaningful)
  std::vector<std::size_t> colperm;      // permuted column k holds original column colperm[k]
  std::size_t rank = 0;
};

BareissResult bareiss(const ExactMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  BareissResult res;
  res.a.assign(rows, std::vector<GaussInt>(cols));
  res.colperm.resize(cols);
  std::iota(res.colperm.begin(), res.colperm.end(), 0);

  // Clear denominators row by row; scaling a row does not change rank or kernel.
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < cols; ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).im().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < cols; ++c) {
      const auto& z = m(r, c);
      res.a[r][c].re = z.re().get_num() * (l / z.re().get_den());
      res.a[r][c].im = z.im().get_num() * (l / z.im().get_den());
    }
  }

  auto& a = res.a;
  GaussInt prev;
  prev.re = 1;
  for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
    // full pivoting: smallest-norm nonzero entry of the trailing block
    std::size_t pr = rows, pc = cols;
    mpz_class best;
    for (std::size_t r = k; r < rows; ++r)
      for (std::size_t c = k; c < cols; ++c) {
        if (a[r][c].is_zero()) continue;
        mpz_class n = a[r][c].norm();
        if (pr == rows || n < best) {
          best = n;
          pr = r;
          pc = c;
          if (best == 1) goto found;
        }
      }
    if (pr == rows) break;
  found:
    std::swap(a[k], a[pr]);
    if (pc != k) {
      for (auto& row : a) std::swap(row[k], row[pc]);
      std::swap(res.colperm[k], res.colperm[pc]);
    }
    const GaussInt& piv = a[k][k];
    for (std::size_t r = k + 1; r < rows; ++r) {
      auto& row = a[r];
      const bool lead_zero = row[k].is_zero();
      for (std::size_t c = k + 1; c < cols; ++c) {
        if (lead_zero || a[k][c].is_zero()) {
          if (row[c].is_zero()) continue;
          GaussInt t;
          t.re = piv.re * row[c].re - piv.im * row[c].im;
          t.im = piv.re * row[c].im + piv.im * row[c].re;
          row[c] = std::move(t);
        } else {
          row[c] = mul_sub(piv, row[c], row[k], a[k][c]);
        }
        divexact(row[c], prev);
      }
      row[k] = GaussInt{};
    }
    prev = a[k][k];
    ++res.rank;
  }
  return res;
}

GaussianRational to_gr(const GaussInt& z) { return {Rational(z.re), Rational(z.im)}; }

}  // namespace

std::size_t rank(const ExactMatrix& m) { return bareiss(m).rank; }

RowEchelon rref(const ExactMatrix& m) {
  RowEchelon out{m, {}};
  ExactMatrix& a = out.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    if (p != lead)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    const GaussianRational inv = GaussianRational(1) / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!a(lead, j).is_zero()) a(lead, j) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, c).is_zero()) continue;
      const GaussianRational f = a(r, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!a(lead, j).is_zero()) a(r, j) -= f * a(lead, j);
    }
    out.pivots.push_back(c);
    ++lead;
  }
  return out;
}

std::size_t rank_naive(const ExactMatrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> canonical_basis(const std::vector<Vector>& vs, std::size_t dim) {
  if (vs.empty()) return {};
  ExactMatrix stacked(vs.size(), dim);
  for (std::size_t r = 0; r < vs.size(); ++r) {
    if (vs[r].size() != dim) throw DimensionMismatch("canonical_basis: vector length differs");
    for (std::size_t c = 0; c < dim; ++c) stacked(r, c) = vs[r][c];
  }
  RowEchelon e = rref(stacked);
  std::vector<Vector> out;
  out.reserve(e.pivots.size());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) out.push_back(e.reduced.row(r));
  return out;
}

std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  const std::size_t cols = m.cols();
  if (m.rows() == 0) {
    std::vector<Vector> out(cols, Vector(cols));
    for (std::size_t k = 0; k < cols; ++k) out[k][k] = 1;
    return out;
  }
  BareissResult b = bareiss(m);
  const std::size_t r = b.rank;
  std::vector<Vector> raw;
  raw.reserve(cols - r);
  for (std::size_t f = r; f < cols; ++f) {
    Vector x(cols);  // permuted coordinates
    x[f] = 1;
    for (std::size_t k = r; k-- > 0;) {
      GaussianRational s;
      if (!b.a[k][f].is_zero()) s += to_gr(b.a[k][f]);
      for (std::size_t j = k + 1; j < r; ++j)
        if (!b.a[k][j].is_zero() && !x[j].is_zero()) s += to_gr(b.a[k][j]) * x[j];
      if (!s.is_zero()) x[k] = -s / to_gr(b.a[k][k]);
    }
    Vector v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[b.colperm[j]] = std::move(x[j]);
    raw.push_back(std::move(v));
  }
  std::vector<Vector> out = canonical_basis(raw, cols);
  if (out.size() + r != cols) throw std::logic_error("kernel_basis: rank-nullity violated");
  return out;
}

std::vector<Vector> kernel_basis_naive(const ExactMatrix& m) {
  const std::size_t cols = m.cols();
  RowEchelon e = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> raw;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.reduced(k, f);
    raw.push_back(std::move(v));
  }
  std::vector<Vector> out = canonical_basis(raw, cols);
  if (out.size() + e.pivots.size() != cols) throw std::logic_error("kernel_basis_naive: rank-nullity violated");
  return out;
}

Vector RowSpace::reduce(Vector v) const {
  if (v.size() != dim_) throw DimensionMismatch("RowSpace: vector length differs");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const GaussianRational f = v[pivots_[k]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!basis_[k][j].is_zero()) v[j] -= f * basis_[k][j];
  }
  return v;
}

bool RowSpace::insert(const Vector& v) {
  Vector r = reduce(v);
  auto it = std::find_if(r.begin(), r.end(), [](const auto& z) { return !z.is_zero(); });
  if (it == r.end()) return false;
  const std::size_t p = static_cast<std::size_t>(it - r.begin());
  const GaussianRational inv = GaussianRational(1) / r[p];
  for (auto& z : r)
    if (!z.is_zero()) z *= inv;
  // keep earlier rows reduced at the new pivot
  for (auto& b : basis_) {
    const GaussianRational f = b[p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!r[j].is_zero()) b[j] -= f * r[j];
  }
  basis_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace spinc
