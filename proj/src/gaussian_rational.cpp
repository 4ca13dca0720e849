#include "spinc/gaussian_rational.hpp"

namespace spinc {

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) throw std::domain_error("GaussianRational: division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Rational n = o.norm();
  *this *= o.conj();
  re_ /= n;
  im_ /= n;
  return *this;
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "*i";
  std::string s = re_.get_str();
  if (sgn(im_) > 0) s += '+';
  s += im_.get_str();
  s += "*i";
  return s;
}

namespace {

Rational parse_rational(std::string_view t) {
  if (t.empty()) throw std::invalid_argument("empty rational");
  std::string_view digits = t;
  if (digits.front() == '-' || digits.front() == '+') digits.remove_prefix(1);
  bool seen_slash = false;
  bool seen_digit = false;
  for (char c : digits) {
    if (c == '/') {
      if (seen_slash || !seen_digit) throw std::invalid_argument("malformed rational");
      seen_slash = true;
      seen_digit = false;
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw std::invalid_argument("malformed rational");
    }
  }
  if (!seen_digit) throw std::invalid_argument("malformed rational");
  std::string s(t.front() == '+' ? t.substr(1) : t);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator");
  r.canonicalize();
  return r;
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty scalar");
  if (!text.ends_with("*i")) return GaussianRational(parse_rational(text));
  std::string_view body = text.substr(0, text.size() - 2);
  // split at the last sign that is not in leading position
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_rational(body)};
  return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

GaussianRational i_power(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

}  // namespace spinc
