#include <doctest.h>

#include <random>

#include "spinc/gaussian_rational.hpp"

using spinc::GaussianRational;
using spinc::Rational;

namespace {

GaussianRational random_gr(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 7);
  return {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("arithmetic on i") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK(spinc::i_power(2) == GaussianRational(-1));
  CHECK(spinc::i_power(-1) == -i);
  CHECK(spinc::i_power(7) == -i);
  CHECK((GaussianRational(1) / i) == -i);
  CHECK_THROWS_AS(i / GaussianRational(0), std::domain_error);
}

TEST_CASE("canonical form makes equality structural") {
  // 2/4 + (3/6) i reached two ways
  GaussianRational a(Rational(2, 4), Rational(3, 6));
  GaussianRational b = GaussianRational(1) / GaussianRational(Rational(1), Rational(-1));  // 1/(1-i) = (1+i)/2
  CHECK(a == b);
  CHECK(a.re().get_den() == 2);
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational x = random_gr(rng), y = random_gr(rng), z = random_gr(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x + y == y + x);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}

TEST_CASE("text form") {
  CHECK(GaussianRational(0).to_string() == "0");
  CHECK(GaussianRational(Rational(-1, 2)).to_string() == "-1/2");
  CHECK(GaussianRational::i().to_string() == "1*i");
  CHECK(GaussianRational(Rational(0), Rational(-1)).to_string() == "-1*i");
  CHECK(GaussianRational(Rational(1, 2), Rational(-3, 4)).to_string() == "1/2-3/4*i");
  CHECK(GaussianRational(Rational(-5), Rational(2)).to_string() == "-5+2*i");

  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    GaussianRational x = random_gr(rng);
    CHECK(GaussianRational::parse(x.to_string()) == x);
  }
  CHECK_THROWS_AS(GaussianRational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(GaussianRational::parse("1 + 2*i"), std::invalid_argument);
}
