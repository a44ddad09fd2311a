#include <random>

#include "doctest.h"
#include "lgcy/error.hpp"
#include "lgcy/scalars.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::Q;

TEST_CASE("rationals are kept in lowest terms") {
  Rational q = make_rational(6, -4);
  CHECK(q.get_num() == -3);
  CHECK(q.get_den() == 2);
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(parse_rational("-10/4")) == "-5/2");
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("1/x"), Error);
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}

TEST_CASE("powers of i reduce with period four") {
  CHECK(gaussian_pow_i(0) == GaussianRational(1));
  CHECK(gaussian_pow_i(2) == GaussianRational(-1));
  CHECK(gaussian_pow_i(-1) == -GaussianRational::i());

  // i^{-9} by repeated multiplication with i^{-1} = -i.
  GaussianRational acc(1);
  for (int k = 0; k < 9; ++k) acc *= -GaussianRational::i();
  CHECK(gaussian_pow_i(-9) == acc);
  CHECK(acc == -GaussianRational::i());

  for (long k = -40; k <= 40; ++k) CHECK(gaussian_pow_i(k + 4) == gaussian_pow_i(k));
  for (long k = -10; k <= 10; ++k) CHECK(gaussian_pow_i(k) * gaussian_pow_i(1) == gaussian_pow_i(k + 1));
}

TEST_CASE("factorials are exact") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  Integer acc = 1;
  for (unsigned long k = 2; k <= 20; ++k) acc *= k;
  CHECK(factorial(20) == acc);
  CHECK(to_string(factorial(20)) == "2432902008176640000");
  CHECK(factorial(30) == factorial(29) * 30);
}

TEST_CASE("field axioms on random rationals") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    Rational a = testing::random_rational(rng, 50), b = testing::random_rational(rng, 50),
             c = testing::random_rational(rng, 50);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    if (sgn(a) != 0) CHECK(a * (1 / a) == 1);
  }
}

TEST_CASE("ring axioms and inverses on random Gaussian rationals") {
  std::mt19937_64 rng(11);
  auto g = [&] { return GaussianRational(testing::random_rational(rng), testing::random_rational(rng)); };
  for (int trial = 0; trial < 300; ++trial) {
    auto a = g(), b = g(), c = g();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK((a * a.conj()).is_real());
    CHECK((a * a.conj()).re() == a.norm());
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == GaussianRational(1));
      CHECK((b / a) * a == b);
    }
  }
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK_THROWS_AS(GaussianRational().inverse(), Error);
}

TEST_CASE("Gaussian rational text form round-trips") {
  GaussianRational z(Q(3, 2), Q(-1, 4));
  CHECK(to_string(z) == "(3/2-1/4i)");
  CHECK(parse_gaussian(to_string(z)) == z);
  CHECK(parse_gaussian("(0+1i)") == GaussianRational::i());
  CHECK(parse_gaussian("-5/3") == GaussianRational(Q(-5, 3)));
  for (long k = 0; k < 4; ++k) CHECK(parse_gaussian(to_string(gaussian_pow_i(k))) == gaussian_pow_i(k));
}

TEST_CASE("unit form extracts magnitude and power of i") {
  auto u = GaussianRational(Rational(0), Q(-7, 3)).unit_form();
  REQUIRE(u);
  CHECK(u->magnitude == Q(7, 3));
  CHECK(u->i_power == 3);
  CHECK_FALSE(GaussianRational(Q(1), Q(1)).unit_form());
}

TEST_CASE("symbolic scalars track powers of pi") {
  SymbolicScalar a = SymbolicScalar::two_pi_i_pow(3);
  // (2 pi i)^3 = -8i pi^3
  CHECK(a.pi_power() == 3);
  CHECK(a.coeff() == GaussianRational(Rational(0), Rational(-8)));
  CHECK((a * SymbolicScalar::two_pi_i_pow(2)) == SymbolicScalar::two_pi_i_pow(5));
  CHECK((a / a) == SymbolicScalar(GaussianRational(1)));
  SymbolicScalar zero(GaussianRational(0), 5);
  CHECK(zero.pi_power() == 0);
  CHECK(zero == SymbolicScalar());
  CHECK((zero * a).pi_power() == 0);
  CHECK(to_string(SymbolicScalar(GaussianRational(Q(1, 2)), 2)) == "(1/2+0i)*pi^2");
}
