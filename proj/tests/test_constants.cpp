#include <chrono>
#include <complex>

#include "doctest.h"
#include "lgcy/constants.hpp"
#include "lgcy/milnor.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::fermat;
using lgcy::testing::Q;

namespace {

GaussianRational I(long re, long im) { return {Rational(re), Rational(im)}; }

// i^k by repeated multiplication, no period reduction.
GaussianRational slow_i_pow(long k) {
  GaussianRational r(1);
  GaussianRational step = k >= 0 ? GaussianRational::i() : -GaussianRational::i();
  for (long j = 0; j < (k >= 0 ? k : -k); ++j) r *= step;
  return r;
}

long slow_factorial(long a) {
  long r = 1;
  for (long j = 2; j <= a; ++j) r *= j;
  return r;
}

}  // namespace

TEST_CASE("constants by direct substitution") {
  CHECK(c_a(3, 0) == GaussianRational(-1));
  CHECK(k_ab(3, 1, 2) == GaussianRational(Q(-5, 2)));
  CHECK(k_N(5) == GaussianRational(Rational(0), Q(1, 32)));
  CHECK(p_const(1) == I(0, -8));
  CHECK(p_const(2) == GaussianRational(16));
  CHECK(c_a(1, 1) == GaussianRational(1));
  CHECK(k_ab(1, 0, 1) == GaussianRational(-3));
}

TEST_CASE("constants agree with a slow re-evaluation") {
  for (long n = 1; n <= 8; ++n) {
    for (long a = 0; a <= n; ++a) {
      long b = n - a;
      GaussianRational ca = slow_i_pow(2 * (n + a * (a + 1) / 2)) * GaussianRational(Q(1, slow_factorial(a)));
      CHECK(c_a(n, a) == ca);
      long e = (a * (a + 1) + b * (b + 1)) / 2 + b * b + n;
      GaussianRational kab = slow_i_pow(2 * e) * GaussianRational(Q(n + 2, slow_factorial(a) * slow_factorial(b)));
      CHECK(k_ab(n, a, b) == kab);
    }
    CHECK(p_const(n) == GaussianRational(Rational(1L << (n + 2))) * slow_i_pow(-n * n));
    long N = n + 2;
    CHECK(k_N(N) == slow_i_pow(N * (N - 1)) * slow_i_pow(N) * GaussianRational(Q(1, 1L << N)));
  }
}

TEST_CASE("identity chain for small n by hand") {
  auto chain = identity_chain(1);
  REQUIRE(chain.size() == 2);
  CHECK(chain[0].a == 0);
  CHECK(chain[0].lhs == GaussianRational(3));
  CHECK(chain[0].rhs == GaussianRational(3));
  CHECK(chain[1].lhs == GaussianRational(-3));
  CHECK(chain[1].rhs == GaussianRational(-3));
}

TEST_CASE("identity chain holds for n = 1..12 within a second") {
  auto start = std::chrono::steady_clock::now();
  for (long n = 1; n <= 12; ++n) CHECK(verify_identity_chain(n));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  CHECK(secs < 1.0);
  // Independent evaluation in complex integers.
  for (long n = 1; n <= 12; ++n)
    for (long a = 0; a <= n; ++a) {
      long b = n - a;
      GaussianRational lhs = slow_i_pow(2 * (a + b)) * GaussianRational(Rational(slow_factorial(a) * slow_factorial(b))) *
                             k_ab(n, a, b);
      CHECK(lhs == slow_i_pow(n + n * (a - b)) * GaussianRational(n + 2));
    }
}

TEST_CASE("a perturbed constant breaks the chain") {
  // Dropping the b^2 term from the sign exponent must be detected.
  bool any_fail = false;
  for (long n = 1; n <= 6; ++n)
    for (long a = 0; a <= n; ++a) {
      long b = n - a;
      long e = (a * (a + 1) + b * (b + 1)) / 2 + n;
      GaussianRational wrong = slow_i_pow(2 * e) * GaussianRational(Q(n + 2, slow_factorial(a) * slow_factorial(b)));
      GaussianRational lhs = slow_i_pow(2 * (a + b)) * GaussianRational(Rational(slow_factorial(a) * slow_factorial(b))) * wrong;
      if (lhs != slow_i_pow(n + n * (a - b)) * GaussianRational(n + 2)) any_fail = true;
    }
  CHECK(any_fail);
}

TEST_CASE("special pair norms") {
  auto [e3, c3] = special_pair_norm(3, 8);
  CHECK(e3 == SymbolicScalar(GaussianRational(64), 3));
  CHECK(e3 == SymbolicScalar(GaussianRational::i()) * SymbolicScalar::two_pi_i_pow(3) * SymbolicScalar(GaussianRational(8)));
  auto [e5, c5] = special_pair_norm(5, 1024);
  CHECK(e5 == SymbolicScalar(GaussianRational(-32768), 5));
  CHECK(c5 == SymbolicScalar(I(0, 163840), 5));
  CHECK(c5 == SymbolicScalar(GaussianRational(5 * 1024)) * SymbolicScalar::two_pi_i_pow(5));
  CHECK_THROWS_AS(special_pair_norm(2, 1), Error);
}

TEST_CASE("constants table") {
  auto t = constants_table(3, 1024);
  REQUIRE(t.c.size() == 4);
  CHECK(t.c[0] == GaussianRational(-1));
  CHECK(t.k[1] == GaussianRational(Q(-5, 2)));
  CHECK(t.kN == GaussianRational(Rational(0), Q(1, 32)));
  CHECK(t.hat_eta_norm == special_pair_norm(5, 1024).first);
}

TEST_CASE("residual powers of i have a uniform magnitude") {
  for (long n = 1; n <= 10; ++n)
    for (const auto& r : residual_i_powers(n)) {
      CHECK(r.magnitude == Rational((1L << (n + 2)) * (n + 2)));
      CHECK(r.i_power >= 0);
      CHECK(r.i_power < 4);
    }
}

TEST_CASE("multiplication signs are tabulated for every admissible pair") {
  for (long n = 1; n <= 6; ++n) {
    auto signs = multiplication_signs(n);
    CHECK(signs.size() == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
    for (const auto& s : signs) {
      CHECK((s.sign == 1 || s.sign == -1));
      // c_a c_0 / c_a = c_0 = (-1)^n.
      if (s.b == 0) CHECK(s.sign == (n % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("CY pairing normalization reproduces (1/mu) res on Calabi-Yau rings") {
  for (long n = 1; n <= 3; ++n) {
    auto ring = MilnorRing::build(fermat(static_cast<std::size_t>(n + 2), static_cast<unsigned>(n + 2)));
    auto sel = subring_selector(ring, n + 2, n, false);
    Rational mu(static_cast<long>(ring.mu()));
    for (auto i : sel.selected)
      for (auto j : sel.selected) {
        long a = ring.degree(i) / (n + 2), b = ring.degree(j) / (n + 2);
        if (a + b != n) continue;
        Rational res = ring.residue(Polynomial::monomial(ring.monomial(i) * ring.monomial(j)));
        CHECK(cy_pairing(n, a, b, res, mu) == SymbolicScalar(GaussianRational(ring.pairing(i, j))));
      }
    // The special pair gives 1.
    CHECK(cy_pairing(n, 0, n, mu, mu) == SymbolicScalar(GaussianRational(1)));
  }
}
