#include <random>

#include "doctest.h"
#include "lgcy/forms.hpp"
#include "lgcy/grobner.hpp"
#include "lgcy/poly.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::fermat;
using lgcy::testing::P;
using lgcy::testing::Q;

namespace {

// Sarrus' rule on second partials; independent of the library's expansion.
Polynomial det3_hessian(const Polynomial& f) {
  auto h = [&](int i, int j) { return f.derivative(i).derivative(j); };
  return h(0, 0) * h(1, 1) * h(2, 2) + h(0, 1) * h(1, 2) * h(2, 0) + h(0, 2) * h(1, 0) * h(2, 1) -
         h(0, 2) * h(1, 1) * h(2, 0) - h(0, 1) * h(1, 0) * h(2, 2) - h(0, 0) * h(1, 2) * h(2, 1);
}

Polynomial hesse(const Rational& u) {
  return fermat(3, 3) + Polynomial::monomial(Monomial{1, 1, 1}, u);
}

}  // namespace

TEST_CASE("grevlex compares degree first, then the last variable reversed") {
  CHECK(grevlex(Monomial{2, 0, 0}, Monomial{0, 0, 1}) > 0);
  CHECK(grevlex(Monomial{1, 1, 0}, Monomial{2, 0, 0}) < 0);
  CHECK(grevlex(Monomial{1, 1, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(grevlex(Monomial{0, 2, 0}, Monomial{1, 0, 1}) > 0);
  CHECK(grevlex(Monomial{1, 2, 3}, Monomial{1, 2, 3}) == 0);
}

TEST_CASE("polynomial ring arithmetic") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = testing::random_polynomial(rng, 3, 6, 5);
    auto b = testing::random_polynomial(rng, 3, 6, 5);
    auto c = testing::random_polynomial(rng, 3, 6, 5);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Polynomial(3));
    // Leibniz rule.
    CHECK((a * b).derivative(1) == a.derivative(1) * b + a * b.derivative(1));
    for (std::size_t k = 1; k < (a * b).terms().size(); ++k)
      CHECK(grevlex((a * b).terms()[k - 1].mono, (a * b).terms()[k].mono) > 0);
  }
}

TEST_CASE("weights of Fermat and mixed polynomials") {
  auto w = infer_weights(fermat(5, 5));
  for (const auto& q : w.q()) CHECK(q == Q(1, 5));
  CHECK(w.homogeneous_degree() == 5);

  auto v = infer_weights(P("z1^3 + z1*z2^2", 2));
  CHECK(v.q()[0] == Q(1, 3));
  CHECK(v.q()[1] == Q(1, 3));

  auto e = P("z1^3 + z2^5", 2);
  auto we = infer_weights(e);
  CHECK(we.q()[0] == Q(1, 3));
  CHECK(we.q()[1] == Q(1, 5));
  CHECK(we.denominator() == 15);
  CHECK(we.milnor_number() == 8);
  CHECK_FALSE(we.homogeneous_degree());
}

TEST_CASE("weight inference failures") {
  try {
    infer_weights(P("z1^2 + z2^3 + z1*z2", 2));
    FAIL("expected NotQuasiHomogeneous");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NotQuasiHomogeneous);
  }
  try {
    infer_weights(P("z1*z2", 2));
    FAIL("expected UnderdeterminedWeights");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnderdeterminedWeights);
  }
  try {
    infer_weights(P("z1^2", 2));
    FAIL("expected an error for an absent variable");
  } catch (const Error& err) {
    CHECK(err.code() != ErrorCode::OracleMismatch);
  }
}

TEST_CASE("inferred weights give every monomial weighted degree one") {
  for (const char* text : {"z1^3 + z2^3 + z3^3 + 1/2*z1*z2*z3", "z1^3 + z1*z2^2 + z3^3", "z1^4 + z2^4 + z1^2*z2^2",
                           "z1^2*z2 + z2^4 + z3^3", "z1^5 + z2^5 + z3^5 + z4^5 + z5^5 + z1*z2*z3*z4*z5"}) {
    auto f = parse_polynomial(text).poly;
    auto w = infer_weights(f);
    for (const auto& t : f.terms()) CHECK(w.degree(t.mono) == 1);
    CHECK(is_quasi_homogeneous(f, w));
    CHECK(euler_xi_identity_check(f, w));
  }
}

TEST_CASE("nondegeneracy conditions") {
  auto q = fermat(5, 5);
  auto r = nondegeneracy_check(q, infer_weights(q));
  CHECK(r.ok());

  auto cross = P("z1*z2", 2);
  auto rc = nondegeneracy_check(cross, WeightSystem({Q(1, 2), Q(1, 2)}));
  CHECK_FALSE(rc.no_cross_terms);
  CHECK_FALSE(rc.ok());

  auto nonisolated = P("z1^3 + z1^2*z2", 2);
  auto rn = nondegeneracy_check(nonisolated, infer_weights(nonisolated));
  CHECK(rn.no_cross_terms);
  CHECK_FALSE(rn.isolated);

  // z1^3 + z1 z2^3 has weights (1/3, 2/9); fine. z1 + ... violates the bound.
  auto heavy = P("z1 + z2^2", 2);
  auto rh = nondegeneracy_check(heavy, infer_weights(heavy));
  CHECK_FALSE(rh.weights_bounded);
}

TEST_CASE("Euler identity detects non-quasi-homogeneous input") {
  CHECK(euler_xi_identity_check(fermat(3, 3), WeightSystem::homogeneous(3, 3)));
  CHECK(euler_xi_identity_check(P("z1^3 + z1*z2^2", 2), WeightSystem({Q(1, 3), Q(1, 3)})));
  auto g = P("z1^3 + z2^2", 2);
  CHECK_FALSE(euler_xi_identity_check(g, WeightSystem({Q(1, 3), Q(1, 3)})));
  CHECK_FALSE(euler_xi_identity_check(P("z1^2 + z2^3 + z1*z2", 2), WeightSystem({Q(1, 2), Q(1, 3)})));
}

TEST_CASE("Hessian determinants") {
  for (unsigned d = 2; d <= 7; ++d) {
    auto h = hessian(fermat(1, d));
    CHECK(h == Polynomial::monomial(Monomial::variable(1, 0, d - 2), Rational(d * (d - 1))));
  }
  CHECK(hessian(fermat(3, 3)) == Polynomial::monomial(Monomial{1, 1, 1}, Rational(216)));

  for (const Rational& u : {Q(0), Q(1, 2), Q(3), Q(-7, 5)}) {
    auto f = hesse(u);
    auto h = hessian(f);
    CHECK(h == det3_hessian(f));
    Polynomial expected = Polynomial::monomial(Monomial{1, 1, 1}, 216 + 2 * u * u * u) -
                          Polynomial::monomial(Monomial{3, 0, 0}, 6 * u * u) -
                          Polynomial::monomial(Monomial{0, 3, 0}, 6 * u * u) -
                          Polynomial::monomial(Monomial{0, 0, 3}, 6 * u * u);
    CHECK(h == expected);
  }
  for (std::size_t n = 1; n <= 5; ++n)
    for (unsigned d = 2; d <= 5; ++d) CHECK(hessian(fermat(n, d)).total_degree() == n * (d - 2));

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = testing::random_polynomial(rng, 3, 12, 6);
    CHECK(hessian(f) == det3_hessian(f));
  }
}

TEST_CASE("exterior algebra identities") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    auto f = testing::random_polynomial(rng, 3, 9, 4);
    auto df = differential(f);
    CHECK(df.exterior_derivative().is_zero());
    CHECK(df.wedge(df).is_zero());
  }
  auto f = hesse(Q(2));
  auto w = infer_weights(f);
  auto lhs = DifferentialForm::volume(f);
  CHECK(lhs == differential(f).wedge(euler_xi_form(w)));
  // d(xi) = (sum q_i) dz
  CHECK(euler_xi_form(w).exterior_derivative() == DifferentialForm::volume(Polynomial::constant(3, w.trace())));
}
