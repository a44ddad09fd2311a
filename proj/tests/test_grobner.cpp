#include <cstdlib>
#include <filesystem>
#include <random>

#include "doctest.h"
#include "lgcy/grobner.hpp"
#include "lgcy/parse.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::fermat;
using lgcy::testing::P;
using lgcy::testing::Q;

namespace {

GroebnerBasis jacobian_gb(const Polynomial& f) {
  auto gens = jacobian_generators(f);
  return buchberger(gens);
}

Polynomial hesse(const Rational& u) { return fermat(3, 3) + Polynomial::monomial(Monomial{1, 1, 1}, u); }

// Coefficients of prod_i (1 + t + ... + t^{d-2}).
std::vector<long> fermat_series(std::size_t nvars, unsigned d) {
  std::vector<long> s{1};
  for (std::size_t i = 0; i < nvars; ++i) {
    std::vector<long> next(s.size() + d - 2, 0);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (unsigned b = 0; b + 1 < d; ++b) next[a + b] += s[a];
    s = next;
  }
  return s;
}

bool is_reduced(const GroebnerBasis& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].leading().coeff != 1) return false;
    for (std::size_t j = 0; j < gens.size(); ++j)
      for (const auto& t : gens[j].terms())
        if (i != j && gens[i].leading().mono.divides(t.mono)) return false;
  }
  for (std::size_t i = 1; i < gens.size(); ++i)
    if (grevlex(gens[i - 1].leading().mono, gens[i].leading().mono) >= 0) return false;
  return true;
}

}  // namespace

TEST_CASE("single univariate generator is made monic") {
  auto names = std::vector<std::string>{"z"};
  std::vector<Polynomial> gens{parse_polynomial("3*z^2", names)};
  auto g = buchberger(gens);
  REQUIRE(g.size() == 1);
  CHECK(g.generators()[0] == parse_polynomial("z^2", names));
  auto sm = standard_monomials(g);
  REQUIRE(sm);
  CHECK(sm->size() == 2);
  CHECK(sm->monomials[0] == Monomial{0});
  CHECK(sm->monomials[1] == Monomial{1});
}

TEST_CASE("Fermat cubic Jacobian ideal is already a monomial basis") {
  auto g = jacobian_gb(fermat(3, 3));
  REQUIRE(g.size() == 3);
  CHECK(g.generators()[0] == P("z3^2", 3));
  CHECK(g.generators()[1] == P("z2^2", 3));
  CHECK(g.generators()[2] == P("z1^2", 3));
  CHECK(g.ideal_is_graded());
  CHECK(normal_form(P("z1^2", 3), g).is_zero());
}

TEST_CASE("Hesse Jacobian normal forms") {
  for (const Rational& u : {Q(1), Q(3), Q(1, 2), Q(-2, 7)}) {
    auto g = jacobian_gb(hesse(u));
    CHECK(is_reduced(g));
    CHECK(satisfies_buchberger_criterion(g));
    auto sm = standard_monomials(g);
    REQUIRE(sm);
    CHECK(sm->size() == 8);
    // z1^2 = -(u/3) z2 z3 modulo the ideal, hence z1^3 = -(u/3) z1 z2 z3.
    auto target = P("z1^3", 3) + Polynomial::monomial(Monomial{1, 1, 1}, u / 3);
    CHECK(normal_form(target, g).is_zero());
    CHECK(normal_form(P("z1^3", 3), g) == normal_form(Polynomial::monomial(Monomial{1, 1, 1}, -u / 3), g));
  }
}

TEST_CASE("normal forms are idempotent and degree preserving") {
  std::mt19937_64 rng(17);
  auto g = jacobian_gb(hesse(Q(2, 3)));
  for (int trial = 0; trial < 50; ++trial) {
    auto p = testing::random_polynomial(rng, 3, 18, 6);
    auto r = normal_form(p, g);
    CHECK(normal_form(r, g) == r);
    for (const auto& t : r.terms()) CHECK_FALSE(g.find_divisor(t.mono));
    // Each homogeneous component reduces inside its own degree.
    std::map<unsigned, std::vector<Polynomial::Term>> parts;
    for (const auto& t : p.terms()) parts[t.mono.degree()].push_back(t);
    for (auto& [deg, terms] : parts) {
      auto component = normal_form(Polynomial::from_terms(3, terms), g);
      for (const auto& t : component.terms()) CHECK(t.mono.degree() == deg);
    }
    // The difference lies in the ideal.
    CHECK(normal_form(p - r, g).is_zero());
  }
}

TEST_CASE("Buchberger criterion and reducedness on assorted ideals") {
  for (const char* text : {"z1^3 + z1*z2^2 + z3^3", "z1^4 + z2^4 + z3^4 + z4^4 + z1*z2*z3*z4",
                           "z1^2*z2 + z2^4 + z3^3", "z1^5 + z2^5 + z1^3*z2^2", "z1^3 + z2^3 + z3^3 + z1^2*z2"}) {
    auto f = parse_polynomial(text).poly;
    auto g = jacobian_gb(f);
    CAPTURE(text);
    CHECK(is_reduced(g));
    CHECK(satisfies_buchberger_criterion(g));
    auto w = infer_weights(f);
    auto sm = standard_monomials(g);
    REQUIRE(sm);
    CHECK(Rational(static_cast<long>(sm->size())) == w.milnor_number());
  }
}

TEST_CASE("Groebner basis is independent of generator order and scaling") {
  auto f = P("z1^4 + z2^4 + z3^4 + 2*z1^2*z2*z3 - z1*z2^3", 3);
  auto gens = jacobian_generators(f);
  auto a = buchberger(gens);
  std::reverse(gens.begin(), gens.end());
  for (auto& g : gens) g = g.scaled(Q(-3, 2));
  auto b = buchberger(gens);
  CHECK(a == b);
}

TEST_CASE("standard monomials of the Fermat quintic") {
  auto g = jacobian_gb(fermat(5, 5));
  auto sm = standard_monomials(g);
  REQUIRE(sm);
  CHECK(sm->size() == 1024);
  for (const auto& m : sm->monomials)
    for (std::size_t i = 0; i < 5; ++i) CHECK(m[i] <= 3);
  auto series = fermat_series(5, 5);
  for (std::size_t k = 0; k < series.size(); ++k)
    CHECK(static_cast<long>(sm->by_degree[static_cast<unsigned>(k)].size()) == series[k]);
  CHECK(sm->by_degree[5].size() == 101);
}

TEST_CASE("permuting variables of a symmetric input preserves the quotient size") {
  auto f = P("z1^3 + z2^3 + z3^3 + z1*z2*z3 + z1^2*z2 + z2^2*z3 + z3^2*z1", 3);
  auto fp = P("z2^3 + z3^3 + z1^3 + z2*z3*z1 + z2^2*z3 + z3^2*z1 + z1^2*z2", 3);
  auto fq = P("z3^3 + z1^3 + z2^3 + z1*z2*z3 + z3^2*z2 + z2^2*z1 + z1^2*z3", 3);
  auto a = standard_monomials(jacobian_gb(f));
  auto b = standard_monomials(jacobian_gb(fp));
  auto c = standard_monomials(jacobian_gb(fq));
  REQUIRE(a);
  REQUIRE(b);
  REQUIRE(c);
  CHECK(a->size() == b->size());
  CHECK(a->size() == c->size());
}

TEST_CASE("non-isolated Jacobian ideal has an infinite quotient") {
  // Jacobian ideal (z1^2, z1 z2) vanishes along the z2-axis.
  auto g = jacobian_gb(P("z1^3 + z1^2*z2", 2));
  CHECK_FALSE(standard_monomials(g));
  auto missing = missing_pure_powers(g);
  REQUIRE(missing.size() == 1);
  CHECK(missing[0] == 1);
}

TEST_CASE("three distinct lines through the origin form an isolated singularity") {
  // z1 z2 (z1 + z2): the two partials only vanish together at the origin.
  auto g = jacobian_gb(P("z1^2*z2 + z1*z2^2", 2));
  auto sm = standard_monomials(g);
  REQUIRE(sm);
  CHECK(sm->size() == 4);
}

TEST_CASE("on-disk cache returns the same basis") {
  auto dir = std::filesystem::temp_directory_path() / "lgcy-gb-cache-test";
  std::filesystem::remove_all(dir);
  setenv("LGCY_CACHE_DIR", dir.c_str(), 1);
  auto gens = jacobian_generators(hesse(Q(5, 3)));
  auto fresh = buchberger(gens);
  auto first = buchberger_cached(gens);
  auto second = buchberger_cached(gens);
  CHECK(first == fresh);
  CHECK(second == fresh);
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) == 1);
  unsetenv("LGCY_CACHE_DIR");
  std::filesystem::remove_all(dir);
}
