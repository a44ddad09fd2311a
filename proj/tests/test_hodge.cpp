#include "doctest.h"
#include "lgcy/hodge.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::fermat;
using lgcy::testing::Q;

namespace {

// Binomial coefficient by Pascal's rule, independent of GMP.
long choose(long a, long b) {
  std::vector<std::vector<long>> t(static_cast<std::size_t>(a + 1));
  for (long i = 0; i <= a; ++i) {
    t[i].assign(static_cast<std::size_t>(i + 1), 1);
    for (long j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
  }
  return t[a][b];
}

// Expected label straight from the (d, N) comparison.
CaseLabel expected_label(long d, long N) {
  if (d > N) return CaseLabel::GreaterThan;
  if (d == N) return CaseLabel::CalabiYau;
  if (N % d == 0) return CaseLabel::DividesProperly;
  return CaseLabel::LessNotDividing;
}

}  // namespace

TEST_CASE("Hodge levels of Calabi-Yau and other hypersurfaces") {
  auto quintic = hodge_numbers(MilnorRing::build(fermat(5, 5)), 3);
  CHECK(quintic.levels == std::vector<std::size_t>{1, 101, 101, 1});
  CHECK(quintic.total == 204);
  CHECK(quintic.mu_s == 204);
  CHECK(quintic.marginal_dimension == 101);
  CHECK(quintic.degree_n_plus_1_dimension == 65);

  auto k3 = hodge_numbers(MilnorRing::build(fermat(4, 4)), 2);
  CHECK(k3.levels == std::vector<std::size_t>{1, 19, 1});
  CHECK(k3.total == 21);

  auto surface = hodge_numbers(MilnorRing::build(fermat(4, 3)), 2);
  CHECK(surface.levels == std::vector<std::size_t>{0, 6, 0});
  CHECK(surface.total == 6);

  auto curve = hodge_numbers(MilnorRing::build(fermat(3, 3)), 1);
  CHECK(curve.levels == std::vector<std::size_t>{1, 1});
}

TEST_CASE("CY symmetry and mu_s equals the level sum when d = n + 2") {
  for (long n = 1; n <= 3; ++n) {
    auto ring = MilnorRing::build(fermat(static_cast<std::size_t>(n + 2), static_cast<unsigned>(n + 2)));
    auto h = hodge_numbers(ring, n);
    for (long a = 0; a <= n; ++a) CHECK(h.levels[a] == h.levels[n - a]);
    CHECK(h.mu_s == h.total);
  }
  auto hesse = MilnorRing::build(lgcy::testing::P("z1^3 + z2^3 + z3^3 + 2*z1*z2*z3", 3));
  CHECK(hodge_numbers(hesse, 1).total == 2);
}

TEST_CASE("case labels partition the (d, N) grid") {
  for (long d = 2; d <= 9; ++d)
    for (long n = 1; n <= 8; ++n) CHECK(case_label(d, n) == expected_label(d, n + 2));
  CHECK(case_label(4, 1) == CaseLabel::GreaterThan);
  CHECK(case_label(2, 2) == CaseLabel::DividesProperly);
  CHECK(case_label(3, 2) == CaseLabel::LessNotDividing);
  CHECK(case_label(3, 4) == CaseLabel::DividesProperly);
  CHECK(case_label(5, 3) == CaseLabel::CalabiYau);
  CHECK_THROWS_AS(case_label(1, 3), Error);
}

TEST_CASE("classification examples with dimension evidence") {
  auto quartic_curve = classify(MilnorRing::build(fermat(3, 4)), 4, 1);
  CHECK(quartic_curve.label == CaseLabel::GreaterThan);
  CHECK(quartic_curve.mu_s == 6);
  CHECK(quartic_curve.hodge_total == 6);
  CHECK_FALSE(quartic_curve.contains_unit);

  auto sextic_curve = classify(MilnorRing::build(fermat(3, 6)), 6, 1);
  CHECK(sextic_curve.label == CaseLabel::GreaterThan);
  CHECK(sextic_curve.mu_s == 20);
  CHECK(sextic_curve.hodge_total == 20);

  auto quadric = classify(MilnorRing::build(fermat(4, 2)), 2, 2);
  CHECK(quadric.label == CaseLabel::DividesProperly);
  CHECK(quadric.mu_s == 1);
  CHECK(quadric.contains_unit);

  auto cubic_surface = classify(MilnorRing::build(fermat(4, 3)), 3, 2);
  CHECK(cubic_surface.label == CaseLabel::LessNotDividing);
  CHECK(cubic_surface.mu_s == 6);
  CHECK(cubic_surface.hodge_total == 6);
  CHECK(cubic_surface.injective_by_dimension);
  CHECK(cubic_surface.surjective_by_dimension);
  CHECK(cubic_surface.socle_discrepancy);
  CHECK(cubic_surface.h_socle == Q(8, 3));
  CHECK_FALSE(cubic_surface.frobenius_closed);

  auto fourfold = classify(MilnorRing::build(fermat(6, 3)), 3, 4);
  CHECK(fourfold.label == CaseLabel::DividesProperly);
  CHECK(fourfold.mu_s == 22);
  CHECK(fourfold.levels == std::vector<std::size_t>{0, 1, 20, 1, 0});
  CHECK(fourfold.contains_unit);
  CHECK(fourfold.contains_socle);
  CHECK(fourfold.frobenius_closed);

  auto quartic_surface = classify(MilnorRing::build(fermat(4, 4)), 4, 2);
  CHECK(quartic_surface.label == CaseLabel::CalabiYau);
  CHECK(quartic_surface.frobenius_closed);
  auto quintic_curve = classify(MilnorRing::build(fermat(3, 5)), 5, 1);
  CHECK_FALSE(quintic_curve.frobenius_closed);
}

TEST_CASE("socle membership iff d divides n + 2") {
  for (long n = 1; n <= 3; ++n)
    for (long d = 2; d <= 5; ++d) {
      auto ring = MilnorRing::build(fermat(static_cast<std::size_t>(n + 2), static_cast<unsigned>(d)));
      auto c = classify(ring, d, n);
      CHECK(c.h_socle == make_rational((n + 2) * (d - 1), d));
      CHECK(c.contains_socle == ((n + 2) % d == 0));
      CHECK(c.contains_unit == ((n + 2) % d == 0));
      if ((n + 2) % d == 0) CHECK(c.frobenius_closed);
      // For d = 2 and odd n + 2 nothing is selected.
      if (d == 2 && (n + 2) % 2 == 1) CHECK(c.mu_s == 0);
    }
}

TEST_CASE("marginal dimension cross-check") {
  CHECK(marginal_dimension_crosscheck(1) == std::pair<long, long>{1, 1});
  CHECK(marginal_dimension_crosscheck(2) == std::pair<long, long>{19, 19});
  CHECK(marginal_dimension_crosscheck(3) == std::pair<long, long>{101, 101});
  for (long n = 1; n <= 4; ++n) CHECK(marginal_dimension_crosscheck(n).first == choose(2 * n + 3, n + 2) - (n + 2) * (n + 2));
}
