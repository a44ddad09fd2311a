#include "doctest.h"
#include "lgcy/ttstar.hpp"
#include "support.hpp"

using namespace lgcy;
using lgcy::testing::fermat;
using lgcy::testing::P;
using lgcy::testing::Q;

namespace {

Polynomial hesse(const Rational& u) { return fermat(3, 3) + Polynomial::monomial(Monomial{1, 1, 1}, u); }

GaussianRational G(long re, long im = 0) { return GaussianRational(Rational(re), Rational(im)); }

CheckStatus status(const AxiomReport& r, std::string_view name) {
  const auto* c = r.find(name);
  REQUIRE(c != nullptr);
  return c->status;
}

}  // namespace

TEST_CASE("Hesse pencil data satisfies the axioms") {
  auto ring = MilnorRing::build(hesse(Q(1, 2)));
  auto sel = subring_selector(ring, 3, 1);
  REQUIRE(sel.mu_s == 2);
  std::vector<Polynomial> dirs{P("z1*z2*z3", 3)};
  auto lg = assemble_lg(ring, sel, dirs);
  auto rep = verify_axioms(lg);
  CHECK(rep.exact);
  CHECK(rep.ok());
  CHECK(status(rep, "connection real") == CheckStatus::NotChecked);
  CHECK(!lg.C[0].is_zero());

  auto fl = verify_axioms(to_complex(lg));
  CHECK(!fl.exact);
  CHECK(fl.ok());
  for (const auto& c : fl.checks) CHECK(c.defect <= kFloatTolerance);
}

TEST_CASE("Axiom failures are reported per check") {
  auto ring = MilnorRing::build(hesse(Q(1, 2)));
  auto sel = subring_selector(ring, 3, 1);
  auto lg = assemble_lg(ring, sel, {P("z1*z2*z3", 3)});

  auto doubled = lg;
  doubled.K = G(2) * GaussianMatrix::identity(2);
  auto r1 = verify_axioms(doubled);
  CHECK(status(r1, "kappa involution") == CheckStatus::Fail);
  CHECK(!r1.ok());

  // i * identity is an involution under conj but breaks realness of g.
  auto twisted = lg;
  twisted.K = G(0, 1) * GaussianMatrix::identity(2);
  auto r2 = verify_axioms(twisted);
  CHECK(status(r2, "kappa involution") == CheckStatus::Pass);
  CHECK(status(r2, "g real") == CheckStatus::Fail);

  auto skew = lg;
  GaussianMatrix c(2, 2);
  c.set(0, 0, G(1));
  c.set(0, 1, G(1));
  skew.C = {c};
  CHECK(status(verify_axioms(skew), "C self-adjoint") == CheckStatus::Fail);

  TtStarData<GaussianRational> two;
  two.eta = GaussianMatrix::identity(2);
  two.K = GaussianMatrix::identity(2);
  GaussianMatrix a(2, 2), b(2, 2);
  a.set(0, 0, G(1));
  b.set(0, 1, G(1));
  b.set(1, 0, G(1));
  two.C = {a, b};
  auto r3 = verify_axioms(two);
  CHECK(status(r3, "C self-adjoint") == CheckStatus::Pass);
  CHECK(status(r3, "C commute") == CheckStatus::Fail);

  auto singular = lg;
  singular.eta = GaussianMatrix(2, 2);
  CHECK(status(verify_axioms(singular), "eta nondegenerate") == CheckStatus::Fail);

  auto bad = lg;
  bad.K = GaussianMatrix::identity(3);
  CHECK_THROWS_AS(verify_axioms(bad), Error);
}

TEST_CASE("Connection samples and metric probes") {
  TtStarData<GaussianRational> d;
  d.eta = GaussianMatrix::identity(2);
  d.K = GaussianMatrix::identity(2);
  GaussianMatrix D(2, 2);
  D.set(0, 1, G(1, 1));
  d.connection = {{D, D.conjugate()}};
  d.metric_instance = true;
  auto ok = verify_axioms(d);
  CHECK(ok.ok());
  CHECK(status(ok, "connection real") == CheckStatus::Pass);
  CHECK(status(ok, "g positive on probes") == CheckStatus::Pass);

  d.connection = {{D, D}};
  CHECK(status(verify_axioms(d), "connection real") == CheckStatus::Fail);

  d.connection.clear();
  d.eta = G(-1) * GaussianMatrix::identity(2);
  CHECK(status(verify_axioms(d), "g positive on probes") == CheckStatus::Fail);
}

TEST_CASE("Embedding checks") {
  auto ring = MilnorRing::build(hesse(Q(1, 2)));
  auto sel = subring_selector(ring, 3, 1);
  std::vector<Polynomial> dirs{P("z1*z2*z3", 3)};
  auto lg = assemble_lg(ring, sel, dirs);

  auto id = verify_embedding(lg, lg, GaussianMatrix::identity(2));
  CHECK(id.ok());

  GaussianMatrix scale = GaussianMatrix::identity(2);
  scale.set(0, 0, G(2));
  auto scaled = verify_embedding(lg, lg, scale);
  CHECK(status(scaled, "pairing pullback") == CheckStatus::Fail);

  auto full = assemble_full(ring, dirs);
  CHECK(verify_axioms(full).ok());
  auto inc = verify_embedding(lg, full, inclusion_matrix(ring, sel));
  CHECK(inc.ok());
  CHECK(status(inc, "C intertwining") == CheckStatus::Pass);

  CHECK_THROWS_AS(verify_embedding(lg, lg, GaussianMatrix(2, 2)), Error);
  try {
    verify_embedding(lg, lg, GaussianMatrix(2, 2));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
  CHECK_THROWS_AS(verify_embedding(lg, full, GaussianMatrix::identity(2)), Error);

  auto flo = verify_embedding(to_complex(lg), to_complex(full), to_complex(inclusion_matrix(ring, sel)));
  CHECK(flo.ok());
  try {
    verify_embedding(to_complex(lg), to_complex(lg), ComplexMatrix(2, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankDeficient);
  }
}

TEST_CASE("LG and CY data agree under the identity frame") {
  for (const auto& u : {Q(0), Q(1, 2), Q(-2, 3)}) {
    auto ring = MilnorRing::build(hesse(u));
    auto sel = subring_selector(ring, 3, 1);
    std::vector<Polynomial> dirs{P("z1*z2*z3", 3)};
    auto lg = assemble_lg(ring, sel, dirs);
    auto cy = assemble_cy(ring, sel, dirs);
    CHECK(verify_axioms(cy).ok());
    CHECK(cy.eta == lg.eta);
    CHECK(cy.C[0] == lg.C[0]);
    CHECK(verify_embedding(cy, lg, GaussianMatrix::identity(sel.mu_s)).ok());
  }
}

TEST_CASE("Quartic K3 subring embeds into the full ring") {
  auto ring = MilnorRing::build(fermat(4, 4));
  auto sel = subring_selector(ring, 4, 2);
  REQUIRE(sel.mu_s == 21);
  std::vector<Polynomial> dirs{P("z1*z2*z3*z4", 4), P("z1^2*z2^2", 4)};
  auto lg = assemble_lg(ring, sel, dirs);
  auto cy = assemble_cy(ring, sel, dirs);
  CHECK(verify_axioms(lg).ok());
  CHECK(verify_embedding(cy, lg, GaussianMatrix::identity(21)).ok());
  auto full = assemble_full(ring, dirs);
  CHECK(verify_embedding(lg, full, inclusion_matrix(ring, sel)).ok());

  // Non-marginal directions are rejected on the CY side.
  CHECK_THROWS_AS(assemble_cy(ring, sel, {P("z1^2", 4)}), Error);
}
