#include "lgcy/hodge.hpp"

namespace lgcy {

HodgeReport hodge_numbers(const MilnorRing& ring, long n) {
  auto d = ring.weights().homogeneous_degree();
  if (!d) throw Error(ErrorCode::InvalidArgument, "Hodge levels need a homogeneous f");
  if (static_cast<std::size_t>(n + 2) != ring.nvars())
    throw Error(ErrorCode::DimensionMismatch, "Hodge levels need N = n + 2 variables");
  HodgeReport r;
  r.n = n;
  r.d = *d;
  auto dim = [&](long deg) { return ring.piece(deg).size(); };
  for (long a = 0; a <= n; ++a) {
    r.levels.push_back(dim((a + 1) * *d - (n + 2)));
    r.total += r.levels.back();
  }
  r.mu_s = subring_selector(ring, *d, n, false).mu_s;
  r.marginal_dimension = dim(*d);
  r.degree_n_plus_1_dimension = dim(n + 1);
  return r;
}

std::string_view to_string(CaseLabel label) {
  switch (label) {
    case CaseLabel::GreaterThan: return "GreaterThan";
    case CaseLabel::LessNotDividing: return "LessNotDividing";
    case CaseLabel::DividesProperly: return "DividesProperly";
    case CaseLabel::CalabiYau: return "CalabiYau";
  }
  return "Unknown";
}

CaseLabel case_label(long d, long n) {
  if (d < 2 || n < 1) throw Error(ErrorCode::InvalidArgument, "classification needs d > 1 and n >= 1");
  const long N = n + 2;
  if (d > N) return CaseLabel::GreaterThan;
  if (d == N) return CaseLabel::CalabiYau;
  return N % d == 0 ? CaseLabel::DividesProperly : CaseLabel::LessNotDividing;
}

ClassificationReport classify(const MilnorRing& ring, long d, long n) {
  ClassificationReport c;
  c.d = d;
  c.n = n;
  c.label = case_label(d, n);
  auto sel = subring_selector(ring, d, n, true);
  auto hodge = hodge_numbers(ring, n);
  c.contains_unit = sel.contains_unit;
  c.contains_socle = sel.contains_socle;
  c.h_unit = sel.h_unit;
  c.h_socle = sel.h_socle;
  c.mu = ring.mu();
  c.mu_s = sel.mu_s;
  c.levels = hodge.levels;
  c.hodge_total = hodge.total;
  c.injective_by_dimension = c.mu_s <= c.hodge_total;
  c.surjective_by_dimension = c.mu_s >= c.hodge_total;
  c.frobenius_closed = sel.closed_under_multiplication.value_or(false);
  c.socle_discrepancy = !c.contains_socle;
  if (c.socle_discrepancy)
    c.notes.push_back("h(1^vee) = " + to_string(c.h_socle) + " is not an integer, so 1^vee is outside R_f^{d*}");
  if (c.label == CaseLabel::LessNotDividing && c.injective_by_dimension && c.surjective_by_dimension)
    c.notes.push_back("dimensions coincide (" + std::to_string(c.mu_s) + " = " + std::to_string(c.hodge_total) +
                      "); the inclusion is bijective on this input");
  return c;
}

std::pair<long, long> marginal_dimension_crosscheck(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * n + 3), static_cast<unsigned long>(n + 2));
  long formula = b.get_si() - (n + 2) * (n + 2);
  std::vector<Polynomial::Term> terms;
  const std::size_t N = static_cast<std::size_t>(n + 2);
  for (std::size_t i = 0; i < N; ++i) terms.push_back({Monomial::variable(N, i, static_cast<unsigned>(n + 2)), Rational(1)});
  auto ring = MilnorRing::build(Polynomial::from_terms(N, terms));
  return {formula, static_cast<long>(ring.piece(n + 2).size())};
}

}  // namespace lgcy
