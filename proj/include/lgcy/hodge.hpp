#pragma once

#include <string>
#include <vector>

#include "lgcy/milnor.hpp"

namespace lgcy {

struct HodgeReport {
  long n = 0;
  long d = 0;
  // h_a = dim of the piece of degree (a+1)d - (n+2), a = 0..n
  std::vector<std::size_t> levels;
  std::size_t total = 0;
  std::size_t mu_s = 0;
  // dim of the degree-d piece (first-order deformations of f)
  std::size_t marginal_dimension = 0;
  // dim of the degree-(n+1) piece, reported next to the marginal count
  std::size_t degree_n_plus_1_dimension = 0;
};

HodgeReport hodge_numbers(const MilnorRing& ring, long n);

enum class CaseLabel { GreaterThan, LessNotDividing, DividesProperly, CalabiYau };

std::string_view to_string(CaseLabel label);

// Pure function of (d, n + 2); requires d > 1 and n >= 1.
CaseLabel case_label(long d, long n);

struct ClassificationReport {
  long d = 0;
  long n = 0;
  CaseLabel label = CaseLabel::CalabiYau;
  bool contains_unit = false;
  bool contains_socle = false;
  Rational h_unit;
  Rational h_socle;
  std::size_t mu = 0;
  std::size_t mu_s = 0;
  std::size_t hodge_total = 0;
  std::vector<std::size_t> levels;
  // Dimension comparison of R_f^{d*} against the primitive cohomology.
  bool injective_by_dimension = false;   // mu_s <= total
  bool surjective_by_dimension = false;  // mu_s >= total
  bool frobenius_closed = false;
  // 1^vee falls outside the selection (h(1^vee) not integral).
  bool socle_discrepancy = false;
  std::vector<std::string> notes;
};

ClassificationReport classify(const MilnorRing& ring, long d, long n);

// (binom(2n+3, n+2) - (n+2)^2, dim of the degree-(n+2) piece of the Fermat ring of degree n+2)
std::pair<long, long> marginal_dimension_crosscheck(long n);

}  // namespace lgcy
