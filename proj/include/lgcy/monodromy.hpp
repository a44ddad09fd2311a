#pragma once

#include <vector>

#include "lgcy/milnor.hpp"

namespace lgcy {

struct SpectrumEntry {
  Monomial alpha;
  // <alpha + 1, q> - 1
  Rational eigenvalue;
  // eigenvalue mod 1, in [0, 1)
  Rational rotation;
  bool invariant = false;
};

// One entry per standard monomial, sorted by eigenvalue then monomial order.
std::vector<SpectrumEntry> gm_spectrum(const MilnorRing& ring);

// Number of monodromy-invariant classes; requires a Calabi-Yau ring (d = n + 2).
std::size_t invariant_count(const MilnorRing& ring, long n);

// Expands d(z^alpha xi) and compares with <alpha + 1, q> z^alpha dz.
bool xi_derivative_check(const MilnorRing& ring, const Monomial& alpha);

struct FiltrationSplit {
  std::vector<std::size_t> integral;      // h in Z
  std::vector<std::size_t> fractional;    // h not in Z
};

FiltrationSplit deligne_filtration_split(const MilnorRing& ring, const SubringSelector& selector);

}  // namespace lgcy
