#include "lgcy/monodromy.hpp"

#include "lgcy/forms.hpp"

namespace lgcy {

namespace {

Rational frac(const Rational& x) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return x - Rational(fl);
}

Rational shifted_degree(const WeightSystem& w, const Monomial& a) {
  Rational s(0);
  for (std::size_t i = 0; i < w.nvars(); ++i) s += Rational(static_cast<long>(a[i]) + 1) * w.q()[i];
  return s;
}

}  // namespace

std::vector<SpectrumEntry> gm_spectrum(const MilnorRing& ring) {
  std::vector<SpectrumEntry> out;
  for (std::size_t i = 0; i < ring.mu(); ++i) {
    SpectrumEntry e;
    e.alpha = ring.monomial(i);
    e.eigenvalue = shifted_degree(ring.weights(), e.alpha) - 1;
    e.rotation = frac(e.eigenvalue);
    e.invariant = sgn(e.rotation) == 0;
    out.push_back(std::move(e));
  }
  std::stable_sort(out.begin(), out.end(), [](const SpectrumEntry& a, const SpectrumEntry& b) {
    if (a.eigenvalue != b.eigenvalue) return a.eigenvalue < b.eigenvalue;
    return grevlex(a.alpha, b.alpha) < 0;
  });
  return out;
}

std::size_t invariant_count(const MilnorRing& ring, long n) {
  auto d = ring.weights().homogeneous_degree();
  if (!d || *d != n + 2 || ring.nvars() != static_cast<std::size_t>(n + 2))
    throw Error(ErrorCode::InvalidArgument, "invariant count needs a homogeneous f of degree n + 2 in n + 2 variables");
  std::size_t count = 0;
  for (const auto& e : gm_spectrum(ring)) count += e.invariant ? 1 : 0;
  return count;
}

bool xi_derivative_check(const MilnorRing& ring, const Monomial& alpha) {
  const std::size_t N = ring.nvars();
  if (alpha.nvars() != N) throw Error(ErrorCode::DimensionMismatch, "exponent length differs from ring");
  auto za = Polynomial::monomial(alpha);
  DifferentialForm lhs = euler_xi_form(ring.weights()).times(za).exterior_derivative();
  DifferentialForm rhs = DifferentialForm::volume(za.scaled(shifted_degree(ring.weights(), alpha)));
  return lhs == rhs;
}

FiltrationSplit deligne_filtration_split(const MilnorRing& ring, const SubringSelector& selector) {
  if (ring.nvars() < 2) throw Error(ErrorCode::InvalidArgument, "filtration split needs N = n + 2 >= 2");
  FiltrationSplit s;
  for (std::size_t i = 0; i < ring.mu(); ++i) {
    if (selector.h[i].get_den() == 1)
      s.integral.push_back(i);
    else
      s.fractional.push_back(i);
  }
  return s;
}

}  // namespace lgcy
