#pragma once

#include <string>
#include <vector>

#include "lgcy/matrix.hpp"

namespace lgcy {

// Ray z = r e^{i pi (2a+1)/d}, r >= 0, on which z^d = -r^d.
struct ThimbleRay {
  long d = 2;
  long a = 0;
  Complex direction;

  static ThimbleRay make(long d, long a);
};

struct PeriodResult {
  Complex value;
  // Quadrature estimate on [0, R] plus the analytic tail bound beyond R.
  double error_estimate = 0.0;
  double cutoff = 0.0;
  double tail_bound = 0.0;
  Complex closed_form;
  std::string closed_form_note;
  double deviation = 0.0;
};

// int_{ray a} e^{z^d} z^k dz. Requires d >= 2, 0 <= k <= d - 2, 0 <= a < d.
// Throws ToleranceNotMet when the error budget cannot be met.
PeriodResult thimble_integral(long d, long k, long a, double tol);

// Q(z^k, t) = z^k / f'(z) at the point of ray 0 with z^d = t < 0.
Complex fiber_quotient(long d, long k, double t);

struct ScalingSample {
  double t = 0.0;
  Complex ratio;
  double predicted = 0.0;
  double deviation = 0.0;
  double alternative_deviation = 0.0;
};

struct ScalingReport {
  long d = 0;
  long k = 0;
  // Exponent h - 1 with h = (k + 1)/d, and the alternative h = k + 1.
  double exponent = 0.0;
  double alternative_exponent = 0.0;
  std::vector<ScalingSample> samples;
  double max_deviation = 0.0;
  double alternative_max_deviation = 0.0;
  std::string matching_exponent;
};

// Compares Q(A, t)/Q(A, -1) with (-t)^{h-1}; the report names the exponent
// reading that matches within tol.
ScalingReport scaling_law_check(long d, long k, const std::vector<double>& t_values, double tol = 1e-12);

struct GammaCandidate {
  std::string label;
  double argument = 0.0;
  // LHS / (Gamma(argument) * Q(A, -1)); a matching reading gives a unit
  // complex number (the orientation of the vanishing point).
  Complex ratio;
  bool matches = false;
};

struct GammaProbeReport {
  long d = 0;
  long k = 0;
  long N = 1;
  Complex lhs;
  Complex fiber_value;
  std::vector<GammaCandidate> candidates;
  bool coincident = false;
  std::string finding;
};

// Univariate probe of the Gamma argument (N + k)/N versus (N + k)/d. The
// integral is always the univariate one; N only enters the candidate
// arguments, so d = N shows the degenerate agreement.
GammaProbeReport gamma_factor_probe(long d, long k, long N = 1, double tol = 1e-8);

}  // namespace lgcy
