#include "lgcy/oscillatory.hpp"

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>

#include <cmath>
#include <memory>
#include <sstream>

namespace lgcy {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_degree(long d, long k) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  if (k < 0 || k > d - 2) throw Error(ErrorCode::InvalidArgument, "need 0 <= k <= d - 2");
}

struct Radial {
  long d;
  long k;
};

double radial_integrand(double r, void* p) {
  const auto* q = static_cast<const Radial*>(p);
  return std::exp(-std::pow(r, static_cast<double>(q->d))) * std::pow(r, static_cast<double>(q->k));
}

}  // namespace

ThimbleRay ThimbleRay::make(long d, long a) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  if (a < 0 || a >= d) throw Error(ErrorCode::InvalidArgument, "thimble index out of range");
  return {d, a, std::polar(1.0, kPi * static_cast<double>(2 * a + 1) / static_cast<double>(d))};
}

PeriodResult thimble_integral(long d, long k, long a, double tol) {
  require_degree(d, k);
  if (!(tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance must be positive");
  const ThimbleRay ray = ThimbleRay::make(d, a);
  const double dd = static_cast<double>(d);

  PeriodResult res;
  // For r >= 1 and k <= d - 1, r^k e^{-r^d} <= r^{d-1} e^{-r^d}, whose tail is e^{-R^d}/d.
  res.cutoff = std::max(1.0, std::pow(std::log(10.0 / (dd * tol)), 1.0 / dd));
  res.tail_bound = std::exp(-std::pow(res.cutoff, dd)) / dd;

  gsl_set_error_handler_off();
  std::unique_ptr<gsl_integration_workspace, decltype(&gsl_integration_workspace_free)> ws(
      gsl_integration_workspace_alloc(2000), gsl_integration_workspace_free);
  Radial params{d, k};
  gsl_function fn{&radial_integrand, &params};
  double radial = 0.0, abserr = 0.0;
  const double budget = 0.5 * tol;
  int status = gsl_integration_qag(&fn, 0.0, res.cutoff, budget, 0.0, 2000, GSL_INTEG_GAUSS15, ws.get(), &radial, &abserr);
  res.error_estimate = abserr + res.tail_bound;
  if (status != GSL_SUCCESS || res.error_estimate > tol) {
    std::ostringstream os;
    os << "quadrature error estimate " << res.error_estimate << " exceeds " << tol;
    if (status != GSL_SUCCESS) os << " (" << gsl_strerror(status) << ")";
    throw Error(ErrorCode::ToleranceNotMet, os.str());
  }

  // z = r w, dz = w dr, z^k = w^k r^k.
  const Complex phase = std::pow(ray.direction, static_cast<double>(k + 1));
  res.value = phase * radial;
  res.closed_form = phase * (std::tgamma(static_cast<double>(k + 1) / dd) / dd);
  res.closed_form_note = "w^{k+1} Gamma((k+1)/d)/d, w = exp(i pi (2a+1)/d)";
  res.deviation = std::abs(res.value - res.closed_form);
  return res;
}

Complex fiber_quotient(long d, long k, double t) {
  require_degree(d, k);
  if (!(t < 0.0)) throw Error(ErrorCode::InvalidArgument, "fiber value must be negative");
  const Complex z = std::pow(-t, 1.0 / static_cast<double>(d)) * ThimbleRay::make(d, 0).direction;
  return std::pow(z, static_cast<double>(k)) / (static_cast<double>(d) * std::pow(z, static_cast<double>(d - 1)));
}

ScalingReport scaling_law_check(long d, long k, const std::vector<double>& t_values, double tol) {
  require_degree(d, k);
  ScalingReport rep;
  rep.d = d;
  rep.k = k;
  rep.exponent = static_cast<double>(k + 1) / static_cast<double>(d) - 1.0;
  rep.alternative_exponent = static_cast<double>(k + 1) - 1.0;
  const Complex base = fiber_quotient(d, k, -1.0);
  for (double t : t_values) {
    ScalingSample s;
    s.t = t;
    s.ratio = fiber_quotient(d, k, t) / base;
    s.predicted = std::pow(-t, rep.exponent);
    s.deviation = std::abs(s.ratio - s.predicted);
    s.alternative_deviation = std::abs(s.ratio - std::pow(-t, rep.alternative_exponent));
    rep.max_deviation = std::max(rep.max_deviation, s.deviation);
    rep.alternative_max_deviation = std::max(rep.alternative_max_deviation, s.alternative_deviation);
    rep.samples.push_back(s);
  }
  const bool primary = rep.max_deviation <= tol;
  const bool alternative = rep.alternative_max_deviation <= tol;
  if (primary && alternative)
    rep.matching_exponent = "both";
  else if (primary)
    rep.matching_exponent = "(deg A + N)/d";
  else if (alternative)
    rep.matching_exponent = "deg A + N";
  else
    rep.matching_exponent = "none";
  return rep;
}

GammaProbeReport gamma_factor_probe(long d, long k, long N, double tol) {
  require_degree(d, k);
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  GammaProbeReport rep;
  rep.d = d;
  rep.k = k;
  rep.N = N;
  rep.lhs = thimble_integral(d, k, 0, 0.1 * tol).value;
  rep.fiber_value = fiber_quotient(d, k, -1.0);
  const double over_N = static_cast<double>(N + k) / static_cast<double>(N);
  const double over_d = static_cast<double>(N + k) / static_cast<double>(d);
  for (auto [label, x] : {std::pair<std::string, double>{"(N+k)/N", over_N}, {"(N+k)/d", over_d}}) {
    GammaCandidate c;
    c.label = label;
    c.argument = x;
    c.ratio = rep.lhs / (std::tgamma(x) * rep.fiber_value);
    c.matches = std::abs(std::abs(c.ratio) - 1.0) <= tol;
    rep.candidates.push_back(c);
  }
  rep.coincident = over_N == over_d;
  std::ostringstream os;
  if (rep.coincident) {
    os << "coincident candidates";
  } else if (rep.candidates[0].matches && !rep.candidates[1].matches) {
    os << "(N+k)/N matches";
  } else if (rep.candidates[1].matches && !rep.candidates[0].matches) {
    os << "(N+k)/d matches";
  } else {
    os << (rep.candidates[0].matches ? "both match" : "neither matches");
  }
  const Complex& r = rep.candidates[1].ratio;
  if (rep.candidates[1].matches) os << "; orientation factor " << std::lround(r.real()) << (std::abs(r.imag()) > tol ? " (complex)" : "");
  rep.finding = os.str();
  return rep;
}

}  // namespace lgcy
