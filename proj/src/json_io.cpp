#include "lgcy/json_io.hpp"

#include <cstdio>

namespace lgcy {

Json rational_to_json(const Rational& q) { return to_string(q); }

Json rationals_to_json(std::span<const Rational> qs) {
  Json out = Json::array();
  for (const auto& q : qs) out.push_back(rational_to_json(q));
  return out;
}

Json polynomial_to_json(const Polynomial& p) {
  Json j;
  j["nvars"] = p.nvars();
  j["terms"] = Json::array();
  for (const auto& t : p.terms()) {
    Json term;
    term["exponents"] = t.mono.exponents();
    term["coeff"] = to_string(t.coeff);
    j["terms"].push_back(std::move(term));
  }
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  const std::size_t n = j.at("nvars").get<std::size_t>();
  std::vector<Polynomial::Term> terms;
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exponents").get<std::vector<int>>();
    if (e.size() != n) throw Error(ErrorCode::DimensionMismatch, "exponent vector length differs from nvars");
    terms.push_back({Monomial::from_exponents(e), parse_rational(t.at("coeff").get<std::string>())});
  }
  return Polynomial::from_terms(n, std::move(terms));
}

std::string content_hash(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lgcy
