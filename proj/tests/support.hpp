#pragma once

#include <random>
#include <string_view>

#include "lgcy/parse.hpp"

namespace lgcy::testing {

// Parses over z1..zn regardless of the order in which names appear.
inline Polynomial P(std::string_view text, std::size_t nvars) {
  auto names = default_variable_names(nvars);
  return parse_polynomial(text, names);
}

inline Polynomial fermat(std::size_t nvars, unsigned d) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < nvars; ++i) terms.push_back({Monomial::variable(nvars, i, d), Rational(1)});
  return Polynomial::from_terms(nvars, terms);
}

inline Rational Q(long p, long q = 1) { return make_rational(p, q); }

inline Rational random_rational(std::mt19937_64& rng, long range = 9) {
  std::uniform_int_distribution<long> num(-range, range), den(1, range);
  return make_rational(num(rng), den(rng));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t nvars, unsigned max_degree, int nterms) {
  std::uniform_int_distribution<unsigned> e(0, max_degree);
  std::vector<Polynomial::Term> terms;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(nvars);
    for (std::size_t i = 0; i < nvars; ++i) m.set(i, e(rng) / static_cast<unsigned>(nvars));
    terms.push_back({m, random_rational(rng)});
  }
  return Polynomial::from_terms(nvars, terms);
}

}  // namespace lgcy::testing
