#pragma once

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lgcy/poly.hpp"

namespace lgcy {

// Reduced Groebner basis under grevlex: monic generators, sorted by
// ascending leading monomial, no leading term dividing another.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::size_t nvars, std::vector<Polynomial> generators, bool ideal_is_graded);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  bool ideal_is_graded() const { return graded_; }
  std::size_t size() const { return gens_.size(); }

  // First generator whose leading monomial divides m.
  std::optional<std::size_t> find_divisor(const Monomial& m) const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) { return a.gens_ == b.gens_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Polynomial> gens_;
  std::vector<Monomial> leads_;
  bool graded_ = false;
};

GroebnerBasis buchberger(std::span<const Polynomial> generators);

// Same as buchberger, backed by an on-disk cache when LGCY_CACHE_DIR is set.
GroebnerBasis buchberger_cached(std::span<const Polynomial> generators);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

// Remainder of full reduction: no term divisible by a leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g);
Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors);

// Buchberger criterion: every S-polynomial reduces to zero.
bool satisfies_buchberger_criterion(const GroebnerBasis& g);

// Monomials outside the leading-term ideal, ascending grevlex.
struct StandardMonomialBasis {
  std::vector<Monomial> monomials;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  // total degree -> positions in `monomials`
  std::map<unsigned, std::vector<std::size_t>> by_degree;

  std::size_t size() const { return monomials.size(); }
  std::optional<std::size_t> find(const Monomial& m) const {
    auto it = index.find(m);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

// Variables with no pure power among the leading monomials.
std::vector<std::size_t> missing_pure_powers(const GroebnerBasis& g);

// nullopt signals an infinite-dimensional quotient.
std::optional<StandardMonomialBasis> standard_monomials(const GroebnerBasis& g);

}  // namespace lgcy
