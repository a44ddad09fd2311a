#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/scalars.hpp"

namespace lgcy {

inline constexpr std::size_t kMaxVars = 16;

// Exponent vector z^alpha. Variables are positional; names only exist in
// the parser layer.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<unsigned> exponents);
  static Monomial from_exponents(std::span<const int> exponents);
  static Monomial variable(std::size_t nvars, std::size_t index, unsigned power = 1);

  std::size_t nvars() const { return nvars_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned degree() const { return degree_; }
  void set(std::size_t i, unsigned e);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;
  // Precondition: divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::vector<int> exponents() const;
  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

 private:
  std::array<std::uint16_t, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t degree_ = 0;
};

// Graded reverse lexicographic order with z1 > z2 > ... > zN.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};


// Sparse polynomial; terms are kept sorted in descending grevlex order with
// no zero coefficients.
template <class Coeff>
class BasicPolynomial {
 public:
  struct Term {
    Monomial mono;
    Coeff coeff;
    friend bool operator==(const Term& a, const Term& b) { return a.mono == b.mono && a.coeff == b.coeff; }
  };

  BasicPolynomial() = default;
  explicit BasicPolynomial(std::size_t nvars) : nvars_(nvars) {}

  static BasicPolynomial from_terms(std::size_t nvars, std::vector<Term> terms);
  static BasicPolynomial constant(std::size_t nvars, Coeff c);
  static BasicPolynomial monomial(const Monomial& m, Coeff c = Coeff(1));
  static BasicPolynomial variable(std::size_t nvars, std::size_t index);

  std::size_t nvars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;
  Coeff coefficient(const Monomial& m) const;

  BasicPolynomial derivative(std::size_t var) const;
  BasicPolynomial times(const Monomial& m, const Coeff& c) const;

  BasicPolynomial& operator+=(const BasicPolynomial& o) { return *this = *this + o; }
  BasicPolynomial& operator-=(const BasicPolynomial& o) { return *this = *this - o; }
  BasicPolynomial& operator*=(const BasicPolynomial& o) { return *this = *this * o; }

  friend BasicPolynomial operator+(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, Coeff(1)); }
  friend BasicPolynomial operator-(const BasicPolynomial& a, const BasicPolynomial& b) { return merge(a, b, Coeff(-1)); }
  friend BasicPolynomial operator-(const BasicPolynomial& a) { return a.scaled(Coeff(-1)); }
  friend BasicPolynomial operator*(const BasicPolynomial& a, const BasicPolynomial& b) { return a.multiply(b); }
  friend BasicPolynomial operator*(const Coeff& c, const BasicPolynomial& a) { return a.scaled(c); }
  friend bool operator==(const BasicPolynomial& a, const BasicPolynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  BasicPolynomial scaled(const Coeff& c) const;

 private:
  static BasicPolynomial merge(const BasicPolynomial& a, const BasicPolynomial& b, const Coeff& sb);
  BasicPolynomial multiply(const BasicPolynomial& o) const;
  void require_same_ring(const BasicPolynomial& o) const {
    if (nvars_ != o.nvars_) throw Error(ErrorCode::DimensionMismatch, "polynomials over different variable counts");
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using Polynomial = BasicPolynomial<Rational>;
using GaussianPolynomial = BasicPolynomial<GaussianRational>;

// Default names z1..zN.
std::vector<std::string> default_variable_names(std::size_t nvars);
std::string to_string(const Polynomial& p, std::span<const std::string> names = {});

// Weights q_i with f(lambda^{q_i} z_i) = lambda f. Internally also kept as
// integers w_i = D q_i over the common denominator D.
class WeightSystem {
 public:
  WeightSystem() = default;
  explicit WeightSystem(std::vector<Rational> q);
  static WeightSystem homogeneous(std::size_t nvars, long degree);

  std::size_t nvars() const { return q_.size(); }
  const std::vector<Rational>& q() const { return q_; }
  const std::vector<long>& integer_weights() const { return w_; }
  long denominator() const { return denom_; }

  Rational degree(const Monomial& m) const;
  long integer_degree(const Monomial& m) const;
  // d when every q_i = 1/d.
  std::optional<long> homogeneous_degree() const;
  // Integer degree of the Hessian class: sum (D - 2 w_i).
  long socle_degree() const;
  // prod (1/q_i - 1); classical count, used only as a cross-check.
  Rational milnor_number() const;
  // sum_i q_i
  Rational trace() const;

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.q_ == b.q_; }

 private:
  std::vector<Rational> q_;
  std::vector<long> w_;
  long denom_ = 1;
};

// Solves <alpha, q> = 1 over the support of f.
// Throws NotQuasiHomogeneous (inconsistent or non-positive solution) or
// UnderdeterminedWeights (free directions listed in the message).
WeightSystem infer_weights(const Polynomial& f);

bool is_quasi_homogeneous(const Polynomial& f, const WeightSystem& w);

struct NondegeneracyReport {
  bool no_cross_terms = false;
  bool isolated = false;
  bool weights_bounded = false;
  std::string detail;
  bool ok() const { return no_cross_terms && isolated && weights_bounded; }
};

NondegeneracyReport nondegeneracy_check(const Polynomial& f, const WeightSystem& w);

// f == sum_i q_i z_i d_i f, checked both as a polynomial identity and as the
// top-form identity f dz = df ^ xi.
bool euler_xi_identity_check(const Polynomial& f, const WeightSystem& w);

// det(d^2 f / dz_i dz_j), expanded exactly.
Polynomial hessian(const Polynomial& f);

std::vector<Polynomial> jacobian_generators(const Polynomial& f);

// ---------------------------------------------------------------------------
// Template implementation.

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.mono.nvars() != nvars) throw Error(ErrorCode::DimensionMismatch, "term with wrong variable count");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; });
  BasicPolynomial p(nvars);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && coeff_is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
  return p;
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::constant(std::size_t nvars, Coeff c) {
  BasicPolynomial p(nvars);
  if (!coeff_is_zero(c)) p.terms_.push_back({Monomial(nvars), std::move(c)});
  return p;
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::monomial(const Monomial& m, Coeff c) {
  BasicPolynomial p(m.nvars());
  if (!coeff_is_zero(c)) p.terms_.push_back({m, std::move(c)});
  return p;
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::variable(std::size_t nvars, std::size_t index) {
  return monomial(Monomial::variable(nvars, index), Coeff(1));
}

template <class Coeff>
unsigned BasicPolynomial<Coeff>::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <class Coeff>
Coeff BasicPolynomial<Coeff>::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& x) { return grevlex(t.mono, x) > 0; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return Coeff(0);
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    unsigned e = t.mono[var];
    if (e == 0) continue;
    Monomial m = t.mono;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * Coeff(static_cast<long>(e))});
  }
  return from_terms(nvars_, std::move(out));
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::times(const Monomial& m, const Coeff& c) const {
  BasicPolynomial p(nvars_);
  if (coeff_is_zero(c)) return p;
  p.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves the order.
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::scaled(const Coeff& c) const {
  return times(Monomial(nvars_), c);
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::merge(const BasicPolynomial& a, const BasicPolynomial& b,
                                                     const Coeff& sb) {
  a.require_same_ring(b);
  BasicPolynomial out(a.nvars_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    int cmp;
    if (ia == a.terms_.end())
      cmp = -1;
    else if (ib == b.terms_.end())
      cmp = 1;
    else {
      auto o = grevlex(ia->mono, ib->mono);
      cmp = o > 0 ? 1 : (o < 0 ? -1 : 0);
    }
    if (cmp > 0) {
      out.terms_.push_back(*ia++);
    } else if (cmp < 0) {
      out.terms_.push_back({ib->mono, ib->coeff * sb});
      ++ib;
    } else {
      Coeff c = ia->coeff + ib->coeff * sb;
      if (!coeff_is_zero(c)) out.terms_.push_back({ia->mono, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

template <class Coeff>
BasicPolynomial<Coeff> BasicPolynomial<Coeff>::multiply(const BasicPolynomial& o) const {
  require_same_ring(o);
  std::unordered_map<Monomial, Coeff, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      auto [it, inserted] = acc.try_emplace(s.mono * t.mono, s.coeff * t.coeff);
      if (!inserted) it->second += s.coeff * t.coeff;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!coeff_is_zero(c)) out.push_back({m, std::move(c)});
  return from_terms(nvars_, std::move(out));
}

}  // namespace lgcy
