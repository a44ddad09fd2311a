#pragma once

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace lgcy {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q". Throws Error(SyntaxError) on malformed input or
// a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned long a);

// Exact a+bi with rational parts.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
  GaussianRational(long re) : re_(re) {}                 // NOLINT(implicit)
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  GaussianRational conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  // Throws Error(InvalidArgument) on zero.
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  // When the value is r * i^k with r > 0 rational, returns (r, k mod 4).
  struct UnitForm {
    Rational magnitude;
    int i_power;
  };
  std::optional<UnitForm> unit_form() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

// i^k for any integer k, reduced mod 4.
GaussianRational gaussian_pow_i(long k);
GaussianRational pow(const GaussianRational& base, unsigned long e);

// "(a+bi)" / "(a-bi)" or a plain rational.
GaussianRational parse_gaussian(std::string_view text);
std::string to_string(const GaussianRational& z);

// coeff * pi^pi_power, used to keep (2 pi i)^N factors exact.
class SymbolicScalar {
 public:
  SymbolicScalar() = default;
  SymbolicScalar(GaussianRational coeff, int pi_power = 0);  // NOLINT(implicit)

  // (2 pi i)^N
  static SymbolicScalar two_pi_i_pow(int n);

  const GaussianRational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_.is_zero(); }

  SymbolicScalar& operator*=(const SymbolicScalar& o);
  SymbolicScalar& operator/=(const SymbolicScalar& o);
  friend SymbolicScalar operator*(SymbolicScalar a, const SymbolicScalar& b) { return a *= b; }
  friend SymbolicScalar operator/(SymbolicScalar a, const SymbolicScalar& b) { return a /= b; }
  friend SymbolicScalar operator-(const SymbolicScalar& a) { return {-a.coeff_, a.pi_power_}; }
  friend bool operator==(const SymbolicScalar& a, const SymbolicScalar& b) {
    return a.coeff_ == b.coeff_ && a.pi_power_ == b.pi_power_;
  }
  friend bool operator!=(const SymbolicScalar& a, const SymbolicScalar& b) { return !(a == b); }

 private:
  GaussianRational coeff_;
  int pi_power_ = 0;
};

std::string to_string(const SymbolicScalar& s);

inline std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }
inline std::ostream& operator<<(std::ostream& os, const SymbolicScalar& s) { return os << to_string(s); }

inline bool coeff_is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool coeff_is_zero(const GaussianRational& z) { return z.is_zero(); }

}  // namespace lgcy
