#include "lgcy/scalars.hpp"

#include <cctype>

#include "lgcy/error.hpp"

namespace lgcy {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotQuasiHomogeneous: return "NotQuasiHomogeneous";
    case ErrorCode::UnderdeterminedWeights: return "UnderdeterminedWeights";
    case ErrorCode::NotIsolated: return "NotIsolated";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::DegenerateSocle: return "DegenerateSocle";
    case ErrorCode::FrameDegeneration: return "FrameDegeneration";
    case ErrorCode::NondegenerationLost: return "NondegenerationLost";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
  }
  return "Unknown";
}

Rational make_rational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

Integer factorial(unsigned long a) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), a);
  return r;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidArgument, "inverse of zero Gaussian rational");
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) { return *this *= o.inverse(); }

std::optional<GaussianRational::UnitForm> GaussianRational::unit_form() const {
  if (is_zero()) return std::nullopt;
  if (sgn(im_) == 0) return UnitForm{abs(re_), sgn(re_) > 0 ? 0 : 2};
  if (sgn(re_) == 0) return UnitForm{abs(im_), sgn(im_) > 0 ? 1 : 3};
  return std::nullopt;
}

GaussianRational gaussian_pow_i(long k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {Rational(1), Rational(0)};
    case 1: return {Rational(0), Rational(1)};
    case 2: return {Rational(-1), Rational(0)};
    default: return {Rational(0), Rational(-1)};
  }
}

GaussianRational pow(const GaussianRational& base, unsigned long e) {
  GaussianRational result(1);
  GaussianRational b = base;
  while (e > 0) {
    if (e & 1UL) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

GaussianRational parse_gaussian(std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return GaussianRational(parse_rational(s));
  std::string_view inner = trim(s.substr(1, s.size() - 2));
  if (inner.empty() || inner.back() != 'i')
    throw Error(ErrorCode::SyntaxError, "malformed Gaussian rational '" + std::string(text) + "'");
  inner.remove_suffix(1);
  // Split at the last sign that is not leading.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = inner.size(); k-- > 1;) {
    if (inner[k] == '+' || inner[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos)
    throw Error(ErrorCode::SyntaxError, "malformed Gaussian rational '" + std::string(text) + "'");
  std::string_view im = trim(inner.substr(split));
  if (im == "+" || im == "-") im = im == "+" ? "1" : "-1";
  return {parse_rational(inner.substr(0, split)), parse_rational(im)};
}

std::string to_string(const GaussianRational& z) {
  std::string out = "(" + to_string(z.re());
  if (sgn(z.im()) < 0)
    out += "-" + to_string(Rational(-z.im()));
  else
    out += "+" + to_string(z.im());
  return out + "i)";
}

SymbolicScalar::SymbolicScalar(GaussianRational coeff, int pi_power)
    : coeff_(std::move(coeff)), pi_power_(pi_power) {
  if (coeff_.is_zero()) pi_power_ = 0;
}

SymbolicScalar SymbolicScalar::two_pi_i_pow(int n) {
  // (2 pi i)^n = 2^n i^n pi^n
  Rational two_pow = n >= 0 ? Rational(Integer(1) << n) : Rational(Integer(1), Integer(1) << -n);
  return {GaussianRational(two_pow) * gaussian_pow_i(n), n};
}

SymbolicScalar& SymbolicScalar::operator*=(const SymbolicScalar& o) {
  coeff_ *= o.coeff_;
  pi_power_ = coeff_.is_zero() ? 0 : pi_power_ + o.pi_power_;
  return *this;
}

SymbolicScalar& SymbolicScalar::operator/=(const SymbolicScalar& o) {
  coeff_ /= o.coeff_;
  pi_power_ = coeff_.is_zero() ? 0 : pi_power_ - o.pi_power_;
  return *this;
}

std::string to_string(const SymbolicScalar& s) {
  return to_string(s.coeff()) + "*pi^" + std::to_string(s.pi_power());
}

}  // namespace lgcy
