#include "lgcy/constants.hpp"

namespace lgcy {

namespace {

GaussianRational sign_pow(long e) { return GaussianRational(((e % 2) + 2) % 2 == 0 ? 1 : -1); }

void require_n(long n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "n must be at least 1");
}

void require_ab(long n, long a, long b) {
  require_n(n);
  if (a < 0 || b < 0) throw Error(ErrorCode::InvalidArgument, "a and b must be nonnegative");
}

Rational inverse_factorial(long a) { return Rational(Integer(1), factorial(static_cast<unsigned long>(a))); }

}  // namespace

GaussianRational c_a(long n, long a) {
  require_ab(n, a, 0);
  return sign_pow(n + a * (a + 1) / 2) * GaussianRational(inverse_factorial(a));
}

GaussianRational k_ab(long n, long a, long b) {
  require_ab(n, a, b);
  long e = (a * (a + 1) + b * (b + 1)) / 2 + b * b + n;
  return sign_pow(e) * GaussianRational(inverse_factorial(a) * inverse_factorial(b) * (n + 2));
}

GaussianRational p_const(long n) {
  require_n(n);
  return GaussianRational(Rational(Integer(1) << static_cast<mp_bitcnt_t>(n + 2))) * gaussian_pow_i(-n * n);
}

GaussianRational k_N(long N) {
  if (N < 1) throw Error(ErrorCode::InvalidArgument, "N must be positive");
  Rational two_n(Integer(1) << static_cast<mp_bitcnt_t>(N));
  return sign_pow(N * (N - 1) / 2) * gaussian_pow_i(N) * GaussianRational(1 / two_n);
}

std::pair<SymbolicScalar, SymbolicScalar> special_pair_norm(long N, long mu) {
  if (N < 3) throw Error(ErrorCode::InvalidArgument, "special pair norms need N = n + 2 >= 3");
  if (mu < 1) throw Error(ErrorCode::InvalidArgument, "mu must be positive");
  const int Ni = static_cast<int>(N);
  SymbolicScalar first = SymbolicScalar(gaussian_pow_i((N - 2) * (N - 2)) * GaussianRational(mu)) *
                         SymbolicScalar::two_pi_i_pow(Ni);
  SymbolicScalar second = SymbolicScalar(GaussianRational(N * mu)) * SymbolicScalar::two_pi_i_pow(Ni);
  return {first, second};
}

ConstantsTable constants_table(long n, long mu) {
  require_n(n);
  ConstantsTable t;
  t.n = n;
  t.mu = mu;
  for (long a = 0; a <= n; ++a) {
    t.c.push_back(c_a(n, a));
    t.k.push_back(k_ab(n, a, n - a));
  }
  t.p = p_const(n);
  t.kN = k_N(n + 2);
  auto [eta, cy] = special_pair_norm(n + 2, mu);
  t.hat_eta_norm = eta;
  t.cy_norm = cy;
  return t;
}

std::vector<ChainEntry> identity_chain(long n) {
  require_n(n);
  std::vector<ChainEntry> out;
  for (long a = 0; a <= n; ++a) {
    const long b = n - a;
    ChainEntry e;
    e.a = a;
    e.b = b;
    Integer fa = factorial(static_cast<unsigned long>(a)), fb = factorial(static_cast<unsigned long>(b));
    e.lhs = sign_pow(a + b) * GaussianRational(Rational(fa * fb)) * k_ab(n, a, b);
    e.rhs = gaussian_pow_i(n + n * (a - b)) * GaussianRational(n + 2);
    e.normalized = gaussian_pow_i(n * (b - a - 1)) * e.lhs == GaussianRational(n + 2);
    out.push_back(std::move(e));
  }
  return out;
}

bool verify_identity_chain(long n) {
  for (const auto& e : identity_chain(n))
    if (!e.ok()) return false;
  return true;
}

std::vector<ResidualPower> residual_i_powers(long n) {
  std::vector<ResidualPower> out;
  const GaussianRational p = p_const(n);
  for (long a = 0; a <= n; ++a) {
    const long b = n - a;
    GaussianRational ratio = p * k_ab(n, a, b) / (c_a(n, a) * c_a(n, b));
    auto u = ratio.unit_form();
    if (!u) throw Error(ErrorCode::OracleMismatch, "pairing ratio is not a rational multiple of a power of i");
    out.push_back({a, b, u->magnitude, u->i_power});
  }
  return out;
}

std::vector<MultiplicationSign> multiplication_signs(long n) {
  std::vector<MultiplicationSign> out;
  for (long a = 0; a <= n; ++a)
    for (long b = 0; a + b <= n; ++b) {
      GaussianRational r = c_a(n, a) * c_a(n, b) / c_a(n, a + b);
      out.push_back({a, b, sgn(r.re()) < 0 ? -1 : 1});
    }
  return out;
}

SymbolicScalar cy_pairing(long n, long a, long b, const Rational& res_ab, const Rational& mu) {
  require_ab(n, a, b);
  const int N = static_cast<int>(n + 2);
  auto integral = [&](long x, long y, const Rational& res) {
    Integer fx = factorial(static_cast<unsigned long>(x)), fy = factorial(static_cast<unsigned long>(y));
    GaussianRational coeff = sign_pow(x + y) * GaussianRational(Rational(fx * fy)) * k_ab(n, x, y) * GaussianRational(res);
    return SymbolicScalar(coeff) * SymbolicScalar::two_pi_i_pow(N);
  };
  SymbolicScalar num = SymbolicScalar(gaussian_pow_i(n * (b - a - 1))) * integral(a, b, res_ab);
  SymbolicScalar den = SymbolicScalar(gaussian_pow_i(n * (n - 1))) * integral(0, n, mu);
  return num / den;
}

}  // namespace lgcy
