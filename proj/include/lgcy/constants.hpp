#pragma once

#include <vector>

#include "lgcy/error.hpp"
#include "lgcy/scalars.hpp"

namespace lgcy {

// (-1)^{n + a(a+1)/2} / a!
GaussianRational c_a(long n, long a);
// (-1)^{(a(a+1) + b(b+1))/2 + b^2 + n} (n+2) / (a! b!)
GaussianRational k_ab(long n, long a, long b);
// 2^{n+2} i^{-n^2}
GaussianRational p_const(long n);
// (-1)^{N(N-1)/2} i^N / 2^N
GaussianRational k_N(long N);

struct ConstantsTable {
  long n = 0;
  long mu = 0;
  std::vector<GaussianRational> c;  // c_0 .. c_n
  std::vector<GaussianRational> k;  // k_{a, n-a}, a = 0..n
  GaussianRational p;
  GaussianRational kN;              // N = n + 2
  SymbolicScalar hat_eta_norm;      // i^{(N-2)^2} (2 pi i)^N mu
  SymbolicScalar cy_norm;           // (n+2) mu (2 pi i)^{n+2}
};

ConstantsTable constants_table(long n, long mu);

struct ChainEntry {
  long a = 0;
  long b = 0;
  GaussianRational lhs;   // (-1)^{a+b} a! b! k_ab
  GaussianRational rhs;   // i^{n + n(a-b)} (n+2)
  bool normalized = false;  // i^{n(b-a-1)} lhs == n + 2
  bool ok() const { return lhs == rhs && normalized; }
};

std::vector<ChainEntry> identity_chain(long n);
bool verify_identity_chain(long n);

// (i^{(N-2)^2} (2 pi i)^N mu, (n+2) mu (2 pi i)^{n+2}) with N = n + 2.
std::pair<SymbolicScalar, SymbolicScalar> special_pair_norm(long N, long mu);

// Ratio of the rescaled CY pairing p k_ab / (c_a c_b) to the LG pairing,
// written as magnitude * i^power.
struct ResidualPower {
  long a = 0;
  long b = 0;
  Rational magnitude;
  int i_power = 0;
};

std::vector<ResidualPower> residual_i_powers(long n);

// sign(c_a c_b / c_{a+b}) for a + b <= n.
struct MultiplicationSign {
  long a = 0;
  long b = 0;
  int sign = 1;
};

std::vector<MultiplicationSign> multiplication_signs(long n);

// CY-side pairing value
//   i^{n(b-a-1)} Int(A, B) / (i^{n(n-1)} Int(1, 1^vee)),
// where Int(A, B) = (-1)^{a+b} a! b! k_ab (2 pi i)^{n+2} res(AB), for classes
// of degrees (n+2)a and (n+2)b.
SymbolicScalar cy_pairing(long n, long a, long b, const Rational& res_ab, const Rational& mu);

}  // namespace lgcy
