#include "lgcy/poly.hpp"

#include <numeric>
#include <sstream>

#include "lgcy/forms.hpp"
#include "lgcy/grobner.hpp"

namespace lgcy {

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables");
}

Monomial::Monomial(std::initializer_list<unsigned> exponents) : Monomial(exponents.size()) {
  std::size_t i = 0;
  for (unsigned e : exponents) set(i++, e);
}

Monomial Monomial::from_exponents(std::span<const int> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    m.set(i, static_cast<unsigned>(exponents[i]));
  }
  return m;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 0xFFFF) throw Error(ErrorCode::InvalidArgument, "exponent overflow");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint16_t>(e);
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] && other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < nvars_; ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] + other.exps_[i]);
  m.degree_ += other.degree_;
  return m;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial m = *this;
  for (std::size_t i = 0; i < nvars_; ++i) m.exps_[i] = static_cast<std::uint16_t>(m.exps_[i] - divisor.exps_[i]);
  m.degree_ -= divisor.degree_;
  return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.nvars_);
  for (std::size_t i = 0; i < a.nvars_; ++i) m.set(i, std::max(a.exps_[i], b.exps_[i]));
  return m;
}

std::vector<int> Monomial::exponents() const { return {exps_.begin(), exps_.begin() + nvars_}; }

std::size_t Monomial::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (std::size_t i = a.nvars(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("z" + std::to_string(i + 1));
  return names;
}

std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  std::vector<std::string> fallback;
  if (names.empty()) {
    fallback = default_variable_names(p.nvars());
    names = fallback;
  }
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coeff;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool wrote = false;
    if (c != 1 || t.mono.is_one()) {
      os << to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < p.nvars(); ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << names[i];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

WeightSystem::WeightSystem(std::vector<Rational> q) : q_(std::move(q)) {
  Integer d = 1;
  for (const auto& x : q_) {
    if (sgn(x) <= 0) throw Error(ErrorCode::InvalidArgument, "weights must be positive");
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!d.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "weight denominator too large");
  denom_ = d.get_si();
  for (const auto& x : q_) {
    Rational w = x * Rational(d);
    w_.push_back(w.get_num().get_si());
  }
}

WeightSystem WeightSystem::homogeneous(std::size_t nvars, long degree) {
  return WeightSystem(std::vector<Rational>(nvars, make_rational(1, degree)));
}

Rational WeightSystem::degree(const Monomial& m) const { return make_rational(integer_degree(m), denom_); }

long WeightSystem::integer_degree(const Monomial& m) const {
  long d = 0;
  for (std::size_t i = 0; i < w_.size(); ++i) d += w_[i] * static_cast<long>(m[i]);
  return d;
}

std::optional<long> WeightSystem::homogeneous_degree() const {
  for (const auto& x : q_)
    if (x != q_.front()) return std::nullopt;
  if (q_.empty() || q_.front().get_num() != 1) return std::nullopt;
  return q_.front().get_den().get_si();
}

long WeightSystem::socle_degree() const {
  long s = 0;
  for (long w : w_) s += denom_ - 2 * w;
  return s;
}

Rational WeightSystem::milnor_number() const {
  Rational mu = 1;
  for (const auto& x : q_) mu *= Rational(1) / x - 1;
  return mu;
}

Rational WeightSystem::trace() const {
  Rational s = 0;
  for (const auto& x : q_) s += x;
  return s;
}

WeightSystem infer_weights(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero polynomial has no weights");
  const std::size_t n = f.nvars();
  // Augmented system rows [alpha | 1], reduced row echelon form.
  std::vector<std::vector<Rational>> rows;
  for (const auto& t : f.terms()) {
    std::vector<Rational> r(n + 1);
    for (std::size_t i = 0; i < n; ++i) r[i] = t.mono[i];
    r[n] = 1;
    rows.push_back(std::move(r));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && sgn(rows[piv][col]) == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    Rational inv = 1 / rows[rank][col];
    for (auto& x : rows[rank]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || sgn(rows[r][col]) == 0) continue;
      Rational factor = rows[r][col];
      for (std::size_t c = 0; c <= n; ++c) rows[r][c] -= factor * rows[rank][c];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (sgn(rows[r][n]) != 0)
      throw Error(ErrorCode::NotQuasiHomogeneous, "no weight vector gives every monomial weighted degree 1");
  if (rank < n) {
    std::string free_dirs;
    for (std::size_t c = 0; c < n; ++c)
      if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end())
        free_dirs += (free_dirs.empty() ? "z" : ", z") + std::to_string(c + 1);
    throw Error(ErrorCode::UnderdeterminedWeights, "weights not determined along: " + free_dirs);
  }
  std::vector<Rational> q(n);
  for (std::size_t r = 0; r < rank; ++r) q[pivot_col[r]] = rows[r][n];
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(q[i]) <= 0)
      throw Error(ErrorCode::NotQuasiHomogeneous, "weight of z" + std::to_string(i + 1) + " is not positive");
  return WeightSystem(std::move(q));
}

bool is_quasi_homogeneous(const Polynomial& f, const WeightSystem& w) {
  if (f.nvars() != w.nvars()) return false;
  for (const auto& t : f.terms())
    if (w.integer_degree(t.mono) != w.denominator()) return false;
  return true;
}

std::vector<Polynomial> jacobian_generators(const Polynomial& f) {
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < f.nvars(); ++i) gens.push_back(f.derivative(i));
  return gens;
}

NondegeneracyReport nondegeneracy_check(const Polynomial& f, const WeightSystem& w) {
  NondegeneracyReport report;
  report.no_cross_terms = true;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != 2) continue;
    bool square = false;
    for (std::size_t i = 0; i < f.nvars(); ++i) square = square || t.mono[i] == 2;
    if (!square) {
      report.no_cross_terms = false;
      report.detail += "cross term z_i z_j present; ";
    }
  }
  report.weights_bounded = true;
  for (const auto& q : w.q())
    if (q > Rational(1, 2)) report.weights_bounded = false;
  if (!report.weights_bounded) report.detail += "some weight exceeds 1/2; ";

  std::vector<Polynomial> gens = jacobian_generators(f);
  gens.erase(std::remove_if(gens.begin(), gens.end(), [](const Polynomial& p) { return p.is_zero(); }), gens.end());
  if (gens.empty()) {
    report.isolated = false;
  } else {
    GroebnerBasis gb = buchberger(gens);
    report.isolated = standard_monomials(gb).has_value();
  }
  if (!report.isolated) report.detail += "Jacobian quotient is infinite-dimensional; ";
  return report;
}

bool euler_xi_identity_check(const Polynomial& f, const WeightSystem& w) {
  if (f.nvars() != w.nvars()) return false;
  const std::size_t n = f.nvars();
  Polynomial euler(n);
  for (std::size_t i = 0; i < n; ++i)
    euler += Polynomial::monomial(Monomial::variable(n, i), w.q()[i]) * f.derivative(i);
  if (!(euler == f)) return false;
  DifferentialForm lhs = DifferentialForm::volume(f);
  DifferentialForm rhs = differential(f).wedge(euler_xi_form(w));
  return lhs == rhs;
}

Polynomial hessian(const Polynomial& f) {
  const std::size_t n = f.nvars();
  std::vector<std::vector<Polynomial>> h(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial fi = f.derivative(i);
    for (std::size_t j = 0; j < n; ++j) h[i][j] = fi.derivative(j);
  }
  // Laplace expansion along rows; minors memoized by the set of columns used.
  std::unordered_map<std::uint32_t, Polynomial> memo;
  auto det = [&](auto&& self, std::size_t row, std::uint32_t used) -> Polynomial {
    if (row == n) return Polynomial::constant(n, Rational(1));
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    Polynomial acc(n);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      std::uint32_t bit = std::uint32_t{1} << c;
      if (used & bit) continue;
      if (!h[row][c].is_zero()) {
        Polynomial minor = self(self, row + 1, used | bit);
        if (!minor.is_zero()) {
          Polynomial term = h[row][c] * minor;
          acc = sign > 0 ? acc + term : acc - term;
        }
      }
      sign = -sign;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return det(det, 0, 0);
}

}  // namespace lgcy
