#include "lgcy/milnor.hpp"

#include <random>
#include <sstream>

namespace lgcy {

namespace {

using IntPoly = std::vector<Integer>;  // coefficient of t^k at index k

IntPoly times_binomial(const IntPoly& p, long a) {
  // p * (t^a - 1)
  IntPoly out(p.size() + static_cast<std::size_t>(a), Integer(0));
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k + static_cast<std::size_t>(a)] += p[k];
    out[k] -= p[k];
  }
  return out;
}

void accumulate(std::map<std::uint32_t, Rational>& acc, const Rational& c, const RationalVector& v) {
  for (const auto& [i, x] : v) {
    auto [it, inserted] = acc.try_emplace(i, c * x);
    if (!inserted) {
      it->second += c * x;
      if (sgn(it->second) == 0) acc.erase(it);
    }
  }
}

RationalVector to_vector(std::map<std::uint32_t, Rational>& acc) {
  RationalVector v;
  v.reserve(acc.size());
  for (auto& [i, x] : acc)
    if (sgn(x) != 0) v.emplace_back(i, std::move(x));
  return v;
}

const Rational* entry(const RationalVector& v, std::size_t i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& e, std::size_t k) { return e.first < k; });
  if (it != v.end() && it->first == i) return &it->second;
  return nullptr;
}

}  // namespace

std::vector<Integer> hilbert_series_oracle(const WeightSystem& w) {
  const long D = w.denominator();
  IntPoly num{Integer(1)}, den{Integer(1)};
  for (long wi : w.integer_weights()) {
    num = times_binomial(num, D - wi);
    den = times_binomial(den, wi);
  }
  // Exact long division; both are monic up to a common sign.
  const std::size_t dn = num.size() - 1, dd = den.size() - 1;
  if (dn < dd) return {};
  IntPoly quot(dn - dd + 1, Integer(0));
  for (std::size_t k = dn + 1; k-- > dd;) {
    Integer c = num[k] / den[dd];
    if (c * den[dd] != num[k]) throw Error(ErrorCode::OracleMismatch, "Hilbert product is not a polynomial");
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw Error(ErrorCode::OracleMismatch, "Hilbert product is not a polynomial");
  return quot;
}

MilnorRing MilnorRing::build(const Polynomial& f) { return build(f, infer_weights(f)); }

MilnorRing MilnorRing::build(const Polynomial& f, const WeightSystem& w) {
  if (w.nvars() != f.nvars()) throw Error(ErrorCode::DimensionMismatch, "weight count differs from variable count");
  if (!is_quasi_homogeneous(f, w)) throw Error(ErrorCode::NotQuasiHomogeneous, "f is not quasi-homogeneous for the given weights");

  MilnorRing r;
  r.f_ = f;
  r.weights_ = w;
  auto gens = jacobian_generators(f);
  r.gb_ = buchberger_cached(gens);
  auto sm = standard_monomials(r.gb_);
  if (!sm) {
    std::ostringstream os;
    os << "Jacobian quotient is infinite-dimensional; no pure power of";
    for (auto v : missing_pure_powers(r.gb_)) os << " z" << (v + 1);
    throw Error(ErrorCode::NotIsolated, os.str());
  }
  r.basis_ = std::move(*sm);

  for (std::size_t i = 0; i < r.basis_.size(); ++i) {
    long deg = w.integer_degree(r.basis_.monomials[i]);
    r.degrees_.push_back(deg);
    r.graded_dims_[deg] += 1;
    r.pieces_[deg].push_back(i);
  }

  Rational oracle_mu = w.milnor_number();
  if (oracle_mu != Rational(static_cast<long>(r.mu())))
    throw Error(ErrorCode::OracleMismatch,
                "mu = " + std::to_string(r.mu()) + " but prod(1/q_i - 1) = " + to_string(oracle_mu));
  auto series = hilbert_series_oracle(w);
  for (std::size_t k = 0; k < series.size(); ++k) {
    auto it = r.graded_dims_.find(static_cast<long>(k));
    std::size_t have = it == r.graded_dims_.end() ? 0 : it->second;
    if (Integer(static_cast<unsigned long>(have)) != series[k])
      throw Error(ErrorCode::OracleMismatch, "graded dimension at degree " + std::to_string(k) +
                                                 " differs from the Hilbert series");
  }
  if (r.graded_dims_.rbegin()->first >= static_cast<long>(series.size()))
    throw Error(ErrorCode::OracleMismatch, "standard monomials above the Hilbert series degree");

  r.top_degree_ = w.socle_degree();
  auto top = r.pieces_.find(r.top_degree_);
  if (top == r.pieces_.end() || top->second.size() != 1)
    throw Error(ErrorCode::DegenerateSocle, "top graded piece is not one-dimensional");
  r.socle_index_ = top->second.front();

  r.hess_ = hessian(f);
  RationalVector h = r.coordinates(r.hess_);
  if (h.empty()) throw Error(ErrorCode::DegenerateSocle, "Hessian reduces to zero");
  if (h.size() != 1 || h.front().first != r.socle_index_)
    throw Error(ErrorCode::DegenerateSocle, "Hessian class is not a multiple of the socle monomial");
  r.hess_coeff_ = h.front().second;
  return r;
}

const std::vector<std::size_t>& MilnorRing::piece(long degree) const {
  static const std::vector<std::size_t> empty;
  auto it = pieces_.find(degree);
  return it == pieces_.end() ? empty : it->second;
}

const RationalVector& MilnorRing::monomial_coords_locked(const Monomial& m) const {
  static const RationalVector zero;
  auto& memo = cache_->reduced;
  if (auto it = memo.find(m); it != memo.end()) return it->second;
  if (auto pos = basis_.find(m)) {
    auto [it, _] = memo.emplace(m, RationalVector{{static_cast<std::uint32_t>(*pos), Rational(1)}});
    return it->second;
  }
  auto div = gb_.find_divisor(m);
  const Polynomial& g = gb_.generators()[*div];
  if (g.size() == 1) return zero;
  // m = q * lm(g) and lm(g) = -tail(g) modulo the ideal.
  Monomial q = m / g.leading().mono;
  std::map<std::uint32_t, Rational> acc;
  for (std::size_t k = 1; k < g.terms().size(); ++k) {
    const auto& t = g.terms()[k];
    accumulate(acc, -t.coeff, monomial_coords_locked(q * t.mono));
  }
  auto [it, _] = memo.emplace(m, to_vector(acc));
  return it->second;
}

RationalVector MilnorRing::coordinates(const Monomial& m) const {
  std::lock_guard lock(cache_->mutex);
  return monomial_coords_locked(m);
}

RationalVector MilnorRing::coordinates(const Polynomial& a) const {
  if (a.nvars() != nvars()) throw Error(ErrorCode::DimensionMismatch, "polynomial over the wrong variable count");
  std::lock_guard lock(cache_->mutex);
  std::map<std::uint32_t, Rational> acc;
  for (const auto& t : a.terms()) accumulate(acc, t.coeff, monomial_coords_locked(t.mono));
  return to_vector(acc);
}

Polynomial MilnorRing::to_polynomial(const RationalVector& v) const {
  std::vector<Polynomial::Term> terms;
  for (const auto& [i, c] : v) terms.push_back({basis_.monomials[i], c});
  return Polynomial::from_terms(nvars(), std::move(terms));
}

Rational MilnorRing::residue(const RationalVector& coords) const {
  const Rational* s = entry(coords, socle_index_);
  if (s == nullptr) return Rational(0);
  return Rational(static_cast<long>(mu())) * *s / hess_coeff_;
}

Rational MilnorRing::residue(const Polynomial& a) const { return residue(coordinates(a)); }

SymbolicScalar MilnorRing::big_residue(const Polynomial& a) const {
  return SymbolicScalar::two_pi_i_pow(static_cast<int>(nvars())) * SymbolicScalar(GaussianRational(residue(a)));
}

Rational MilnorRing::pairing(const Polynomial& a, const Polynomial& b) const {
  return residue(a * b) / Rational(static_cast<long>(mu()));
}

Rational MilnorRing::pairing(std::size_t i, std::size_t j) const {
  if (degrees_[i] + degrees_[j] != top_degree_) return Rational(0);
  RationalVector v = coordinates(basis_.monomials[i] * basis_.monomials[j]);
  const Rational* s = entry(v, socle_index_);
  if (s == nullptr) return Rational(0);
  return *s / hess_coeff_;
}

RationalMatrix MilnorRing::multiplication_matrix(const Polynomial& a) const {
  std::vector<RationalVector> cols(mu());
  for (std::size_t j = 0; j < mu(); ++j) {
    std::vector<Polynomial::Term> shifted;
    for (const auto& t : a.terms()) shifted.push_back({t.mono * basis_.monomials[j], t.coeff});
    cols[j] = coordinates(Polynomial::from_terms(nvars(), std::move(shifted)));
  }
  return RationalMatrix::from_columns(mu(), std::move(cols));
}

RationalMatrix MilnorRing::pairing_matrix(const std::vector<std::size_t>& positions) const {
  std::vector<std::size_t> pos = positions;
  if (pos.empty())
    for (std::size_t i = 0; i < mu(); ++i) pos.push_back(i);
  RationalMatrix eta(pos.size(), pos.size());
  std::map<long, std::vector<std::size_t>> local;
  for (std::size_t k = 0; k < pos.size(); ++k) local[degrees_[pos[k]]].push_back(k);
  for (std::size_t b = 0; b < pos.size(); ++b) {
    auto it = local.find(top_degree_ - degrees_[pos[b]]);
    if (it == local.end()) continue;
    for (std::size_t a : it->second) eta.set(a, b, pairing(pos[a], pos[b]));
  }
  return eta;
}

bool SubringSelector::is_selected(std::size_t position) const {
  return std::binary_search(selected.begin(), selected.end(), position);
}

SubringSelector subring_selector(const MilnorRing& ring, long d, long n, bool closure) {
  if (n < 0 || static_cast<std::size_t>(n + 2) != ring.nvars())
    throw Error(ErrorCode::DimensionMismatch, "selector needs N = n + 2 variables");
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "degree must be at least 2");
  auto hd = ring.weights().homogeneous_degree();
  if (!hd || *hd != d) throw Error(ErrorCode::InvalidArgument, "selector needs a homogeneous f of degree d");

  SubringSelector s;
  s.d = d;
  s.n = n;
  for (std::size_t i = 0; i < ring.mu(); ++i) {
    Rational h = make_rational(ring.degree(i) + n + 2, d);
    if (h.get_den() == 1 && sgn(h) > 0) s.selected.push_back(i);
    s.h.push_back(std::move(h));
  }
  s.mu_s = s.selected.size();
  s.h_unit = make_rational(n + 2, d);
  s.h_socle = make_rational(ring.top_degree() + n + 2, d);
  s.contains_unit = s.h_unit.get_den() == 1;
  s.contains_socle = s.h_socle.get_den() == 1;
  if (closure) check_closure(ring, s);
  return s;
}

bool check_closure(const MilnorRing& ring, SubringSelector& s) {
  std::vector<bool> in(ring.mu(), false);
  for (auto i : s.selected) in[i] = true;
  for (std::size_t a = 0; a < s.selected.size(); ++a) {
    const std::size_t i = s.selected[a];
    for (std::size_t b = a; b < s.selected.size(); ++b) {
      const std::size_t j = s.selected[b];
      if (ring.degree(i) + ring.degree(j) > ring.top_degree()) continue;
      RationalVector v = ring.coordinates(ring.monomial(i) * ring.monomial(j));
      for (const auto& e : v)
        if (!in[e.first]) {
          s.closed_under_multiplication = false;
          s.closure_witness = std::make_pair(i, j);
          return false;
        }
    }
  }
  s.closed_under_multiplication = true;
  return true;
}

FrobeniusData frobenius_full(const MilnorRing& ring) {
  FrobeniusData fd;
  fd.full_basis = true;
  for (std::size_t i = 0; i < ring.mu(); ++i) {
    fd.positions.push_back(i);
    fd.labels.push_back(ring.monomial(i));
  }
  for (std::size_t v = 0; v < ring.nvars(); ++v) {
    fd.operator_labels.push_back(Monomial::variable(ring.nvars(), v));
    fd.operators.push_back(ring.multiplication_matrix(Polynomial::variable(ring.nvars(), v)));
  }
  fd.eta = ring.pairing_matrix();
  fd.unit_index = ring.basis().find(Monomial(ring.nvars()));
  return fd;
}

FrobeniusData frobenius_selected(const MilnorRing& ring, const SubringSelector& s) {
  FrobeniusData fd;
  fd.full_basis = false;
  fd.positions = s.selected;
  std::vector<std::int64_t> local(ring.mu(), -1);
  for (std::size_t k = 0; k < s.selected.size(); ++k) {
    local[s.selected[k]] = static_cast<std::int64_t>(k);
    fd.labels.push_back(ring.monomial(s.selected[k]));
  }
  const std::size_t r = s.selected.size();
  for (std::size_t a = 0; a < r; ++a) {
    std::vector<RationalVector> cols(r);
    for (std::size_t b = 0; b < r; ++b) {
      RationalVector v = ring.coordinates(fd.labels[a] * fd.labels[b]);
      for (const auto& [i, c] : v) {
        if (local[i] < 0) {
          if (fd.closed)
            fd.warnings.push_back("product of selected elements leaves the selected span; projected");
          fd.closed = false;
          continue;
        }
        cols[b].emplace_back(static_cast<std::uint32_t>(local[i]), c);
      }
      std::sort(cols[b].begin(), cols[b].end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    }
    fd.operator_labels.push_back(fd.labels[a]);
    fd.operators.push_back(RationalMatrix::from_columns(r, std::move(cols)));
  }
  fd.eta = ring.pairing_matrix(s.selected);
  if (auto u = ring.basis().find(Monomial(ring.nvars())); u && local[*u] >= 0)
    fd.unit_index = static_cast<std::size_t>(local[*u]);
  return fd;
}

namespace {

RationalMatrix monomial_operator(const FrobeniusData& fd, const Monomial& m) {
  RationalMatrix out = RationalMatrix::identity(fd.positions.size());
  for (std::size_t v = 0; v < m.nvars(); ++v)
    for (unsigned e = 0; e < m[v]; ++e) out = fd.operators[v] * out;
  return out;
}

}  // namespace

RationalMatrix frobenius_operator(const MilnorRing& ring, const FrobeniusData& fd, const Polynomial& a) {
  const std::size_t r = fd.positions.size();
  RationalMatrix out(r, r);
  RationalVector coords = ring.coordinates(a);
  if (fd.full_basis) {
    for (const auto& [i, c] : coords) out = out + c * monomial_operator(fd, ring.monomial(i));
    return out;
  }
  for (const auto& [i, c] : coords) {
    auto it = std::lower_bound(fd.positions.begin(), fd.positions.end(), static_cast<std::size_t>(i));
    if (it == fd.positions.end() || *it != i)
      throw Error(ErrorCode::InvalidArgument, "element is not in the selected span");
    out = out + c * fd.operators[static_cast<std::size_t>(it - fd.positions.begin())];
  }
  return out;
}

FrobeniusChecks verify_frobenius(const MilnorRing& ring, const FrobeniusData& fd) {
  FrobeniusChecks ch;
  std::ostringstream detail;
  const std::size_t r = fd.positions.size();
  const auto& ops = fd.operators;

  ch.commutative = true;
  for (std::size_t a = 0; a < ops.size() && ch.commutative; ++a)
    for (std::size_t b = a + 1; b < ops.size() && ch.commutative; ++b)
      if (!(ops[a] * ops[b] == ops[b] * ops[a])) {
        ch.commutative = false;
        detail << "operators " << a << " and " << b << " do not commute; ";
      }

  ch.self_adjoint = true;
  for (std::size_t a = 0; a < ops.size() && ch.self_adjoint; ++a)
    if (!(ops[a].transpose() * fd.eta == fd.eta * ops[a])) {
      ch.self_adjoint = false;
      detail << "operator " << a << " is not eta-self-adjoint; ";
    }

  if (fd.unit_index) {
    RationalMatrix unit = fd.full_basis ? ring.multiplication_matrix(Polynomial::constant(ring.nvars(), Rational(1)))
                                        : ops[*fd.unit_index];
    ch.unit_is_identity = unit == RationalMatrix::identity(r);
    if (fd.full_basis) ch.unit_is_identity = ch.unit_is_identity && monomial_operator(fd, Monomial(ring.nvars())) == unit;
    if (!ch.unit_is_identity) detail << "multiplication by 1 is not the identity; ";
  } else {
    ch.unit_is_identity = true;
  }

  // Deterministic sample of pairs (all pairs when small).
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (r * r <= 64) {
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) pairs.emplace_back(a, b);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, r - 1);
    for (int k = 0; k < 12; ++k) pairs.emplace_back(pick(rng), pick(rng));
  }
  ch.associative = true;
  for (const auto& [a, b] : pairs) {
    Polynomial pa = Polynomial::monomial(fd.labels[a]);
    Polynomial pb = Polynomial::monomial(fd.labels[b]);
    RationalMatrix lhs, rhs;
    if (fd.full_basis) {
      lhs = monomial_operator(fd, fd.labels[a]) * monomial_operator(fd, fd.labels[b]);
      rhs = frobenius_operator(ring, fd, pa * pb);
      // Operators built from variables agree with direct multiplication.
      if (!(monomial_operator(fd, fd.labels[a]) == ring.multiplication_matrix(pa))) ch.associative = false;
    } else {
      lhs = ops[a] * ops[b];
      try {
        rhs = frobenius_operator(ring, fd, pa * pb);
      } catch (const Error&) {
        ch.associative = false;
        break;
      }
    }
    ++ch.associativity_samples;
    if (!(lhs == rhs)) ch.associative = false;
    if (!ch.associative) {
      detail << "associativity fails at basis pair (" << a << ", " << b << "); ";
      break;
    }
  }

  // Complementary-degree blocks of eta are square and invertible.
  ch.nondegenerate = true;
  std::map<long, std::vector<std::size_t>> by_degree;
  for (std::size_t k = 0; k < r; ++k) by_degree[ring.degree(fd.positions[k])].push_back(k);
  for (const auto& [deg, rows] : by_degree) {
    auto it = by_degree.find(ring.top_degree() - deg);
    if (it == by_degree.end() || it->second.size() != rows.size()) {
      ch.nondegenerate = false;
      detail << "degree " << deg << " has no complementary piece of equal size; ";
      break;
    }
    if (rank(fd.eta.submatrix(rows, it->second)) != rows.size()) {
      ch.nondegenerate = false;
      detail << "pairing block at degree " << deg << " is singular; ";
      break;
    }
  }
  ch.detail = detail.str();
  return ch;
}

}  // namespace lgcy
