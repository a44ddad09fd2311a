#include "lgcy/ttstar.hpp"

#include <Eigen/Dense>

#include "lgcy/constants.hpp"

namespace lgcy {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::NotChecked: return "not checked";
  }
  return "unknown";
}

namespace {

double entry_size(const GaussianRational& z) { return std::sqrt(z.norm().get_d()); }
double entry_size(const Complex& z) { return std::abs(z); }

template <class T>
double max_entry(const SparseMatrix<T>& m) {
  double r = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) r = std::max(r, entry_size(e.second));
  return r;
}

template <class T>
constexpr bool is_exact = !std::is_same_v<T, Complex>;

template <class T>
AxiomCheck compare(std::string name, const SparseMatrix<T>& a, const SparseMatrix<T>& b) {
  AxiomCheck c;
  c.name = std::move(name);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    c.status = CheckStatus::Fail;
    c.defect = INFINITY;
    return c;
  }
  c.defect = max_entry(SparseMatrix<T>(a - b));
  if constexpr (is_exact<T>)
    c.status = a == b ? CheckStatus::Pass : CheckStatus::Fail;
  else
    c.status = c.defect <= kFloatTolerance ? CheckStatus::Pass : CheckStatus::Fail;
  return c;
}

template <class T>
void require_square(const SparseMatrix<T>& m, std::size_t r, const char* what) {
  if (m.rows() != r || m.cols() != r)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has the wrong shape");
}

template <class T>
void check_shapes(const TtStarData<T>& d) {
  const std::size_t r = d.eta.rows();
  require_square(d.eta, r, "eta");
  require_square(d.K, r, "K");
  for (const auto& c : d.C) require_square(c, r, "C_tau");
  for (const auto& [D, Db] : d.connection) {
    require_square(D, r, "D_tau");
    require_square(Db, r, "Dbar_tau");
  }
}

Eigen::MatrixXcd dense(const ComplexMatrix& m) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.column(j)) out(i, static_cast<Eigen::Index>(j)) = v;
  return out;
}

std::size_t matrix_rank(const GaussianMatrix& m) { return rank(m); }

std::size_t matrix_rank(const ComplexMatrix& m) {
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(dense(m));
  lu.setThreshold(kFloatTolerance);
  return static_cast<std::size_t>(lu.rank());
}

template <class T>
AxiomReport axioms_impl(const TtStarData<T>& d) {
  check_shapes(d);
  const std::size_t r = d.dimension();
  AxiomReport rep;
  rep.exact = is_exact<T>;
  const auto I = SparseMatrix<T>::identity(r);

  AxiomCheck nondeg{"eta nondegenerate", matrix_rank(d.eta) == r ? CheckStatus::Pass : CheckStatus::Fail, 0.0};
  rep.checks.push_back(nondeg);
  rep.checks.push_back(compare("kappa involution", SparseMatrix<T>(d.K * d.K.conjugate()), I));
  rep.checks.push_back(
      compare("g real", SparseMatrix<T>(d.K.transpose() * d.eta), SparseMatrix<T>(d.eta.conjugate() * d.K.conjugate())));

  double adj = 0.0, comm = 0.0;
  bool adj_ok = true, comm_ok = true;
  for (std::size_t a = 0; a < d.C.size(); ++a) {
    auto c = compare("", SparseMatrix<T>(d.C[a].transpose() * d.eta), SparseMatrix<T>(d.eta * d.C[a]));
    adj = std::max(adj, c.defect);
    adj_ok = adj_ok && c.status == CheckStatus::Pass;
    for (std::size_t b = a + 1; b < d.C.size(); ++b) {
      auto k = compare("", SparseMatrix<T>(d.C[a] * d.C[b]), SparseMatrix<T>(d.C[b] * d.C[a]));
      comm = std::max(comm, k.defect);
      comm_ok = comm_ok && k.status == CheckStatus::Pass;
    }
  }
  rep.checks.push_back({"C self-adjoint", adj_ok ? CheckStatus::Pass : CheckStatus::Fail, adj});
  rep.checks.push_back({"C commute", comm_ok ? CheckStatus::Pass : CheckStatus::Fail, comm});

  if (d.connection.empty()) {
    rep.checks.push_back({"connection real", CheckStatus::NotChecked, 0.0});
  } else {
    double def = 0.0;
    bool ok = true;
    for (const auto& [D, Db] : d.connection) {
      // (D + Dbar) kappa = 0 splits into Dbar K = K conj(D).
      auto c = compare("", SparseMatrix<T>(Db * d.K), SparseMatrix<T>(d.K * D.conjugate()));
      def = std::max(def, c.defect);
      ok = ok && c.status == CheckStatus::Pass;
    }
    rep.checks.push_back({"connection real", ok ? CheckStatus::Pass : CheckStatus::Fail, def});
  }

  if (d.metric_instance) {
    // g(u, v) = u^T eta K conj(v); the Gram matrix in the frame is eta K.
    SparseMatrix<T> G = d.eta * d.K;
    auto herm = compare("g Hermitian", G.transpose().conjugate(), G);
    rep.checks.push_back(herm);
    bool positive = true;
    for (std::size_t i = 0; i < r; ++i) {
      T gii = G.get(i, i);
      if constexpr (is_exact<T>)
        positive = positive && gii.is_real() && sgn(gii.re()) > 0;
      else
        positive = positive && std::abs(gii.imag()) <= kFloatTolerance && gii.real() > 0;
    }
    rep.checks.push_back({"g positive on probes", positive ? CheckStatus::Pass : CheckStatus::Fail, 0.0});
  } else {
    rep.checks.push_back({"g positive on probes", CheckStatus::NotChecked, 0.0});
  }
  return rep;
}

template <class T>
AxiomReport embedding_impl(const TtStarData<T>& src, const TtStarData<T>& dst, const SparseMatrix<T>& P) {
  check_shapes(src);
  check_shapes(dst);
  if (P.rows() != dst.dimension() || P.cols() != src.dimension())
    throw Error(ErrorCode::DimensionMismatch, "phi' must be dst.r x src.r");
  if (src.C.size() != dst.C.size())
    throw Error(ErrorCode::DimensionMismatch, "source and destination have different direction counts");
  if (matrix_rank(P) != src.dimension()) throw Error(ErrorCode::RankDeficient, "phi' lacks full column rank");

  AxiomReport rep;
  rep.exact = is_exact<T>;
  rep.checks.push_back(compare("pairing pullback", src.eta, SparseMatrix<T>(P.transpose() * dst.eta * P)));
  rep.checks.push_back(compare("kappa intertwining", SparseMatrix<T>(dst.K * P.conjugate()), SparseMatrix<T>(P * src.K)));
  double def = 0.0;
  bool ok = true;
  for (std::size_t t = 0; t < src.C.size(); ++t) {
    auto c = compare("", SparseMatrix<T>(P * src.C[t]), SparseMatrix<T>(dst.C[t] * P));
    def = std::max(def, c.defect);
    ok = ok && c.status == CheckStatus::Pass;
  }
  rep.checks.push_back({"C intertwining", ok ? CheckStatus::Pass : CheckStatus::Fail, def});
  if (src.connection.empty() || dst.connection.empty()) {
    rep.checks.push_back({"D intertwining", CheckStatus::NotChecked, 0.0});
  } else {
    if (src.connection.size() != dst.connection.size())
      throw Error(ErrorCode::DimensionMismatch, "connection sample counts differ");
    double dd = 0.0;
    bool dok = true;
    for (std::size_t t = 0; t < src.connection.size(); ++t) {
      auto c = compare("", SparseMatrix<T>(P * src.connection[t].first), SparseMatrix<T>(dst.connection[t].first * P));
      dd = std::max(dd, c.defect);
      dok = dok && c.status == CheckStatus::Pass;
    }
    rep.checks.push_back({"D intertwining", dok ? CheckStatus::Pass : CheckStatus::Fail, dd});
  }
  return rep;
}

RationalMatrix restrict_operator(const MilnorRing& ring, const std::vector<std::size_t>& positions,
                                 const Polynomial& phi) {
  std::vector<std::int64_t> local(ring.mu(), -1);
  for (std::size_t k = 0; k < positions.size(); ++k) local[positions[k]] = static_cast<std::int64_t>(k);
  std::vector<RationalVector> cols(positions.size());
  for (std::size_t j = 0; j < positions.size(); ++j) {
    RationalVector v = ring.coordinates(phi * Polynomial::monomial(ring.monomial(positions[j])));
    for (const auto& [i, c] : v) {
      if (local[i] < 0) throw Error(ErrorCode::InvalidArgument, "direction does not preserve the selected span");
      cols[j].emplace_back(static_cast<std::uint32_t>(local[i]), c);
    }
    std::sort(cols[j].begin(), cols[j].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  return RationalMatrix::from_columns(positions.size(), std::move(cols));
}

}  // namespace

AxiomReport verify_axioms(const TtStarData<GaussianRational>& data) { return axioms_impl(data); }
AxiomReport verify_axioms(const TtStarData<Complex>& data) { return axioms_impl(data); }

AxiomReport verify_embedding(const TtStarData<GaussianRational>& src, const TtStarData<GaussianRational>& dst,
                             const GaussianMatrix& phi_prime) {
  return embedding_impl(src, dst, phi_prime);
}

AxiomReport verify_embedding(const TtStarData<Complex>& src, const TtStarData<Complex>& dst,
                             const ComplexMatrix& phi_prime) {
  return embedding_impl(src, dst, phi_prime);
}

GaussianMatrix to_gaussian(const RationalMatrix& m) {
  return m.map([](const Rational& q) { return GaussianRational(q); });
}

ComplexMatrix to_complex(const GaussianMatrix& m) {
  return m.map([](const GaussianRational& z) { return lgcy::to_complex(z); });
}

TtStarData<Complex> to_complex(const TtStarData<GaussianRational>& d) {
  TtStarData<Complex> out;
  out.eta = to_complex(d.eta);
  out.K = to_complex(d.K);
  for (const auto& c : d.C) out.C.push_back(to_complex(c));
  for (const auto& [a, b] : d.connection) out.connection.emplace_back(to_complex(a), to_complex(b));
  out.metric_instance = d.metric_instance;
  return out;
}

TtStarData<GaussianRational> assemble_lg(const MilnorRing& ring, const SubringSelector& selector,
                                         const std::vector<Polynomial>& directions) {
  TtStarData<GaussianRational> d;
  d.eta = to_gaussian(ring.pairing_matrix(selector.selected));
  d.K = GaussianMatrix::identity(selector.selected.size());
  for (const auto& phi : directions) d.C.push_back(to_gaussian(restrict_operator(ring, selector.selected, phi)));
  return d;
}

TtStarData<GaussianRational> assemble_cy(const MilnorRing& ring, const SubringSelector& selector,
                                         const std::vector<Polynomial>& directions) {
  const long n = selector.n;
  if (selector.d != n + 2) throw Error(ErrorCode::InvalidArgument, "CY assembly needs d = n + 2");
  const auto& pos = selector.selected;
  const std::size_t r = pos.size();
  const Rational mu(static_cast<long>(ring.mu()));

  auto level = [&](long degree) { return degree / (n + 2); };
  auto eta_cy = [&](const Polynomial& A, long a, std::size_t l) -> GaussianRational {
    long b = level(ring.degree(pos[l]));
    if (a + b != n) return GaussianRational(0);
    Rational res = ring.residue(A * Polynomial::monomial(ring.monomial(pos[l])));
    SymbolicScalar v = cy_pairing(n, a, b, res, mu);
    if (v.is_zero()) return GaussianRational(0);
    if (v.pi_power() != 0) throw Error(ErrorCode::OracleMismatch, "CY pairing retained a power of pi");
    return v.coeff();
  };

  TtStarData<GaussianRational> d;
  d.eta = GaussianMatrix(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      long a = level(ring.degree(pos[j]));
      d.eta.set(j, l, eta_cy(Polynomial::monomial(ring.monomial(pos[j])), a, l));
    }
  d.K = GaussianMatrix::identity(r);
  GaussianMatrix eta_inv = inverse(d.eta);
  for (const auto& phi : directions) {
    auto wdeg = ring.weights().integer_degree(phi.leading().mono);
    for (const auto& t : phi.terms())
      if (ring.weights().integer_degree(t.mono) != wdeg)
        throw Error(ErrorCode::InvalidArgument, "direction is not homogeneous");
    if (wdeg != n + 2) throw Error(ErrorCode::InvalidArgument, "CY Higgs fields need marginal directions");
    // E_{jl} = eta(phi A_j, A_l); C_{tau j}^k = sum_l E_{jl} eta^{lk}.
    GaussianMatrix E(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      long a = level(ring.degree(pos[j])) + 1;
      Polynomial A = phi * Polynomial::monomial(ring.monomial(pos[j]));
      for (std::size_t l = 0; l < r; ++l) E.set(j, l, eta_cy(A, a, l));
    }
    // Row j of E * eta_inv holds the coefficients of phi A_j, i.e. column j of C.
    d.C.push_back((E * eta_inv).transpose());
  }
  return d;
}

TtStarData<GaussianRational> assemble_full(const MilnorRing& ring, const std::vector<Polynomial>& directions) {
  TtStarData<GaussianRational> d;
  d.eta = to_gaussian(ring.pairing_matrix());
  d.K = GaussianMatrix::identity(ring.mu());
  for (const auto& phi : directions) d.C.push_back(to_gaussian(ring.multiplication_matrix(phi)));
  return d;
}

GaussianMatrix inclusion_matrix(const MilnorRing& ring, const SubringSelector& selector) {
  GaussianMatrix P(ring.mu(), selector.selected.size());
  for (std::size_t k = 0; k < selector.selected.size(); ++k) P.set(selector.selected[k], k, GaussianRational(1));
  return P;
}

}  // namespace lgcy
