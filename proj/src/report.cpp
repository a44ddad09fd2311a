#include "lgcy/report.hpp"

#include <cstdio>

namespace lgcy {

Json float_to_json(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

Json complex_to_json(const Complex& z) { return Json{{"re", float_to_json(z.real())}, {"im", float_to_json(z.imag())}}; }

Json monomial_to_json(const Monomial& m) { return m.exponents(); }

namespace {

template <class T>
Json sparse_to_json(const SparseMatrix<T>& m) {
  Json entries = Json::array();
  // Row-major order reads better and is deterministic.
  auto t = m.transpose();
  for (std::size_t i = 0; i < t.cols(); ++i)
    for (const auto& [j, v] : t.column(i)) entries.push_back(Json::array({i, j, to_string(v)}));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json sizes_to_json(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (auto x : v) out.push_back(x);
  return out;
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) { return sparse_to_json(m); }
Json matrix_to_json(const GaussianMatrix& m) { return sparse_to_json(m); }

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(float_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

GaussianMatrix gaussian_matrix_from_json(const Json& j) {
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  GaussianMatrix m(rows, cols);
  for (const auto& e : j.at("entries")) {
    const auto i = e.at(0).get<std::size_t>();
    const auto k = e.at(1).get<std::size_t>();
    if (i >= rows || k >= cols) throw Error(ErrorCode::DimensionMismatch, "matrix entry out of range");
    m.set(i, k, parse_gaussian(e.at(2).get<std::string>()));
  }
  return m;
}

Json ring_to_json(const MilnorRing& ring, bool include_basis) {
  Json j;
  j["nvars"] = ring.nvars();
  j["f"] = to_string(ring.f());
  j["weights"] = rationals_to_json(ring.weights().q());
  j["mu"] = ring.mu();
  Json dims = Json::object();
  for (const auto& [deg, dim] : ring.graded_dims()) dims[std::to_string(deg)] = dim;
  j["graded_dims"] = std::move(dims);
  j["top_degree"] = ring.top_degree();
  j["socle"] = monomial_to_json(ring.monomial(ring.socle_index()));
  j["hess_coefficient"] = rational_to_json(ring.hess_coefficient());
  j["residue_hess"] = rational_to_json(ring.residue(ring.hess()));
  j["big_residue_hess"] = to_string(ring.big_residue(ring.hess()));
  Json gb = Json::array();
  for (const auto& g : ring.gb().generators()) gb.push_back(to_string(g));
  j["groebner_basis"] = std::move(gb);
  if (include_basis) {
    Json basis = Json::array();
    for (std::size_t i = 0; i < ring.mu(); ++i) basis.push_back(monomial_to_json(ring.monomial(i)));
    j["basis"] = std::move(basis);
  }
  return j;
}

Json selector_to_json(const SubringSelector& s) {
  Json j;
  j["d"] = s.d;
  j["n"] = s.n;
  j["mu_s"] = s.mu_s;
  j["selected"] = sizes_to_json(s.selected);
  j["h_unit"] = rational_to_json(s.h_unit);
  j["h_socle"] = rational_to_json(s.h_socle);
  j["contains_unit"] = s.contains_unit;
  j["contains_socle"] = s.contains_socle;
  if (s.closed_under_multiplication) j["closed_under_multiplication"] = *s.closed_under_multiplication;
  if (s.closure_witness) j["closure_witness"] = Json::array({s.closure_witness->first, s.closure_witness->second});
  return j;
}

Json frobenius_to_json(const FrobeniusData& fd, const FrobeniusChecks& checks, bool include_matrices) {
  Json j;
  j["full_basis"] = fd.full_basis;
  j["dimension"] = fd.positions.size();
  Json labels = Json::array();
  for (const auto& m : fd.labels) labels.push_back(monomial_to_json(m));
  j["labels"] = std::move(labels);
  if (fd.unit_index) j["unit_index"] = *fd.unit_index;
  j["closed"] = fd.closed;
  j["warnings"] = fd.warnings;
  j["checks"] = Json{{"commutative", checks.commutative},
                     {"unit_is_identity", checks.unit_is_identity},
                     {"self_adjoint", checks.self_adjoint},
                     {"associative", checks.associative},
                     {"nondegenerate", checks.nondegenerate},
                     {"associativity_samples", checks.associativity_samples},
                     {"ok", checks.ok()},
                     {"detail", checks.detail}};
  if (include_matrices) {
    j["eta"] = matrix_to_json(fd.eta);
    Json ops = Json::array();
    for (std::size_t k = 0; k < fd.operators.size(); ++k)
      ops.push_back(Json{{"label", monomial_to_json(fd.operator_labels[k])}, {"matrix", matrix_to_json(fd.operators[k])}});
    j["operators"] = std::move(ops);
  }
  return j;
}

Json hodge_to_json(const HodgeReport& h) {
  return Json{{"n", h.n},
              {"d", h.d},
              {"levels", sizes_to_json(h.levels)},
              {"total", h.total},
              {"mu_s", h.mu_s},
              {"marginal_dimension", h.marginal_dimension},
              {"degree_n_plus_1_dimension", h.degree_n_plus_1_dimension}};
}

Json classification_to_json(const ClassificationReport& c) {
  return Json{{"d", c.d},
              {"n", c.n},
              {"case", std::string(to_string(c.label))},
              {"contains_unit", c.contains_unit},
              {"contains_socle", c.contains_socle},
              {"h_unit", rational_to_json(c.h_unit)},
              {"h_socle", rational_to_json(c.h_socle)},
              {"mu", c.mu},
              {"mu_s", c.mu_s},
              {"hodge_total", c.hodge_total},
              {"levels", sizes_to_json(c.levels)},
              {"injective_by_dimension", c.injective_by_dimension},
              {"surjective_by_dimension", c.surjective_by_dimension},
              {"frobenius_closed", c.frobenius_closed},
              {"socle_discrepancy", c.socle_discrepancy},
              {"notes", c.notes}};
}

Json spectrum_to_json(const std::vector<SpectrumEntry>& spectrum) {
  Json out = Json::array();
  for (const auto& e : spectrum)
    out.push_back(Json{{"alpha", monomial_to_json(e.alpha)},
                       {"eigenvalue", rational_to_json(e.eigenvalue)},
                       {"rotation", rational_to_json(e.rotation)},
                       {"invariant", e.invariant}});
  return out;
}

Json filtration_to_json(const FiltrationSplit& split) {
  return Json{{"integral", split.integral.size()}, {"fractional", split.fractional.size()}};
}

Json constants_to_json(long n, long mu) {
  auto t = constants_table(n, mu);
  Json j;
  j["n"] = n;
  Json c = Json::array();
  for (std::size_t a = 0; a < t.c.size(); ++a) c.push_back(Json{{"a", a}, {"value", to_string(t.c[a])}});
  j["c"] = std::move(c);
  Json k = Json::array();
  for (long a = 0; a <= n; ++a)
    for (long b = 0; b <= n; ++b) k.push_back(Json{{"a", a}, {"b", b}, {"value", to_string(k_ab(n, a, b))}});
  j["k"] = std::move(k);
  j["p"] = to_string(t.p);
  j["k_N"] = to_string(t.kN);
  j["hat_eta_norm"] = to_string(t.hat_eta_norm);
  j["cy_norm"] = to_string(t.cy_norm);
  Json chain = Json::array();
  for (const auto& e : identity_chain(n))
    chain.push_back(Json{{"a", e.a}, {"b", e.b}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}, {"ok", e.ok()}});
  j["identity_chain"] = std::move(chain);
  j["identity_chain_ok"] = verify_identity_chain(n);
  Json res = Json::array();
  for (const auto& r : residual_i_powers(n))
    res.push_back(Json{{"a", r.a}, {"b", r.b}, {"magnitude", rational_to_json(r.magnitude)}, {"i_power", r.i_power}});
  j["residual_i_powers"] = std::move(res);
  Json signs = Json::array();
  for (const auto& s : multiplication_signs(n)) signs.push_back(Json{{"a", s.a}, {"b", s.b}, {"sign", s.sign}});
  j["multiplication_signs"] = std::move(signs);
  return j;
}

Json axioms_to_json(const AxiomReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"status", std::string(to_string(c.status))}, {"defect", float_to_json(c.defect)}});
  return Json{{"exact", r.exact}, {"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json fiber_to_json(const DeformationContext& ctx, const FiberData& fd, bool include_matrices) {
  Json j;
  j["u"] = rationals_to_json(fd.u);
  j["mu"] = fd.ring->mu();
  j["frame_dimension"] = ctx.frame.size();
  Json types = Json::array();
  for (auto t : ctx.types) types.push_back(std::string(to_string(t)));
  j["direction_types"] = std::move(types);
  j["parameter_weights"] = rationals_to_json(ctx.family.parameter_weights());
  j["higgs_commutator_max"] = rational_to_json(higgs_commutativity(fd));
  j["higgs_self_adjoint"] = higgs_self_adjoint(fd);
  if (include_matrices) {
    Json C = Json::array();
    for (std::size_t tau = 0; tau < fd.C.size(); ++tau)
      C.push_back(Json{{"label", ctx.family.labels[tau]}, {"matrix", matrix_to_json(fd.C[tau])}});
    j["C"] = std::move(C);
    j["eta"] = matrix_to_json(fd.eta);
  }
  return j;
}

Json theta_to_json(const ThetaSolution& sol) {
  Json path = Json::array();
  for (const auto& p : sol.path) path.push_back(rationals_to_json(p));
  Json j{{"path", std::move(path)},
         {"segment_steps", sizes_to_json(sol.segment_steps)},
         {"steps", sol.steps},
         {"samples", sol.samples},
         {"theta", matrix_to_json(sol.theta)},
         {"flat_frame", matrix_to_json(flat_frame(sol))},
         {"commutation_residual", float_to_json(sol.commutation_residual)}};
  if (sol.closure_defect) j["closure_defect"] = float_to_json(*sol.closure_defect);
  return j;
}

Json period_to_json(const PeriodResult& p) {
  return Json{{"value", complex_to_json(p.value)},
              {"error_estimate", float_to_json(p.error_estimate)},
              {"cutoff", float_to_json(p.cutoff)},
              {"tail_bound", float_to_json(p.tail_bound)},
              {"closed_form", complex_to_json(p.closed_form)},
              {"closed_form_note", p.closed_form_note},
              {"deviation", float_to_json(p.deviation)}};
}

Json scaling_to_json(const ScalingReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"t", float_to_json(s.t)},
                           {"ratio", complex_to_json(s.ratio)},
                           {"predicted", float_to_json(s.predicted)},
                           {"deviation", float_to_json(s.deviation)}});
  return Json{{"d", r.d},
              {"k", r.k},
              {"exponent", float_to_json(r.exponent)},
              {"alternative_exponent", float_to_json(r.alternative_exponent)},
              {"max_deviation", float_to_json(r.max_deviation)},
              {"alternative_max_deviation", float_to_json(r.alternative_max_deviation)},
              {"matching_exponent", r.matching_exponent},
              {"samples", std::move(samples)}};
}

Json gamma_probe_to_json(const GammaProbeReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates)
    cands.push_back(Json{{"label", c.label},
                         {"argument", float_to_json(c.argument)},
                         {"ratio", complex_to_json(c.ratio)},
                         {"matches", c.matches}});
  return Json{{"d", r.d},
              {"k", r.k},
              {"N", r.N},
              {"lhs", complex_to_json(r.lhs)},
              {"fiber_value", complex_to_json(r.fiber_value)},
              {"candidates", std::move(cands)},
              {"coincident", r.coincident},
              {"finding", r.finding}};
}

Json error_to_json(const Error& e) {
  Json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (e.offset()) j["offset"] = *e.offset();
  return j;
}

Json make_report(std::string_view command, std::string_view input, Json results, double seconds) {
  Json j;
  j["command"] = std::string(command);
  j["input_hash"] = content_hash(input);
  j["results"] = std::move(results);
  j["version"] = std::string(kReportVersion);
  j["timing"] = Json{{"seconds", float_to_json(seconds)}};
  return j;
}

}  // namespace lgcy
