#include "lgcy/deform.hpp"

#include <cmath>
#include <numeric>
#include <Eigen/Sparse>
#include <unsupported/Eigen/MatrixFunctions>

namespace lgcy {

std::string_view to_string(DirectionType t) {
  switch (t) {
    case DirectionType::Relevant: return "relevant";
    case DirectionType::Marginal: return "marginal";
    case DirectionType::Irrelevant: return "irrelevant";
  }
  return "unknown";
}

DeformationFamily DeformationFamily::make(Polynomial base, std::vector<Polynomial> directions,
                                          std::vector<std::string> labels) {
  DeformationFamily fam;
  fam.weights = infer_weights(base);
  fam.base = std::move(base);
  for (const auto& phi : directions) {
    if (phi.nvars() != fam.base.nvars()) throw Error(ErrorCode::DimensionMismatch, "direction over a different ring");
    if (phi.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero deformation direction");
  }
  fam.directions = std::move(directions);
  if (labels.empty())
    for (std::size_t j = 0; j < fam.directions.size(); ++j) labels.push_back("u" + std::to_string(j + 1));
  if (labels.size() != fam.directions.size()) throw Error(ErrorCode::DimensionMismatch, "one label per direction");
  fam.labels = std::move(labels);
  return fam;
}

std::vector<Rational> DeformationFamily::parameter_weights() const {
  std::vector<Rational> out;
  for (const auto& phi : directions) {
    Rational deg = weights.degree(phi.leading().mono);
    for (const auto& t : phi.terms())
      if (weights.degree(t.mono) != deg)
        throw Error(ErrorCode::NotQuasiHomogeneous, "direction is not weighted homogeneous");
    out.push_back(Rational(1) - deg);
  }
  return out;
}

Polynomial DeformationFamily::fiber(const std::vector<Rational>& u) const {
  if (u.size() != directions.size()) throw Error(ErrorCode::DimensionMismatch, "one parameter per direction");
  Polynomial f = base;
  for (std::size_t j = 0; j < u.size(); ++j)
    if (sgn(u[j]) != 0) f += u[j] * directions[j];
  return f;
}

std::vector<DirectionType> classify_directions(const DeformationFamily& family) {
  std::vector<DirectionType> out;
  for (const auto& w : family.parameter_weights()) {
    int s = sgn(w);
    out.push_back(s > 0 ? DirectionType::Relevant : s == 0 ? DirectionType::Marginal : DirectionType::Irrelevant);
  }
  return out;
}

DeformationContext DeformationContext::make(DeformationFamily family, long d, long n) {
  DeformationContext ctx;
  ctx.types = classify_directions(family);
  ctx.base_ring = std::make_shared<const MilnorRing>(MilnorRing::build(family.base, family.weights));
  ctx.selector = subring_selector(*ctx.base_ring, d, n);
  for (auto p : ctx.selector.selected) ctx.frame.push_back(ctx.base_ring->monomial(p));
  ctx.family = std::move(family);
  return ctx;
}

FiberData fiber_data(const DeformationContext& ctx, const std::vector<Rational>& u, bool with_eta) {
  const auto& fam = ctx.family;
  if (u.size() != fam.directions.size()) throw Error(ErrorCode::DimensionMismatch, "one parameter per direction");
  for (std::size_t j = 0; j < u.size(); ++j)
    if (sgn(u[j]) != 0 && ctx.types[j] != DirectionType::Marginal)
      throw Error(ErrorCode::InvalidArgument, "parameter " + fam.labels[j] + " is not marginal");

  FiberData fd;
  fd.u = u;
  Polynomial fu = fam.fiber(u);
  try {
    fd.ring = std::make_shared<const MilnorRing>(MilnorRing::build(fu, fam.weights));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotIsolated) throw Error(ErrorCode::NondegenerationLost, e.what());
    throw;
  }
  const MilnorRing& ring = *fd.ring;
  if (ring.mu() != ctx.base_ring->mu()) throw Error(ErrorCode::NondegenerationLost, "Milnor number jumped");

  const std::size_t r = ctx.frame.size();
  const std::size_t s = fam.directions.size();
  std::vector<RationalVector> aug;
  aug.reserve(r * (s + 1));
  for (const auto& m : ctx.frame) aug.push_back(ring.coordinates(m));
  fd.transition = RationalMatrix::from_columns(ring.mu(), aug);
  std::vector<std::size_t> marginal;
  for (std::size_t tau = 0; tau < s; ++tau) {
    if (ctx.types[tau] != DirectionType::Marginal) continue;
    marginal.push_back(tau);
    for (const auto& m : ctx.frame) aug.push_back(ring.coordinates(fam.directions[tau] * Polynomial::monomial(m)));
  }

  // Row-reduce [T | V]; pivots beyond the T block mean V leaves span(T).
  auto e = detail::eliminate(RationalMatrix::from_columns(ring.mu(), std::move(aug)), true);
  std::vector<std::int64_t> pivot_row(r, -1);
  for (const auto& [row, col] : e.pivots) {
    if (col >= r) throw Error(ErrorCode::InvalidArgument, "direction maps the frame outside its span");
    pivot_row[col] = static_cast<std::int64_t>(row);
  }
  for (std::size_t k = 0; k < r; ++k)
    if (pivot_row[k] < 0) throw Error(ErrorCode::FrameDegeneration, "frame monomials are dependent in the fiber");

  fd.C.assign(s, RationalMatrix());
  for (auto tau : marginal) fd.C[tau] = RationalMatrix(r, r);
  for (std::size_t k = 0; k < r; ++k)
    for (const auto& [col, v] : e.rows[pivot_row[k]]) {
      if (col < r) continue;
      std::size_t block = (col - r) / r, j = (col - r) % r;
      fd.C[marginal[block]].column(j).emplace_back(static_cast<std::uint32_t>(k), v);
    }

  if (!with_eta) return fd;
  // Only complementary degrees pair to something nonzero.
  const auto& w = fam.weights;
  const Rational inv_mu = make_rational(1, static_cast<long>(ring.mu()));
  fd.eta = RationalMatrix(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t l = 0; l < r; ++l) {
      if (w.integer_degree(ctx.frame[j]) + w.integer_degree(ctx.frame[l]) != ring.top_degree()) continue;
      fd.eta.set(j, l, ring.residue(ring.coordinates(ctx.frame[j] * ctx.frame[l])) * inv_mu);
    }
  return fd;
}

Rational higgs_commutativity(const std::vector<RationalMatrix>& C) {
  Rational worst(0);
  for (std::size_t a = 0; a < C.size(); ++a)
    for (std::size_t b = a + 1; b < C.size(); ++b) {
      if (C[a].cols() == 0 || C[b].cols() == 0) continue;
      RationalMatrix k = C[a] * C[b] - C[b] * C[a];
      for (std::size_t j = 0; j < k.cols(); ++j)
        for (const auto& e : k.column(j)) worst = std::max(worst, Rational(abs(e.second)));
    }
  return worst;
}

Rational higgs_commutativity(const FiberData& fd) { return higgs_commutativity(fd.C); }

bool higgs_self_adjoint(const FiberData& fd) {
  for (const auto& c : fd.C)
    if (c.cols() != 0 && !(c.transpose() * fd.eta == fd.eta * c)) return false;
  return true;
}

double max_abs(const Eigen::MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::MatrixXd to_dense(const RationalMatrix& m) {
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& [i, v] : m.column(j)) out(i, static_cast<Eigen::Index>(j)) = v.get_d();
  return out;
}

namespace {

double segment_length(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    double x = Rational(b[k] - a[k]).get_d();
    s += x * x;
  }
  return std::sqrt(s);
}

std::vector<std::size_t> distribute_steps(const Polyline& path, std::size_t steps) {
  const std::size_t nseg = path.size() - 1;
  std::vector<double> len(nseg);
  for (std::size_t k = 0; k < nseg; ++k) len[k] = segment_length(path[k], path[k + 1]);
  double total = std::accumulate(len.begin(), len.end(), 0.0);
  std::vector<std::size_t> out(nseg, 1);
  if (total == 0.0) return out;
  std::size_t used = 0;
  for (std::size_t k = 0; k < nseg; ++k) {
    out[k] = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(steps * len[k] / total)));
    used += out[k];
  }
  // Absorb rounding in the longest segment.
  auto longest = static_cast<std::size_t>(std::max_element(len.begin(), len.end()) - len.begin());
  if (used > steps && out[longest] > used - steps)
    out[longest] -= used - steps;
  else if (used < steps)
    out[longest] += steps - used;
  return out;
}

}  // namespace

ThetaSolution integrate_theta(const DeformationContext& ctx, const Polyline& path, std::size_t steps) {
  if (path.size() < 2) throw Error(ErrorCode::InvalidArgument, "path needs at least two points");
  if (steps == 0) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
  const std::size_t s = ctx.family.directions.size();
  for (const auto& p : path)
    if (p.size() != s) throw Error(ErrorCode::DimensionMismatch, "path point with wrong parameter count");
  for (const auto& x : path.front())
    if (sgn(x) != 0) throw Error(ErrorCode::InvalidArgument, "path must start at u = 0");

  const auto r = static_cast<Eigen::Index>(ctx.frame.size());
  ThetaSolution sol;
  sol.path = path;
  sol.segment_steps = distribute_steps(path, steps);
  sol.steps = std::accumulate(sol.segment_steps.begin(), sol.segment_steps.end(), std::size_t{0});
  sol.theta = Eigen::MatrixXd::Zero(r, r);

  using Sparse = std::vector<Eigen::Triplet<double>>;
  auto sample = [&](const std::vector<Rational>& u) {
    FiberData fd = fiber_data(ctx, u, false);
    ++sol.samples;
    std::vector<Sparse> out(s);
    for (std::size_t tau = 0; tau < s; ++tau)
      for (std::size_t j = 0; j < fd.C[tau].cols(); ++j)
        for (const auto& [i, v] : fd.C[tau].column(j))
          out[tau].emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j), v.get_d());
    return out;
  };
  auto accumulate_into = [&](Eigen::MatrixXd& acc, double scale, const std::vector<Sparse>& C,
                             const std::vector<double>& velocity) {
    for (std::size_t tau = 0; tau < s; ++tau) {
      if (velocity[tau] == 0.0) continue;
      for (const auto& t : C[tau]) acc(t.row(), t.col()) += scale * velocity[tau] * t.value();
    }
  };
  auto commutation = [&](const std::vector<Sparse>& C) {
    for (const auto& c : C) {
      // [C, Theta] with C sparse.
      Eigen::MatrixXd k = Eigen::MatrixXd::Zero(r, r);
      for (const auto& t : c) {
        k.row(t.row()) += t.value() * sol.theta.row(t.col());
        k.col(t.col()) -= t.value() * sol.theta.col(t.row());
      }
      sol.commutation_residual = std::max(sol.commutation_residual, max_abs(k));
    }
  };

  auto C_node = sample(path.front());
  for (std::size_t seg = 0; seg + 1 < path.size(); ++seg) {
    const auto& a = path[seg];
    const auto& b = path[seg + 1];
    const std::size_t m = sol.segment_steps[seg];
    std::vector<Rational> delta(s);
    std::vector<double> velocity(s);
    for (std::size_t k = 0; k < s; ++k) {
      delta[k] = b[k] - a[k];
      velocity[k] = delta[k].get_d();
    }
    auto point = [&](long num, long den) {
      std::vector<Rational> u(s);
      for (std::size_t k = 0; k < s; ++k) u[k] = a[k] + delta[k] * make_rational(num, den);
      return u;
    };
    const double h = 1.0 / static_cast<double>(m);
    for (std::size_t i = 0; i < m; ++i) {
      // The right-hand side does not involve Theta, so k2 = k3.
      auto C_mid = sample(point(static_cast<long>(2 * i + 1), static_cast<long>(2 * m)));
      auto C_end = sample(point(static_cast<long>(i + 1), static_cast<long>(m)));
      accumulate_into(sol.theta, h / 6.0, C_node, velocity);
      accumulate_into(sol.theta, 4.0 * h / 6.0, C_mid, velocity);
      accumulate_into(sol.theta, h / 6.0, C_end, velocity);
      C_node = std::move(C_end);
      commutation(C_node);
    }
  }

  bool closed = true;
  for (const auto& x : path.back()) closed = closed && sgn(x) == 0;
  if (closed) sol.closure_defect = max_abs(sol.theta);
  return sol;
}

Eigen::MatrixXd flat_frame(const Eigen::MatrixXd& theta) { return Eigen::MatrixXd(-theta).exp(); }

Eigen::MatrixXd flat_frame(const ThetaSolution& theta) { return flat_frame(theta.theta); }

}  // namespace lgcy
