#include "lgcy/corpus.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>

#include "lgcy/parse.hpp"
#include "lgcy/report.hpp"

namespace lgcy {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Polynomial> marginal_directions(const MilnorRing& ring, const SubringSelector& s) {
  std::vector<Polynomial> out;
  for (auto p : s.selected)
    if (ring.degree(p) == s.d) out.push_back(Polynomial::monomial(ring.monomial(p)));
  return out;
}

}  // namespace

std::vector<CorpusCase> load_corpus(const std::string& data_dir) {
  Json manifest = Json::parse(read_file(data_dir + "/corpus/manifest.json"));
  std::vector<CorpusCase> out;
  for (const auto& m : manifest) {
    CorpusCase c;
    c.name = m.at("name").get<std::string>();
    c.file = m.at("file").get<std::string>();
    c.text = read_file(data_dir + "/corpus/" + c.file);
    if (m.contains("n")) c.n = m.at("n").get<long>();
    if (m.contains("d")) c.d = m.at("d").get<long>();
    c.golden = Json::parse(read_file(data_dir + "/golden/" + m.at("golden").get<std::string>()));
    out.push_back(std::move(c));
  }
  return out;
}

CorpusResult run_corpus_case(const CorpusCase& c) {
  auto t0 = std::chrono::steady_clock::now();
  CorpusResult r;
  r.name = c.name;
  auto check = [&](std::string name, bool pass, std::string detail = {}) {
    r.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const Json& g = c.golden;
  try {
    auto src = parse_polynomial(c.text);
    check("roundtrip", parse_polynomial(render(src)).poly == src.poly);
    auto ring = MilnorRing::build(src.poly);
    check("mu", ring.mu() == g.at("mu").get<std::size_t>(), std::to_string(ring.mu()));
    Json dims = Json::object();
    for (const auto& [deg, dim] : ring.graded_dims()) dims[std::to_string(deg)] = dim;
    check("graded_dims", dims == g.at("graded_dims"), dims.dump());
    check("residue_hess", to_string(ring.residue(ring.hess())) == g.at("residue_hess").get<std::string>());

    auto full = frobenius_full(ring);
    auto cf = verify_frobenius(ring, full);
    check("frobenius_full", cf.ok(), cf.detail);

    if (c.n && c.d) {
      const long n = *c.n, d = *c.d;
      auto sel = subring_selector(ring, d, n);
      check("mu_s", sel.mu_s == g.at("mu_s").get<std::size_t>(), std::to_string(sel.mu_s));
      auto fs = frobenius_selected(ring, sel);
      auto cs = verify_frobenius(ring, fs);
      const bool closed = g.at("closed").get<bool>();
      if (closed)
        check("frobenius_selected", fs.closed && cs.ok(), cs.detail);
      else
        check("frobenius_selected", !fs.closed && cs.self_adjoint && cs.nondegenerate, "not closed; pairing checked");
      auto h = hodge_numbers(ring, n);
      check("hodge_levels", Json(h.levels) == g.at("hodge_levels") && h.total == sel.mu_s);
      auto cl = classify(ring, d, n);
      check("case", std::string(to_string(cl.label)) == g.at("case").get<std::string>(), std::string(to_string(cl.label)));
      auto split = deligne_filtration_split(ring, sel);
      check("filtration", Json::array({split.integral.size(), split.fractional.size()}) == g.at("filtration"));
      if (g.contains("invariant_count")) {
        auto inv = invariant_count(ring, n);
        check("invariant_count", inv == g.at("invariant_count").get<std::size_t>() && inv == sel.mu_s,
              std::to_string(inv));
        auto dirs = marginal_directions(ring, sel);
        auto lg = assemble_lg(ring, sel, dirs);
        auto cy = assemble_cy(ring, sel, dirs);
        bool ok = verify_axioms(lg).ok() && verify_axioms(cy).ok() &&
                  verify_embedding(cy, lg, GaussianMatrix::identity(sel.mu_s)).ok();
        check("ttstar_lg_cy", ok, std::to_string(dirs.size()) + " directions");
      }
    }
  } catch (const Error& e) {
    check("error", false, std::string(to_string(e.code())) + ": " + e.what());
  } catch (const std::exception& e) {
    check("error", false, e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string corpus_matrix(const std::vector<CorpusResult>& results) {
  std::vector<std::string> columns;
  std::set<std::string> seen;
  for (const auto& r : results)
    for (const auto& c : r.checks)
      if (seen.insert(c.name).second) columns.push_back(c.name);
  std::size_t width = 4;
  for (const auto& r : results) width = std::max(width, r.name.size());
  std::ostringstream os;
  os << std::string(width, ' ');
  for (const auto& col : columns) os << "  " << col << std::string(col.size() < 4 ? 4 - col.size() : 0, ' ');
  os << '\n';
  for (const auto& r : results) {
    os << r.name << std::string(width - r.name.size(), ' ');
    for (const auto& col : columns) {
      std::string cell = "-";
      for (const auto& c : r.checks)
        if (c.name == col) cell = c.pass ? "pass" : "FAIL";
      std::size_t pad = col.size() > cell.size() ? col.size() - cell.size() : 0;
      os << "  " << cell << std::string(pad, ' ');
    }
    os << '\n';
  }
  return os.str();
}

Json corpus_to_json(const std::vector<CorpusResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    out.push_back(Json{{"name", r.name}, {"ok", r.ok()}, {"checks", std::move(checks)}});
  }
  return out;
}

}  // namespace lgcy
