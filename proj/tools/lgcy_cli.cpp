#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lgcy/corpus.hpp"
#include "lgcy/parse.hpp"
#include "lgcy/report.hpp"

using namespace lgcy;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string poly;
  std::string family;
  std::string path;
  std::string json_out;
  std::string selector;
  std::string u;
  std::string expr;
  std::string directions;
  std::string kappa;
  std::string t_values = "-1,-2,-4";
  std::string data_dir = LGCY_DATA_DIR;
  std::optional<long> n;
  std::optional<long> d;
  long k = 0;
  long mu = 1;
  std::size_t steps = 1000;
  double tol = 1e-10;
  bool matrices = false;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream is(s);
  while (std::getline(is, item, sep))
    if (item.find_first_not_of(" \t") != std::string::npos) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& item : split(s, ',')) out.push_back(parse_rational(item));
  return out;
}

// Everything a command reads, for the input hash.
struct Input {
  std::string canonical;
  void add(std::string_view key, std::string_view value) {
    canonical += key;
    canonical += '=';
    canonical += value;
    canonical += '\n';
  }
};

struct Loaded {
  PolynomialSource src;
  MilnorRing ring;
  long n;
  std::optional<long> d;
};

Loaded load_ring(const Options& o, Input& in) {
  if (o.poly.empty()) throw UsageError("--poly is required");
  std::string text = read_file(o.poly);
  in.add("poly", text);
  auto src = parse_polynomial(text);
  auto ring = MilnorRing::build(src.poly);
  long n = o.n.value_or(static_cast<long>(ring.nvars()) - 2);
  std::optional<long> d = o.d;
  if (!d) d = ring.weights().homogeneous_degree();
  in.add("n", std::to_string(n));
  if (d) in.add("d", std::to_string(*d));
  return {std::move(src), std::move(ring), n, d};
}

long require_d(const Loaded& l) {
  if (!l.d) throw Error(ErrorCode::InvalidArgument, "f is not homogeneous; the selector needs a degree d");
  return *l.d;
}

Json cmd_analyze(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  Json j;
  j["variables"] = l.src.names;
  j["polynomial"] = render(l.src);
  auto nd = nondegeneracy_check(l.src.poly, l.ring.weights());
  j["nondegeneracy"] = Json{{"ok", nd.ok()},
                            {"no_cross_terms", nd.no_cross_terms},
                            {"isolated", nd.isolated},
                            {"weights_bounded", nd.weights_bounded},
                            {"detail", nd.detail}};
  j["euler_identity"] = euler_xi_identity_check(l.src.poly, l.ring.weights());
  j["ring"] = ring_to_json(l.ring, false);
  if (l.d && l.n >= 0 && static_cast<std::size_t>(l.n + 2) == l.ring.nvars()) {
    auto sel = subring_selector(l.ring, *l.d, l.n);
    j["selector"] = selector_to_json(sel);
    if (l.n >= 1) j["classification"] = classification_to_json(classify(l.ring, *l.d, l.n));
    if (l.n >= 0) j["hodge"] = hodge_to_json(hodge_numbers(l.ring, l.n));
  }
  return j;
}

Json cmd_milnor(const Options& o, Input& in) { return ring_to_json(load_ring(o, in).ring, true); }

Json cmd_residue(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  in.add("expr", o.expr);
  Polynomial a = o.expr.empty() ? l.ring.hess() : parse_polynomial(o.expr, l.src.names);
  return Json{{"expression", o.expr.empty() ? std::string("hess f") : to_string(a, l.src.names)},
              {"normal_form", to_string(l.ring.reduce(a), l.src.names)},
              {"residue", rational_to_json(l.ring.residue(a))},
              {"big_residue", to_string(l.ring.big_residue(a))},
              {"eta_with_unit", rational_to_json(l.ring.pairing(a, Polynomial::constant(l.ring.nvars(), Rational(1))))},
              {"mu", l.ring.mu()}};
}

SubringSelector make_selector(const Options& o, const Loaded& l) {
  long d = require_d(l);
  if (o.selector == "cy" && d != l.n + 2)
    throw Error(ErrorCode::InvalidArgument, "the cy selector needs d = n + 2");
  return subring_selector(l.ring, d, l.n);
}

Json cmd_frobenius(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  in.add("selector", o.selector);
  Json j;
  if (o.selector.empty() || o.selector == "full") {
    auto fd = frobenius_full(l.ring);
    j = frobenius_to_json(fd, verify_frobenius(l.ring, fd), o.matrices);
  } else {
    auto sel = make_selector(o, l);
    auto fd = frobenius_selected(l.ring, sel);
    j = frobenius_to_json(fd, verify_frobenius(l.ring, fd), o.matrices);
    j["selector"] = selector_to_json(sel);
  }
  return j;
}

Json cmd_hodge(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  Json j = hodge_to_json(hodge_numbers(l.ring, l.n));
  auto [formula, piece] = marginal_dimension_crosscheck(l.n);
  j["marginal_crosscheck"] = Json{{"binomial_formula", formula}, {"fermat_piece", piece}};
  return j;
}

Json cmd_classify(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  return classification_to_json(classify(l.ring, require_d(l), l.n));
}

Json cmd_monodromy(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  Json j;
  auto spectrum = gm_spectrum(l.ring);
  j["spectrum"] = spectrum_to_json(spectrum);
  std::size_t invariant = 0;
  for (const auto& e : spectrum) invariant += e.invariant ? 1 : 0;
  j["invariant_entries"] = invariant;
  bool xi_ok = true;
  for (std::size_t i = 0; i < l.ring.mu(); ++i) xi_ok = xi_ok && xi_derivative_check(l.ring, l.ring.monomial(i));
  j["xi_derivative_check"] = xi_ok;
  if (l.d) {
    auto sel = subring_selector(l.ring, *l.d, l.n, false);
    j["filtration"] = filtration_to_json(deligne_filtration_split(l.ring, sel));
    j["mu_s"] = sel.mu_s;
    if (*l.d == l.n + 2) j["invariant_count"] = invariant_count(l.ring, l.n);
  }
  return j;
}

DeformationContext load_family(const Options& o, Input& in) {
  if (o.family.empty()) throw UsageError("--family is required");
  std::string text = read_file(o.family);
  in.add("family", text);
  Json j = Json::parse(text);
  auto base = parse_polynomial(j.at("base").get<std::string>());
  std::vector<Polynomial> dirs;
  for (const auto& e : j.at("directions")) dirs.push_back(parse_polynomial(e.get<std::string>(), base.names));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  auto fam = DeformationFamily::make(base.poly, std::move(dirs), std::move(labels));
  long n = j.contains("n") ? j.at("n").get<long>() : static_cast<long>(base.poly.nvars()) - 2;
  std::optional<long> d = j.contains("d") ? std::optional<long>(j.at("d").get<long>()) : fam.weights.homogeneous_degree();
  if (!d) throw Error(ErrorCode::InvalidArgument, "family base is not homogeneous");
  return DeformationContext::make(std::move(fam), *d, n);
}

Json cmd_deform(const Options& o, Input& in) {
  auto ctx = load_family(o, in);
  in.add("u", o.u);
  auto u = o.u.empty() ? std::vector<Rational>(ctx.family.directions.size(), Rational(0)) : parse_rationals(o.u);
  return fiber_to_json(ctx, fiber_data(ctx, u), true);
}

Json cmd_theta(const Options& o, Input& in) {
  auto ctx = load_family(o, in);
  if (o.path.empty()) throw UsageError("--path is required");
  std::string text = read_file(o.path);
  in.add("path", text);
  in.add("steps", std::to_string(o.steps));
  Polyline path;
  for (const auto& p : Json::parse(text)) {
    std::vector<Rational> pt;
    for (const auto& x : p) pt.push_back(parse_rational(x.is_string() ? x.get<std::string>() : x.dump()));
    path.push_back(std::move(pt));
  }
  return theta_to_json(integrate_theta(ctx, path, o.steps));
}

// A user-supplied real structure must satisfy conj(K) K = I.
Json kappa_validation(const GaussianMatrix& K) {
  bool square = K.rows() == K.cols();
  bool involution = square && K.conjugate() * K == GaussianMatrix::identity(K.rows());
  return Json{{"square", square}, {"conj_K_times_K_is_identity", involution}};
}

Json cmd_ttstar(const Options& o, Input& in) {
  auto l = load_ring(o, in);
  in.add("directions", o.directions);
  auto sel = make_selector(o, l);
  std::vector<Polynomial> dirs;
  if (o.directions.empty()) {
    for (auto p : sel.selected)
      if (l.ring.degree(p) == sel.d) dirs.push_back(Polynomial::monomial(l.ring.monomial(p)));
  } else {
    for (const auto& e : split(o.directions, ';')) dirs.push_back(parse_polynomial(e, l.src.names));
  }
  Json j;
  j["selector"] = selector_to_json(sel);
  j["directions"] = dirs.size();
  auto lg = assemble_lg(l.ring, sel, dirs);
  if (!o.kappa.empty()) {
    std::string text = read_file(o.kappa);
    in.add("kappa", text);
    lg.K = gaussian_matrix_from_json(Json::parse(text));
    j["kappa"] = kappa_validation(lg.K);
  }
  j["lg"] = axioms_to_json(verify_axioms(lg));
  auto full = assemble_full(l.ring, dirs);
  if (!o.kappa.empty()) full.K = GaussianMatrix::identity(l.ring.mu());
  j["full"] = axioms_to_json(verify_axioms(full));
  if (o.kappa.empty()) j["selected_into_full"] = axioms_to_json(verify_embedding(lg, full, inclusion_matrix(l.ring, sel)));
  if (sel.d == l.n + 2) {
    auto cy = assemble_cy(l.ring, sel, dirs);
    if (!o.kappa.empty()) cy.K = lg.K;
    j["cy"] = axioms_to_json(verify_axioms(cy));
    j["cy_into_lg_identity"] = axioms_to_json(verify_embedding(cy, lg, GaussianMatrix::identity(sel.mu_s)));
  }
  return j;
}

Json cmd_constants(const Options& o, Input& in) {
  if (!o.n) throw UsageError("--n is required");
  in.add("n", std::to_string(*o.n));
  in.add("mu", std::to_string(o.mu));
  return constants_to_json(*o.n, o.mu);
}

Json cmd_oscillatory(const Options& o, Input& in) {
  if (!o.d) throw UsageError("--d is required");
  in.add("d", std::to_string(*o.d));
  in.add("k", std::to_string(o.k));
  in.add("tol", float_to_json(o.tol).get<std::string>());
  in.add("t", o.t_values);
  Json j;
  Json thimbles = Json::array();
  for (long a = 0; a < *o.d; ++a) {
    Json t = period_to_json(thimble_integral(*o.d, o.k, a, o.tol));
    t["a"] = a;
    t["direction"] = complex_to_json(ThimbleRay::make(*o.d, a).direction);
    thimbles.push_back(std::move(t));
  }
  j["thimbles"] = std::move(thimbles);
  std::vector<double> ts;
  for (const auto& s : split(o.t_values, ',')) ts.push_back(std::stod(s));
  j["scaling"] = scaling_to_json(scaling_law_check(*o.d, o.k, ts));
  j["gamma_probe"] = gamma_probe_to_json(gamma_factor_probe(*o.d, o.k));
  return j;
}

int run_corpus(const Options& o, Input& in, Json& results) {
  in.add("data", "corpus");
  std::vector<CorpusResult> rs;
  for (const auto& c : load_corpus(o.data_dir)) {
    in.add(c.name, c.text);
    rs.push_back(run_corpus_case(c));
  }
  std::cout << corpus_matrix(rs);
  results = corpus_to_json(rs);
  for (const auto& r : rs)
    if (!r.ok()) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor rings, residues and tt* checks for quasi-homogeneous singularities"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--json", o.json_out, "write the report to this file");
  };
  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("--poly", o.poly, "polynomial file");
    sub->add_option("--n", o.n, "dimension n (default N - 2)");
    sub->add_option("--d", o.d, "degree d (inferred when homogeneous)");
  };

  struct Command {
    std::string name;
    std::string help;
    std::function<Json(const Options&, Input&)> run;
  };
  std::vector<Command> commands = {
      {"analyze", "weights, nondegeneracy, ring summary and classification", cmd_analyze},
      {"milnor", "Milnor ring: Groebner basis, standard monomials, graded dimensions", cmd_milnor},
      {"residue", "residue of an expression (default hess f)", cmd_residue},
      {"frobenius", "multiplication operators, pairing and Frobenius checks", cmd_frobenius},
      {"hodge", "primitive Hodge numbers from the graded pieces", cmd_hodge},
      {"classify", "case label and dimension evidence", cmd_classify},
      {"monodromy", "spectrum, invariant classes and filtration split", cmd_monodromy},
      {"deform", "fiber data of a deformation family", cmd_deform},
      {"theta", "gauge field along a polyline", cmd_theta},
      {"ttstar-verify", "tt* axioms and embeddings for LG and CY data", cmd_ttstar},
      {"constants", "normalization constants and identity chain", cmd_constants},
      {"oscillatory", "thimble integrals, scaling law and Gamma probe", cmd_oscillatory},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub);
    subs[c.name] = sub;
  }
  for (const char* name : {"analyze", "milnor", "residue", "frobenius", "hodge", "classify", "monodromy", "ttstar-verify"})
    add_poly(subs[name]);
  subs["residue"]->add_option("--expr", o.expr, "expression in the variables of the polynomial");
  for (const char* name : {"frobenius", "ttstar-verify"})
    subs[name]->add_option("--selector", o.selector, "full, cy or dstar")->check(CLI::IsMember({"full", "cy", "dstar"}));
  subs["frobenius"]->add_flag("--matrices", o.matrices, "include eta and operator matrices");
  subs["ttstar-verify"]->add_option("--directions", o.directions, "';'-separated deformation directions");
  subs["ttstar-verify"]->add_option("--kappa", o.kappa, "real-structure matrix K (JSON)");
  for (const char* name : {"deform", "theta"}) subs[name]->add_option("--family", o.family, "family description (JSON)");
  subs["deform"]->add_option("--u", o.u, "parameter values r1,r2,...");
  subs["theta"]->add_option("--path", o.path, "polyline (JSON list of points)");
  subs["theta"]->add_option("--steps", o.steps, "RK4 steps")->check(CLI::PositiveNumber);
  subs["constants"]->add_option("--n", o.n, "dimension n")->check(CLI::NonNegativeNumber);
  subs["constants"]->add_option("--mu", o.mu, "Milnor number in the normalizations");
  subs["oscillatory"]->add_option("--d", o.d, "degree d");
  subs["oscillatory"]->add_option("--k", o.k, "exponent k");
  subs["oscillatory"]->add_option("--tol", o.tol, "absolute tolerance")->check(CLI::PositiveNumber);
  subs["oscillatory"]->add_option("--t", o.t_values, "negative fiber values t1,t2,...");
  auto* corpus = app.add_subcommand("corpus", "run the golden corpus and print a pass/fail matrix");
  add_common(corpus);
  corpus->add_option("--data", o.data_dir, "data directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  const std::string name = chosen->get_name();
  auto t0 = std::chrono::steady_clock::now();
  Input in;
  in.add("command", name);
  Json results;
  Json report;
  int status = 0;
  try {
    if (name == "corpus") {
      status = run_corpus(o, in, results);
    } else {
      for (const auto& c : commands)
        if (c.name == name) results = c.run(o, in);
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report = make_report(name, in.canonical, std::move(results), secs);
  } catch (const UsageError& e) {
    std::cerr << "lgcy " << name << ": " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report = make_report(name, in.canonical, Json(), secs);
    report.erase("results");
    report["error"] = error_to_json(e);
    status = 1;
  } catch (const Json::exception& e) {
    std::cerr << "lgcy " << name << ": malformed JSON input: " << e.what() << "\n";
    return 2;
  }

  const std::string text = report.dump(2) + "\n";
  if (name != "corpus") std::cout << text;
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out);
    if (!out) {
      std::cerr << "lgcy: cannot write " << o.json_out << "\n";
      return 2;
    }
    out << text;
  }
  return status;
}
