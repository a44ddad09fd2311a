#include "lgcy/grobner.hpp"

#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <set>

#include "lgcy/json_io.hpp"

namespace lgcy {

namespace {

using Accumulator = std::map<Monomial, Rational, GrevlexGreater>;

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading().coeff;
  return p.scaled(inv);
}

// h -= c * m * g
void subtract_multiple(Accumulator& h, const Polynomial& g, const Monomial& m, const Rational& c) {
  for (const auto& t : g.terms()) {
    Monomial mono = t.mono * m;
    auto [it, inserted] = h.try_emplace(mono, -c * t.coeff);
    if (!inserted) {
      it->second -= c * t.coeff;
      if (sgn(it->second) == 0) h.erase(it);
    }
  }
}

template <class FindDivisor>
Polynomial reduce_with(const Polynomial& p, std::span<const Polynomial> divisors, FindDivisor&& find) {
  Accumulator h;
  for (const auto& t : p.terms()) h.emplace(t.mono, t.coeff);
  std::vector<Polynomial::Term> rem;
  while (!h.empty()) {
    auto it = h.begin();
    std::optional<std::size_t> d = find(it->first);
    if (!d) {
      rem.push_back({it->first, it->second});
      h.erase(it);
      continue;
    }
    const Polynomial& g = divisors[*d];
    Monomial quotient = it->first / g.leading().mono;
    Rational c = it->second / g.leading().coeff;
    subtract_multiple(h, g, quotient, c);
  }
  return Polynomial::from_terms(p.nvars(), std::move(rem));
}

bool is_graded(std::span<const Polynomial> gens) {
  for (const auto& g : gens) {
    for (const auto& t : g.terms())
      if (t.mono.degree() != g.leading().mono.degree()) return false;
  }
  return true;
}

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

struct PairOrder {
  bool operator()(const CriticalPair& a, const CriticalPair& b) const {
    auto o = grevlex(a.lcm, b.lcm);
    if (o != 0) return o < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  }
};

class BuchbergerState {
 public:
  explicit BuchbergerState(std::size_t nvars) : nvars_(nvars) {}

  void insert(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.leading().mono;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<CriticalPair> candidates;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) candidates.push_back({g, hi, Monomial::lcm(polys_[g].leading().mono, lh)});

    // Drop pairs whose lcm is properly divisible by another candidate lcm.
    std::vector<CriticalPair> unblocked;
    for (const auto& p : candidates) {
      bool blocked = false;
      for (const auto& q : candidates)
        if (q.lcm != p.lcm && q.lcm.divides(p.lcm)) blocked = true;
      if (!blocked) unblocked.push_back(p);
    }
    // One pair per lcm; a coprime member makes the whole class redundant.
    std::vector<CriticalPair> kept;
    for (std::size_t a = 0; a < unblocked.size(); ++a) {
      bool first = true, any_coprime = false;
      for (std::size_t b = 0; b < unblocked.size(); ++b) {
        if (unblocked[b].lcm != unblocked[a].lcm) continue;
        if (b < a) first = false;
        if (polys_[unblocked[b].i].leading().mono.coprime(lh)) any_coprime = true;
      }
      if (first && !any_coprime) kept.push_back(unblocked[a]);
    }

    std::set<CriticalPair, PairOrder> next;
    for (const auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && Monomial::lcm(polys_[p.i].leading().mono, lh) != p.lcm &&
                  Monomial::lcm(polys_[p.j].leading().mono, lh) != p.lcm;
      if (!drop) next.insert(p);
    }
    for (const auto& p : kept) next.insert(p);
    pairs_ = std::move(next);

    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(polys_[g].leading().mono)) active_[g] = false;
  }

  bool has_pairs() const { return !pairs_.empty(); }

  CriticalPair pop() {
    CriticalPair p = *pairs_.begin();
    pairs_.erase(pairs_.begin());
    return p;
  }

  const Polynomial& poly(std::size_t i) const { return polys_[i]; }

  Polynomial reduce(const Polynomial& p) const {
    std::vector<std::size_t> live;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) live.push_back(i);
    return reduce_with(p, polys_, [&](const Monomial& m) -> std::optional<std::size_t> {
      for (std::size_t i : live)
        if (polys_[i].leading().mono.divides(m)) return i;
      return std::nullopt;
    });
  }

  std::vector<Polynomial> active() const {
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(polys_[i]);
    return out;
  }

 private:
  std::size_t nvars_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::set<CriticalPair, PairOrder> pairs_;
};

std::vector<Polynomial> interreduce(std::vector<Polynomial> basis) {
  // Drop generators whose leading monomial is divisible by another one.
  std::sort(basis.begin(), basis.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex(a.leading().mono, b.leading().mono) < 0; });
  std::vector<Polynomial> minimal;
  for (const auto& g : basis) {
    bool redundant = false;
    for (const auto& m : minimal)
      if (m.leading().mono.divides(g.leading().mono)) redundant = true;
    if (!redundant) minimal.push_back(g);
  }
  std::vector<Polynomial> reduced;
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Polynomial> others;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) others.push_back(minimal[l]);
    const auto& g = minimal[k];
    Polynomial tail = g - Polynomial::monomial(g.leading().mono, g.leading().coeff);
    Polynomial r = Polynomial::monomial(g.leading().mono, g.leading().coeff) + normal_form(tail, others);
    reduced.push_back(make_monic(r));
  }
  return reduced;
}

}  // namespace

GroebnerBasis::GroebnerBasis(std::size_t nvars, std::vector<Polynomial> generators, bool ideal_is_graded)
    : nvars_(nvars), gens_(std::move(generators)), graded_(ideal_is_graded) {
  for (const auto& g : gens_) leads_.push_back(g.leading().mono);
}

std::optional<std::size_t> GroebnerBasis::find_divisor(const Monomial& m) const {
  for (std::size_t i = 0; i < leads_.size(); ++i)
    if (leads_[i].divides(m)) return i;
  return std::nullopt;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  const Monomial& lf = f.leading().mono;
  const Monomial& lg = g.leading().mono;
  Monomial l = Monomial::lcm(lf, lg);
  return f.times(l / lf, 1 / f.leading().coeff) - g.times(l / lg, 1 / g.leading().coeff);
}

Polynomial normal_form(const Polynomial& p, std::span<const Polynomial> divisors) {
  return reduce_with(p, divisors, [&](const Monomial& m) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < divisors.size(); ++i)
      if (divisors[i].leading().mono.divides(m)) return i;
    return std::nullopt;
  });
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& g) {
  return reduce_with(p, g.generators(), [&](const Monomial& m) { return g.find_divisor(m); });
}

GroebnerBasis buchberger(std::span<const Polynomial> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "empty generator list");
  const std::size_t n = generators.front().nvars();
  const bool graded = is_graded(generators);
  BuchbergerState state(n);
  std::vector<Polynomial> input;
  for (const auto& g : generators) {
    if (g.nvars() != n) throw Error(ErrorCode::DimensionMismatch, "generators over different variable counts");
    if (!g.is_zero()) input.push_back(make_monic(g));
  }
  if (input.empty()) throw Error(ErrorCode::InvalidArgument, "all generators are zero");
  // Seed in ascending leading-monomial order for reproducibility.
  std::sort(input.begin(), input.end(),
            [](const Polynomial& a, const Polynomial& b) { return grevlex(a.leading().mono, b.leading().mono) < 0; });
  for (auto& g : input) {
    Polynomial r = state.reduce(g);
    if (!r.is_zero()) state.insert(make_monic(r));
  }
  while (state.has_pairs()) {
    CriticalPair p = state.pop();
    Polynomial s = s_polynomial(state.poly(p.i), state.poly(p.j));
    Polynomial r = state.reduce(s);
    if (!r.is_zero()) state.insert(make_monic(r));
  }
  return GroebnerBasis(n, interreduce(state.active()), graded);
}

bool satisfies_buchberger_criterion(const GroebnerBasis& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!normal_form(s_polynomial(gens[i], gens[j]), g).is_zero()) return false;
  return true;
}

std::vector<std::size_t> missing_pure_powers(const GroebnerBasis& g) {
  std::vector<std::size_t> missing;
  for (std::size_t v = 0; v < g.nvars(); ++v) {
    bool found = false;
    for (const auto& m : g.leading_monomials())
      if (m[v] > 0 && m[v] == m.degree()) found = true;
    if (!found) missing.push_back(v);
  }
  return missing;
}

std::optional<StandardMonomialBasis> standard_monomials(const GroebnerBasis& g) {
  if (!missing_pure_powers(g).empty()) return std::nullopt;
  // Breadth-first closure from 1; the set is an order ideal.
  StandardMonomialBasis basis;
  std::vector<Monomial> frontier{Monomial(g.nvars())};
  std::unordered_map<Monomial, bool, MonomialHash> seen;
  seen.emplace(frontier.front(), true);
  std::vector<Monomial> all;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& m : frontier) {
      if (g.find_divisor(m)) continue;
      all.push_back(m);
      for (std::size_t v = 0; v < g.nvars(); ++v) {
        Monomial up = m * Monomial::variable(g.nvars(), v);
        if (seen.emplace(up, true).second) next.push_back(up);
      }
    }
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) < 0; });
  basis.monomials = std::move(all);
  for (std::size_t k = 0; k < basis.monomials.size(); ++k) {
    basis.index.emplace(basis.monomials[k], k);
    basis.by_degree[basis.monomials[k].degree()].push_back(k);
  }
  return basis;
}

GroebnerBasis buchberger_cached(std::span<const Polynomial> generators) {
  const char* dir = std::getenv("LGCY_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return buchberger(generators);
  Json key;
  key["order"] = "grevlex";
  key["generators"] = Json::array();
  for (const auto& g : generators) key["generators"].push_back(polynomial_to_json(g));
  const std::string canonical = key.dump();
  std::filesystem::path path = std::filesystem::path(dir) / ("gb-" + content_hash(canonical) + ".json");
  if (std::ifstream in(path); in) {
    try {
      Json cached = Json::parse(in);
      if (cached.at("key").dump() == canonical) {
        std::vector<Polynomial> gens;
        for (const auto& p : cached.at("basis")) gens.push_back(polynomial_from_json(p));
        return GroebnerBasis(generators.front().nvars(), std::move(gens), cached.at("graded").get<bool>());
      }
    } catch (const std::exception&) {
      // Corrupt entry: recompute and overwrite.
    }
  }
  GroebnerBasis gb = buchberger(generators);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  Json entry;
  entry["key"] = key;
  entry["graded"] = gb.ideal_is_graded();
  entry["basis"] = Json::array();
  for (const auto& g : gb.generators()) entry["basis"].push_back(polynomial_to_json(g));
  if (std::ofstream out(path); out) out << entry.dump(1) << '\n';
  return gb;
}

}  // namespace lgcy
