#include <random>

#include "report.hpp"
#include "ttg/error.hpp"
#include "ttg/library.hpp"

namespace ttg::cli {

namespace {

std::vector<LibraryObject> objects(const Backend& B, Report& r) {
  std::vector<LibraryObject> in;
  json skipped = json::array();
  for (auto& o : library(B.name())) {
    if (B.kind() == Backend::Kind::Zint && !o.needs.subset_of(B.truncation())) skipped.push_back(o.name);
    else in.push_back(o);
  }
  if (!skipped.empty()) r.set("out_of_scope", skipped);
  return in;
}

std::string region_label(const BalmerPoset& P, const std::set<int>& V) {
  std::string s = "{";
  for (int v : V) s += (s.size() > 1 ? "," : "") + P.id(v);
  return s + "}";
}

std::vector<std::set<int>> regions(const BalmerPoset& P) {
  std::vector<std::set<int>> r;
  for (unsigned mask = 0; mask < (1u << P.size()); ++mask) {
    std::set<int> V;
    for (int i = 0; i < static_cast<int>(P.size()); ++i)
      if ((mask >> i) & 1u) V.insert(i);
    if (is_spec_closed(P, V)) r.push_back(V);
  }
  return r;
}

using Splitter = IsoCertificate (*)(const Backend&, const std::set<int>&, const Complex&, bool);

// A certificate when the hypothesis holds (or --force), otherwise a checked refusal.
void split_case(Report& r, Splitter f, const Backend& B, const std::set<int>& V, const Complex& X, bool force,
                const std::string& where) {
  try {
    r.check(f(B, V, X, force), where);
  } catch (const Error& e) {
    if (e.kind() != "HypothesisFailed") throw;
    IsoCertificate c = f(B, V, X, true);
    r.check({{"property", "split_refused_when_hypothesis_fails"}, {"where", where}}, !c.hypothesis);
  }
}

void fracture(const Backend& B, const RunConfig& cfg, Report& r) {
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  r.check(reconstruct_limit(adelic_unit(C), B.unit()).cert, "unit");
  for (auto& o : objects(B, r)) r.check(reconstruct_limit(adelic_tensor(C, o.X), o.X).cert, o.name);
}

void functors(const Backend& B, const RunConfig& cfg, Report& r) {
  const auto& P = *B.poset();
  json supports = json::object();
  auto objs = objects(B, r);
  std::vector<Complex> family;
  for (auto& o : objs) {
    family.push_back(o.X);
    json s = json::array();
    for (int p : support(B, o.X)) s.push_back(P.id(p));
    supports[o.name] = s;
    for (int p = 0; p < static_cast<int>(P.size()); ++p) {
      std::string where = o.name + " at " + P.id(p);
      for (auto& c : mgm_check(B, below(B, p), o.X)) r.check(c, where);
      for (auto& c : triangles(B, below(B, p), o.X)) r.check(c, where);
    }
    for (auto& V : regions(P)) {
      std::string where = o.name + " over " + region_label(P, V);
      split_case(r, split_gamma, B, V, o.X, cfg.force, where);
      split_case(r, split_l, B, V, o.X, cfg.force, where);
    }
    for (int i = 0; i <= P.d(); ++i)
      for (auto& c : epointy(B, i, o.X)) r.check(c, o.name + " i=" + std::to_string(i));
  }
  for (auto& V : regions(P)) r.check(gamma_product(B, V, family), "library over " + region_label(P, V));
  r.set("support", supports);
}

void adelic(const Backend& B, const RunConfig& cfg, Report& r) {
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  json rings = json::object();
  for (auto& [A, f] : C.factors) rings[subset_label(A)] = ring_name(C.ring(A));
  r.set("rings", rings);
  for (auto& o : objects(B, r)) {
    CubeDiagram D = adelic_tensor(C, o.X);
    r.check({{"property", "adelic_diagram_commutes"}, {"where", o.name}}, D.commutes());
    r.check({{"property", "structure_maps_extend_to_isos"}, {"where", o.name}}, is_adelic_object(D));
  }
}

void torsion(const Backend& B, const RunConfig& cfg, Report& r) {
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  for (auto& o : objects(B, r)) {
    TorsionModel T = tors(C, o.X);
    for (auto c : validate(B, T.diagram).all()) {
      c.where = o.name + " " + c.where;
      r.check(c);
    }
    r.check(reconstruct(T, o.X).cert, o.name);
  }
}

void vertex(const Backend& B, const RunConfig& cfg, Report& r) {
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  IndexCategory I = build_I(C.d);
  for (auto& v : I.vertices)
    if (!v.dummy)
      for (auto& c : one_tors_vertex(C, v.set, v.k)) r.check(c);
}

std::vector<unsigned long> primes_of(const Backend& B) { return B.truncation().listed; }

void mgm(const Backend& B, const RunConfig& cfg, Report& r) {
  if (B.kind() != Backend::Kind::Zint) {
    const auto& P = *B.poset();
    for (auto& o : objects(B, r))
      for (int p = 0; p < static_cast<int>(P.size()); ++p)
        for (auto& c : mgm_check(B, below(B, p), o.X)) r.check(c, o.name + " at " + P.id(p));
    return;
  }
  unsigned s = seed_from_env();
  r.seed(s);
  std::mt19937 rng(s);
  auto ps = primes_of(B);
  for (int k = 0; k < cfg.cases; ++k) {
    Complex X = random_complex(rng, World::integers(), ps);
    unsigned long p = ps[k % ps.size()];
    std::string where = "case " + std::to_string(k) + " at " + std::to_string(p);
    for (auto& c : mgm_check(B, below(B, B.element("(" + std::to_string(p) + ")")), X)) r.check(c, where);
  }
}

void splitting(const Backend& B, const RunConfig& cfg, Report& r) {
  const auto& P = *B.poset();
  if (B.kind() != Backend::Kind::Zint) {
    for (auto& o : objects(B, r))
      for (auto& V : regions(P)) {
        std::string where = o.name + " over " + region_label(P, V);
        split_case(r, split_gamma, B, V, o.X, cfg.force, where);
        split_case(r, split_l, B, V, o.X, cfg.force, where);
      }
    return;
  }
  unsigned s = seed_from_env();
  r.seed(s);
  std::mt19937 rng(s);
  auto all = regions(P);
  const World W = World::zs(B.truncation());
  int held = 0, refused = 0;
  for (int k = 0; held < cfg.cases && k < 20 * cfg.cases; ++k) {
    Complex X = random_complex(rng, W, primes_of(B));
    const auto& V = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    std::string where = "case " + std::to_string(k) + " over " + region_label(P, V);
    for (Splitter f : {static_cast<Splitter>(split_gamma), static_cast<Splitter>(split_l)}) {
      try {
        r.check(f(B, V, X, cfg.force), where);
        ++held;
      } catch (const Error& e) {
        if (e.kind() != "HypothesisFailed") throw;
        ++refused;
        r.check({{"property", "split_refused_when_hypothesis_fails"}, {"where", where}}, !f(B, V, X, true).hypothesis);
      }
    }
  }
  r.set("splitting", {{"hypothesis_held", held}, {"refused", refused}});
}

void shape(const Backend&, const RunConfig& cfg, Report& r) {
  const std::size_t drawn[] = {0, 3, 8, 19};
  for (int d = 1; d <= 6; ++d) {
    std::size_t n = build_Iminus(d).vertices.size();
    json c{{"property", "iminus_count_matches_formula"}, {"where", "d=" + std::to_string(d)}, {"objects", n}};
    r.check(c, n == iminus_count_formula(d) && (d > 3 || n == drawn[d]));
  }
  for (int d = 1; d <= 4; ++d)
    r.check({{"property", "index_category_is_thin"}, {"where", "I(" + std::to_string(d) + ")"}}, build_I(d).is_thin());
  unsigned s = seed_from_env();
  r.seed(s);
  std::mt19937 rng(s);
  int bad = 0;
  for (int k = 0; k < cfg.cases; ++k) {
    int d = 1 + k % 3;
    CubeDiagram D = random_cube(rng, d);
    int j = std::uniform_int_distribution<int>(0, d)(rng);
    if (!fib_cof_identity(D, j)) ++bad;
  }
  r.check({{"property", "fib_of_cof_is_identity"}, {"where", std::to_string(cfg.cases) + " random cubes"}, {"failures", bad}},
          bad == 0);
}

void oracle(const Backend&, const RunConfig&, Report& r) {
  for (auto& o : oracle_suite())
    if (o.applicable) r.check(to_json(o), o.pass());
}

void assembly(const Backend&, const RunConfig&, Report& r) {
  torus_checks(r, torus_poset(1, 2));
  torus_checks(r, torus_poset(2, 2));
}

using Suite = void (*)(const Backend&, const RunConfig&, Report&);
struct Entry {
  std::string name;
  Suite run;
  bool exact;  // needs a homotopy-computing backend
};

const std::vector<Entry>& suites() {
  static const std::vector<Entry> s{
      {"fracture", fracture, true}, {"functors", functors, true}, {"adelic", adelic, true},
      {"tors", torsion, true},      {"vertex", vertex, true},     {"mgm", mgm, true},
      {"splitting", splitting, true}, {"shape", shape, false},  {"oracle", oracle, false},
      {"assembly", assembly, false},
  };
  return s;
}

}  // namespace

void torus_checks(Report& r, const TorusSample& T) {
  r.check({{"property", "identity_component_map_is_assembly"}, {"where", T.conn.scope}}, true);
  if (T.poset->d() < 2 || T.annihilator.count("C2") == 0) return;
  for (auto& m : torus_mutants(T)) {
    std::string got = "accepted";
    try {
      validate_assembly(T.poset, m.sub, m.alpha);
    } catch (const Error& e) {
      got = e.kind();
    }
    r.check({{"property", "mutant_rejected_with_named_error"}, {"where", m.name}, {"expected", m.expected}, {"got", got}},
            got == m.expected);
  }
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v{"all"};
    for (auto& e : suites()) v.push_back(e.name);
    return v;
  }();
  return n;
}

void run_suite(const std::string& suite, const Backend& B, const RunConfig& cfg, Report& r) {
  bool exact = B.kind() != Backend::Kind::Formal;
  json ran = json::array();
  for (auto& e : suites()) {
    if (suite != "all" && suite != e.name) continue;
    if (e.exact && !exact) {
      if (suite == "all") continue;
      fail("InputError", "suite '" + e.name + "' needs the zint or valrank2 backend");
    }
    e.run(B, cfg, r);
    ran.push_back(e.name);
  }
  if (ran.empty()) fail("InputError", "unknown suite '" + suite + "'");
  r.set("suites", ran);
}

}  // namespace ttg::cli
