#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <set>

#include "report.hpp"
#include "ttg/error.hpp"

using namespace ttg;
using namespace ttg::cli;

namespace {

// Error kinds that describe bad input rather than a violated invariant.
const std::set<std::string> kInputErrors{"ParseError",   "InputError",         "UnknownElement", "UnknownObject",
                                         "UnknownPrime", "RangeError",         "WindowExceeded", "DomainError",
                                         "NotSpecClosed", "IncompatibleWorlds", "TruncationTooSmall",
                                         "UnsupportedRegion"};

void apply_window(const std::string& w) {
  auto sep = w.find_first_of(",:");
  if (sep == std::string::npos) fail("InputError", "--window expects lo,hi");
  try {
    set_window(std::stoi(w.substr(0, sep)), std::stoi(w.substr(sep + 1)));
  } catch (const std::logic_error&) {
    fail("InputError", "--window expects two integers, got '" + w + "'");
  }
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out);
  if (!f) fail("InputError", "cannot write '" + cfg.out + "'");
  f << text;
}

int finish(const RunConfig& cfg, const Report& r) {
  emit(cfg, r.finish().dump(2) + "\n");
  return r.ok() ? 0 : 1;
}

int cmd_spectrum(const RunConfig& cfg) {
  Backend B = make_backend(cfg);
  Poset P = cfg.poset_file.empty() ? B.poset() : poset_from_json(load_json(cfg.poset_file));
  if (cfg.dot) {
    emit(cfg, to_dot(*P));
    return 0;
  }
  Report r("spectrum", cfg.poset_file.empty() ? &B : nullptr);
  r.set("poset", to_json(*P));
  json layers = json::object();
  for (int k = 0; k <= P->d(); ++k) {
    json ids = json::array();
    for (int p : P->of_dim(k)) ids.push_back(P->id(p));
    layers[std::to_string(k)] = ids;
  }
  r.set("dimension", P->d());
  r.set("layers", layers);
  r.check({{"property", "poset_is_partial_order_with_dimension"}, {"where", std::to_string(P->size()) + " elements"}},
          true);
  return finish(cfg, r);
}

int cmd_assembly(const RunConfig& cfg, int torus_rank, int samples) {
  if (torus_rank > 0) {
    TorusSample T = torus_poset(torus_rank, samples);
    if (cfg.dot) {
      emit(cfg, to_dot(*T.poset));
      return 0;
    }
    Report r("assembly", nullptr);
    r.set("poset", to_json(*T.poset));
    r.set("assembly", to_json(T.conn));
    torus_checks(r, T);
    return finish(cfg, r);
  }
  if (cfg.poset_file.empty() || cfg.assembly_file.empty())
    fail("InputError", "assembly needs --poset and --assembly, or --torus");
  Poset P = poset_from_json(load_json(cfg.poset_file));
  AssemblyData A = assembly_from_json(P, load_json(cfg.assembly_file));
  Report r("assembly", nullptr);
  r.set("assembly", to_json(A));
  r.check({{"property", "dimension_preserving_order_preserving_retraction"}, {"where", cfg.assembly_file}}, true);
  return finish(cfg, r);
}

int cmd_shape(const RunConfig& cfg, int d, const std::string& index, int from, bool dummies) {
  if (d < 0 || d > 9) fail("InputError", "--d must lie in [0, 9]");
  IndexCategory I;
  if (index == "cube") I = full_cube(d);
  else if (index == "punctured") I = punctured_cube(d);
  else if (index == "iminus") I = build_Iminus(d);
  else if (index == "i") I = build_I(d);
  else if (index == "igeq") I = build_Igeq(d, from);
  else fail("InputError", "unknown index '" + index + "'");
  if (cfg.dot) {
    emit(cfg, to_dot(I, dummies));
    return 0;
  }
  Report r("shape", nullptr);
  r.set("index", index);
  r.set("d", d);
  r.set("objects", I.plain_count());
  r.set("dummies", I.dummy_count());
  r.set("arrows", I.arrows.size());
  json v = json::array();
  for (auto& x : I.vertices)
    if (dummies || !x.dummy) v.push_back(x.label());
  r.set("vertices", v);
  if (index == "iminus")
    r.check({{"property", "iminus_count_matches_formula"}, {"where", "d=" + std::to_string(d)}},
            I.plain_count() == iminus_count_formula(d));
  r.check({{"property", "index_category_is_thin"}, {"where", index}}, I.is_thin());
  return finish(cfg, r);
}

int cmd_adelic(const RunConfig& cfg) {
  Backend B = make_backend(cfg);
  Complex X = load_object(cfg, B);
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  CubeDiagram D = adelic_tensor(C, X);
  if (cfg.dot) {
    emit(cfg, to_dot(D));
    return 0;
  }
  Report r("adelic", &B);
  r.set("object", to_json(X));
  r.set("diagram", to_json(D));
  r.check({{"property", "adelic_diagram_commutes"}}, D.commutes());
  r.check({{"property", "structure_maps_extend_to_isos"}}, is_adelic_object(D));
  r.check(reconstruct_limit(D, X).cert);
  return finish(cfg, r);
}

int cmd_tors(const RunConfig& cfg) {
  Backend B = make_backend(cfg);
  if (B.kind() == Backend::Kind::Formal) {
    Report r("tors", &B);
    json layers = json::array();
    for (auto& c : cousin_report(B, Complex())) layers.push_back(to_json(c));
    r.set("cousin", layers);
    return finish(cfg, r);
  }
  Complex X = load_object(cfg, B);
  AdelicCube C = adelic_cube(B, load_assembly(cfg, B));
  TorsionModel T = tors(C, X);
  if (cfg.dot) {
    emit(cfg, to_dot(T.diagram, true));
    return 0;
  }
  Report r("tors", &B);
  r.set("object", to_json(X));
  r.set("diagram", to_json(T.diagram));
  ValidationReport v = validate(B, T.diagram);
  for (auto& c : v.all()) r.check(c);
  if (v.pass()) r.check(reconstruct(T, X).cert);
  if (cfg.object.empty())
    for (auto& x : T.diagram.index.vertices)
      if (!x.dummy)
        for (auto& c : one_tors_vertex(C, x.set, x.k)) r.check(c);
  json layers = json::array();
  for (auto& c : cousin_report(B, X)) layers.push_back(to_json(c));
  r.set("cousin", layers);
  return finish(cfg, r);
}

int cmd_verify(const RunConfig& cfg, const std::string& suite) {
  Backend B = make_backend(cfg);
  Report r("verify " + suite, &B);
  run_suite(suite, B, cfg, r);
  return finish(cfg, r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ttg: finite tensor-triangulated spectra, adelic cubes and torsion models"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* s, bool backend) {
    if (backend) {
      s->add_option("--backend", cfg.backend, "zint | valrank2 | formal")
          ->check(CLI::IsMember({"zint", "valrank2", "formal"}));
      s->add_option("--T", cfg.T, "truncation primes for zint, e.g. 2,3")->delimiter(',');
      s->add_option("--poset", cfg.poset_file, "poset JSON file (formal backend, or spectrum)");
      s->add_option("--height", cfg.height, "chain length of the chromatic formal backend");
      s->add_option("--object", cfg.object, "complex JSON file or library object name");
      s->add_option("--assembly", cfg.assembly_file, "assembly JSON file over the backend poset");
      s->add_flag("--force", cfg.force, "compute splittings even when the support hypothesis fails");
    }
    s->add_option("--out", cfg.out, "write the report here instead of stdout");
    s->add_option("--window", cfg.window, "degree window lo,hi");
    s->add_flag("--dot", cfg.dot, "emit DOT instead of the JSON report");
  };

  auto* spectrum = app.add_subcommand("spectrum", "inspect a finite spectrum");
  common(spectrum, true);

  int torus_rank = 0, samples = 2;
  auto* assembly = app.add_subcommand("assembly", "validate assembly data");
  common(assembly, false);
  assembly->add_option("--poset", cfg.poset_file, "poset JSON file");
  assembly->add_option("--assembly", cfg.assembly_file, "assembly JSON file");
  assembly->add_option("--torus", torus_rank, "use the sampled torus poset of this rank (1 or 2)");
  assembly->add_option("--samples", samples, "samples per stratum for --torus");

  int d = 2, from = 0;
  std::string index = "cube";
  bool dummies = false;
  auto* shape = app.add_subcommand("shape", "index categories");
  common(shape, false);
  shape->add_option("--d", d, "dimension");
  shape->add_option("--index", index, "cube | punctured | iminus | i | igeq");
  shape->add_option("--from", from, "lowest filtration degree for igeq");
  shape->add_flag("--dummies", dummies, "include dummy vertices");

  auto* adelic = app.add_subcommand("adelic", "adelic cube of an object");
  common(adelic, true);
  auto* tors = app.add_subcommand("tors", "torsion model, validation and round trip");
  common(tors, true);

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "certificate bundles");
  common(verify, true);
  verify->add_option("suite", suite, "all | fracture | functors | adelic | tors | vertex | mgm | splitting | shape | "
                                     "oracle | assembly");
  verify->add_option("--cases", cfg.cases, "randomized cases per suite (seeded by TTG_SEED)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    apply_window(cfg.window);
    if (*spectrum) return cmd_spectrum(cfg);
    if (*assembly) return cmd_assembly(cfg, torus_rank, samples);
    if (*shape) return cmd_shape(cfg, d, index, from, dummies);
    if (*adelic) return cmd_adelic(cfg);
    if (*tors) return cmd_tors(cfg);
    if (*verify) return cmd_verify(cfg, suite);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputErrors.count(e.kind()) ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
