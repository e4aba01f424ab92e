#include "report.hpp"

#include <filesystem>

#include "ttg/error.hpp"
#include "ttg/library.hpp"

namespace ttg::cli {

Report::Report(std::string command, const Backend* B) {
  body_["command"] = std::move(command);
  json scope;
  if (B) {
    scope["backend"] = B->name();
    scope["summary"] = B->scope();
    if (B->kind() == Backend::Kind::Zint) scope["truncation"] = B->truncation().listed;
  }
  auto [lo, hi] = window();
  scope["window"] = {lo, hi};
  body_["scope"] = scope;
}

void Report::check(json c, bool pass) {
  c["pass"] = pass;
  ok_ = ok_ && pass;
  checks_.push_back(std::move(c));
}

void Report::check(const IsoCertificate& c, const std::string& where) {
  json j = to_json(c);
  if (!where.empty()) j["where"] = where;
  // Forced runs past a failed hypothesis report the comparison as data.
  check(j, c.holds || !c.hypothesis);
}

void Report::check(const CheckResult& c) { check({{"property", c.property}, {"where", c.where}}, c.pass); }

json Report::finish() const {
  json r = body_;
  r["checks"] = checks_;
  std::size_t failed = 0;
  for (const auto& c : checks_) failed += !c["pass"].get<bool>();
  r["summary"] = {{"checks", checks_.size()}, {"failed", failed}, {"pass", ok_}};
  return r;
}

Backend make_backend(const RunConfig& cfg) {
  if (cfg.backend == "zint") {
    if (cfg.T.empty()) fail("InputError", "zint needs a nonempty truncation set --T");
    return Backend::zint(PrimeSet::of(cfg.T));
  }
  if (cfg.backend == "valrank2") return Backend::valrank2();
  if (cfg.backend == "formal") {
    if (!cfg.poset_file.empty()) return Backend::formal(poset_from_json(load_json(cfg.poset_file)), "formal");
    return Backend::chromatic(cfg.height);
  }
  fail("InputError", "unknown backend '" + cfg.backend + "'");
}

Complex load_object(const RunConfig& cfg, const Backend& B) {
  if (cfg.object.empty()) return B.unit();
  if (std::filesystem::exists(cfg.object)) return complex_from_json(load_json(cfg.object));
  const auto& o = library_object(cfg.object);
  if (o.backend != B.name()) fail("InputError", "'" + o.name + "' lives on the " + o.backend + " backend");
  return o.X;
}

AssemblyData load_assembly(const RunConfig& cfg, const Backend& B) {
  if (cfg.assembly_file.empty()) return finest(B.poset());
  return assembly_from_json(B.poset(), load_json(cfg.assembly_file));
}

}  // namespace ttg::cli
