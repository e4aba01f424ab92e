#pragma once

#include <string>
#include <vector>

#include "ttg/backend.hpp"
#include "ttg/json_io.hpp"

namespace ttg::cli {

struct RunConfig {
  std::string backend = "valrank2";
  std::vector<unsigned long> T{2, 3};
  std::string window = "-8,8";
  std::string out;
  std::string object;
  std::string poset_file;
  std::string assembly_file;
  int height = 2;
  int cases = 200;
  bool dot = false;
  bool force = false;
};

/// Collects checks; every check carries the property it certifies.
class Report {
public:
  Report(std::string command, const Backend* B);
  void check(json c, bool pass);
  void check(const IsoCertificate& c, const std::string& where = {});
  void check(const CheckResult& c);
  void set(const std::string& key, json v) { body_[key] = std::move(v); }
  void seed(unsigned s) { body_["scope"]["seed"] = s; }
  bool ok() const { return ok_; }
  json finish() const;

private:
  json body_;
  json checks_ = json::array();
  bool ok_ = true;
};

Backend make_backend(const RunConfig& cfg);
/// The --object argument: a complex JSON file or a library name; the unit when empty.
Complex load_object(const RunConfig& cfg, const Backend& B);
AssemblyData load_assembly(const RunConfig& cfg, const Backend& B);

/// The identity-component assembly passes; on rank 2 the curated mutants fail by name.
void torus_checks(Report& r, const TorusSample& T);

/// Runs one verify suite into the report; throws Error("InputError") for unknown names.
void run_suite(const std::string& suite, const Backend& B, const RunConfig& cfg, Report& r);
const std::vector<std::string>& suite_names();

}  // namespace ttg::cli
