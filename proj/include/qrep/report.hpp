#pragma once

// Structured reports over the engine: orbit catalogs, Hasse diagrams
// and verification suites, rendered as JSON, DOT or plain tables. All
// polynomial coefficients are serialized as exact rational strings.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qrep/checks.hpp"
#include "qrep/engine.hpp"

namespace qrep {

struct JobConfig {
  DynkinType type = DynkinType::A;
  int rank = 0;
  std::vector<Arrow> arrows;  // 0-based; empty means the default orientation
  Eigen::VectorXi d;
  std::vector<long long> primes;
  Guards guards;
  std::string format = "table";  // json | dot | table
  unsigned long long seed = 1;
  std::string suite = "all";  // main | geometric | bongartz | riedtmann | all
};

Quiver quiver_from(const JobConfig& config);
EngineOptions engine_options_from(const JobConfig& config);

nlohmann::json laurent_to_json(const Laurent& poly, const std::string& var);

struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteResult {
  std::vector<CheckRecord> checks;
  std::vector<std::string> warnings;
  int guard_skips = 0;

  bool pass() const;
  void add(std::string name, bool ok, std::string detail = "");
  void merge(const SuiteResult& other);
};

SuiteResult run_main_suite(Engine& engine, const OrbitCatalog& cat);
SuiteResult run_geometric_suite(Engine& engine, const OrbitCatalog& cat);
SuiteResult run_bongartz_suite(Engine& engine, const OrbitCatalog& cat);
SuiteResult run_riedtmann_suite(Engine& engine);
SuiteResult run_suite(Engine& engine, const OrbitCatalog& cat, const std::string& name);

nlohmann::json catalog_report(Engine& engine, const JobConfig& config);
nlohmann::json verify_report(const JobConfig& config, const SuiteResult& result);

std::string render_orbits_table(const nlohmann::json& report);
std::string render_verify_table(const nlohmann::json& report);
std::string render_dot(Engine& engine, const JobConfig& config);

}  // namespace qrep
