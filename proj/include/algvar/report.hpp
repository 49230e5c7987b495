#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "algvar/catalog.hpp"
#include "algvar/graph.hpp"
#include "algvar/groebner.hpp"

namespace algvar {

/// Every random choice of a run derives from `seed`.
struct RunConfig {
  std::uint64_t seed = 1;
  int samples = 20;            // parameter points per family
  int stability_samples = 200;  // Borel stability points per separating set
  int borel_per_sample = 5;
  int target_samples = 10;
  GroebnerOptions groebner{};
  std::string data_dir;
  std::string out_dir;
  int threads = 0;  // 0: hardware concurrency
  int verbosity = 0;

  void validate() const;
  nlohmann::json to_json() const;
  /// FNV-1a of the canonical JSON of the config, as 16 hex digits.
  std::string hash() const;
};

/// Seed for one row, independent of the order rows are processed in.
std::uint64_t row_seed(std::uint64_t seed, const std::string& id);

struct RowResult {
  int table = 0;
  std::string id;
  bool pass = false;
  nlohmann::json detail;
};

struct TableResult {
  int table = 0;
  std::vector<RowResult> rows;
  int passed() const;
  bool pass() const { return passed() == static_cast<int>(rows.size()); }
};

/// Runs `count` independent jobs on a small thread pool; results keep job order.
void parallel_for(int count, int threads, const std::function<void(int)>& job);

/// Verifies one of Tables 1..8. Table 7 includes the parameter-limit witness.
TableResult verify_table(const Catalog& cat, int table, const RunConfig& config);

/// Tables 5 and 7, the parameter limits and a zero witness out of every Table 4
/// row. With `trust`, nothing is checked and every witness counts as verified.
std::vector<CheckedWitness> checked_witnesses(const Catalog& cat, const RunConfig& config, bool trust = false);

nlohmann::json report_json(const std::string& command, const RunConfig& config, nlohmann::json body);

}  // namespace algvar
