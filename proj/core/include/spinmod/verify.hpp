#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "spinmod/moduli.hpp"

namespace spinmod {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::vector<std::string> witnesses;  // capped at kMaxWitnesses
  double seconds = 0;

  static constexpr std::size_t kMaxWitnesses = 20;
  void fail(std::string witness);
};

struct RunReport {
  std::string command;
  nlohmann::json inputs;
  nlohmann::json counts = nlohmann::json::object();
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  nlohmann::json to_json() const;
};

enum class Suite { counts, posets, functoriality, refine, all };
Suite parse_suite(const std::string& s);
const char* to_string(Suite s);

struct VerifyOptions {
  int g = 0;
  int n = 0;
  Suite suite = Suite::all;
  Budget budget;
  int chains = 1000;    // random contraction chains
  int families = 100;   // fuzzed family descriptors
  std::uint64_t seed = 20261019;
  // Run the direct generator cross-check when 3g - 3 + n is at most this.
  int direct_max_edges = 6;
};

RunReport run_verify(const VerifyOptions& opt);

// Individual suites, appending to the report.
void verify_counts(const VerifyOptions& opt, RunReport& r);
void verify_posets(const VerifyOptions& opt, RunReport& r);
void verify_functoriality(const VerifyOptions& opt, RunReport& r);
void verify_refine(const VerifyOptions& opt, RunReport& r);

}  // namespace spinmod
