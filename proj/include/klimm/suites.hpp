#pragma once

// Verification sweeps and counterexample searches, with their reports.

#include "klimm/io.hpp"
#include "klimm/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace klimm {

/// Rejected run parameters (bounds, unknown suite names).
class ConfigError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Zero means "use the suite's default".
struct SuiteConfig {
  int max_n = 0;
  int max_m = 0;
  int k = 0;
  int samples = 0;
  std::uint64_t seed = 1;
  std::filesystem::path kl_cache;
  Execution execution = Execution::parallel;
};

inline constexpr int kMaxN = 7;

struct SuiteReport {
  std::string suite;
  Json parameters = Json::object();
  std::size_t cases_run = 0;
  std::size_t cases_passed = 0;
  std::size_t precondition_errors = 0;
  std::vector<Json> counterexamples;
  std::vector<std::string> notes;

  bool ok() const { return counterexamples.empty() && precondition_errors == 0; }
  Json to_json() const;
  std::string to_csv() const;
};

/// Per-case tally; suites merge these in case order.
struct CaseOutcome {
  std::size_t run = 0;
  std::size_t passed = 0;
  std::size_t precondition_errors = 0;
  std::vector<Json> counterexamples;
  std::vector<std::string> notes;

  void pass() { ++run, ++passed; }
  void fail(Json witness) {
    ++run;
    counterexamples.push_back(std::move(witness));
  }
  void check(bool ok, const std::function<Json()> &witness) { ok ? pass() : fail(witness()); }
};

std::vector<std::string> suite_names();
std::vector<std::string> search_names();

/// Canonical suite or search name for a name or alias; throws ConfigError.
std::string canonical_suite(const std::string &name);
std::string canonical_search(const std::string &name);

SuiteReport run_suite(const std::string &name, const SuiteConfig &config);
SuiteReport run_search(const std::string &name, const SuiteConfig &config);

/// Witness serialization shared by suites and searches.
Json witness(const Permutation &v, const Multiset &rows, const Multiset &cols,
             const RationalMatrix &m);

} // namespace klimm
