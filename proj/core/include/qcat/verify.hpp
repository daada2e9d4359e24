#pragma once

// Named, seeded property suites over a backend and a Serre subcategory.
// Each trial draws its randomness from (seed, trial index) alone, so a
// failing trial can be replayed in isolation.

#include <cstdint>
#include <string>
#include <vector>

#include "qcat/io.hpp"
#include "qcat/random.hpp"
#include "qcat/serre.hpp"

namespace qcat::verify {

struct Failure {
  std::size_t trial = 0;
  std::string check;
  io::Json data;  ///< objects and morphisms of the failing trial
};

struct SuiteReport {
  std::string suite;
  std::string alias;
  std::string backend;
  std::string serre;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t checks = 0;      ///< assertions evaluated
  std::size_t nontrivial = 0;  ///< trials whose premise was non-vacuous
  std::vector<Failure> failures;
  bool skipped = false;
  std::string skip_reason;
  double wall_ms = 0;

  bool passed() const noexcept { return failures.empty(); }
  bool vacuous() const noexcept { return checks == 0; }
};

struct Options {
  gen::Bounds bounds{};
  /// Draw a fresh Serre subcategory for every trial (the given one is
  /// ignored by suites that support this).
  bool random_serre = false;
  /// Record wall time (it is left out of JSON otherwise, keeping reports
  /// byte-identical across runs).
  bool timing = false;
  /// Keep at most this many failures per report.
  std::size_t max_failures = 20;
};

struct SuiteInfo {
  std::string name;
  std::string alias;
  std::string summary;
};

/// All suites, in run order.
const std::vector<SuiteInfo>& suites();
/// Canonical name for a name or alias; throws UnknownSuite.
const SuiteInfo& find_suite(const std::string& name_or_alias);

/// Throws UnknownSuite, or RequirementUnmet when the backend or the Serre
/// subcategory does not fit the suite.
SuiteReport run_suite(const std::string& name, const SerreSpec& c, std::size_t trials,
                      std::uint64_t seed, const Options& options = {});

/// Every suite; suites whose requirements fail come back with skipped set.
std::vector<SuiteReport> run_all(const SerreSpec& c, std::size_t trials, std::uint64_t seed,
                                 const Options& options = {});

io::Json to_json(const SuiteReport& r, bool timing = false);

/// Every subobject of m; only for prime fields. Returns nothing when more
/// than `cap` subobjects exist.
std::optional<std::vector<SubObj>> all_subobjects(const Obj& m, std::size_t cap);

}  // namespace qcat::verify
