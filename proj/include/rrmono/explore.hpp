#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rrmono/report_io.hpp"

namespace rrmono {

enum class Family { Exhaustive, Neighbor, Middle, ThreeGen, RandomSample };

const char* to_string(Family f);
Family family_from_name(const std::string& name);

struct ExploreJob {
  Family family = Family::Exhaustive;
  Int d = 5;
  Int count = 100;         // RandomSample only: number of ideals drawn
  std::uint64_t seed = 1;  // drives RandomSample and per-ideal reduction sampling
  Int trials = 0;          // reduction samples per ideal; 0 disables the conjecture watch
  bool br_sweep = false;   // follow flagged cases with the small-coefficient pair sweep
  std::string csv_path;    // empty = no CSV output
  std::string jsonl_path;  // empty = no JSON-lines output
  std::string summary_path;  // empty = no summary file (summary still returned)
  int jobs = 0;            // worker threads, 0 = hardware concurrency
};

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;  // failure explanation, empty on pass

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct ExploreRecord {
  AnalysisReport report;
  std::vector<CheckResult> checks;
  bool watch = false;  // no sampled reduction reached s*; lower bound only
  std::string watch_note;
};

struct ExploreSummary {
  Int records = 0;
  Int check_failures = 0;
  std::vector<std::string> failures;
  std::vector<std::string> conjecture_watch;
};

// Canonical enumeration order: exhaustive and neighbor walk interior-bit masks
// ascending, middle walks (a, b) lexicographically, three-generator walks a
// ascending, random replays the seeded stream.  Records are always emitted in
// this order no matter how the worker pool schedules them.
std::vector<GeneratorSet> enumerate_family(const ExploreJob& job);

// Named regression checks recomputed from a finished report.  Class-specific
// ones pass vacuously when the report's class list lacks the class.
std::vector<CheckResult> theorem_checks(const AnalysisReport& R);

// Runs the family, appends records to the configured outputs as they are
// sealed, and returns (and optionally writes) the summary.  Timestamps appear
// only in the summary so record streams stay byte-identical between runs.
ExploreSummary run_job(const ExploreJob& job, std::ostream& log);

}  // namespace rrmono
