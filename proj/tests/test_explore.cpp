#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "rrmono/analysis.hpp"
#include "rrmono/errors.hpp"
#include "rrmono/explore.hpp"

using namespace rrmono;
using rrmono::testing::gs;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  return std::string((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Exhaustive, Family::Neighbor, Family::Middle,
                   Family::ThreeGen, Family::RandomSample})
    CHECK(family_from_name(to_string(f)) == f);
  CHECK_THROWS_AS(family_from_name("bogus"), InputError);
}

TEST_CASE("exhaustive enumeration is the full power set of the interior") {
  ExploreJob job;
  job.family = Family::Exhaustive;
  job.d = 5;
  std::vector<GeneratorSet> fam = enumerate_family(job);
  REQUIRE(fam.size() == 16);  // 2^(5-1)
  CHECK(fam.front().A == std::vector<Int>{0, 5});
  CHECK(fam[1].A == std::vector<Int>{0, 1, 5});
  CHECK(fam.back().A == std::vector<Int>{0, 1, 2, 3, 4, 5});

  job.d = 13;
  CHECK_THROWS_AS(enumerate_family(job), InputError);
}

TEST_CASE("neighbor enumeration pins 1 in every A") {
  ExploreJob job;
  job.family = Family::Neighbor;
  job.d = 5;
  std::vector<GeneratorSet> fam = enumerate_family(job);
  REQUIRE(fam.size() == 8);  // 2^(5-2) subsets of {2,3,4}
  for (const GeneratorSet& E : fam) {
    CHECK(E.A[0] == 0);
    CHECK(E.A[1] == 1);
    CHECK(E.A.back() == 5);
  }
  CHECK(fam.front().A == std::vector<Int>{0, 1, 5});
}

TEST_CASE("middle enumeration walks (a, b) lexicographically") {
  ExploreJob job;
  job.family = Family::Middle;
  job.d = 5;
  std::vector<GeneratorSet> fam = enumerate_family(job);
  REQUIRE(fam.size() == 10);  // pairs 1 <= a <= b <= 4
  CHECK(fam[0].A == std::vector<Int>{0, 1, 5});          // (1,1)
  CHECK(fam[1].A == std::vector<Int>{0, 1, 2, 5});       // (1,2)
  CHECK(fam[4].A == std::vector<Int>{0, 2, 5});          // (2,2)
  CHECK(fam.back().A == std::vector<Int>{0, 4, 5});      // (4,4)
}

TEST_CASE("three-generator enumeration walks a ascending") {
  ExploreJob job;
  job.family = Family::ThreeGen;
  job.d = 6;
  std::vector<GeneratorSet> fam = enumerate_family(job);
  REQUIRE(fam.size() == 5);
  for (size_t k = 0; k < fam.size(); ++k)
    CHECK(fam[k].A == std::vector<Int>{0, static_cast<Int>(k + 1), 6});
}

TEST_CASE("random enumeration replays its seed") {
  ExploreJob job;
  job.family = Family::RandomSample;
  job.d = 9;
  job.count = 7;
  job.seed = 3;
  std::vector<GeneratorSet> one = enumerate_family(job);
  std::vector<GeneratorSet> two = enumerate_family(job);
  REQUIRE(one.size() == 7);
  for (size_t k = 0; k < one.size(); ++k) CHECK(one[k].A == two[k].A);

  job.seed = 4;
  std::vector<GeneratorSet> other = enumerate_family(job);
  bool all_same = true;
  for (size_t k = 0; k < one.size(); ++k)
    if (one[k].A != other[k].A) all_same = false;
  CHECK_FALSE(all_same);
}

TEST_CASE("theorem checks pass on a healthy report and name their failures") {
  AnalysisReport R = analyze(gs(7, {0, 1, 5, 7}));
  for (const CheckResult& c : theorem_checks(R)) {
    CAPTURE(c.name);
    CHECK(c.pass);
    CHECK(c.detail.empty());
  }

  AnalysisReport broken = R;
  broken.regF = 5;  // violates regF <= regR
  bool found = false;
  for (const CheckResult& c : theorem_checks(broken)) {
    if (c.name == "inequality_chain") {
      found = true;
      CHECK_FALSE(c.pass);
      CHECK(c.detail.find("d=7") != std::string::npos);
    }
  }
  CHECK(found);
}

TEST_CASE("run_job output does not depend on the worker count") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rrmono_explore_test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  auto run_once = [&](const std::string& tag, int jobs) {
    ExploreJob job;
    job.family = Family::Exhaustive;
    job.d = 6;
    job.trials = 4;
    job.seed = 11;
    job.jobs = jobs;
    job.csv_path = (dir / (tag + ".csv")).string();
    job.jsonl_path = (dir / (tag + ".jsonl")).string();
    std::ostringstream log;
    ExploreSummary sum = run_job(job, log);
    CHECK(sum.records == 32);
    CHECK(sum.check_failures == 0);
    CHECK(sum.failures.empty());
    return std::pair<std::string, std::string>{slurp(dir / (tag + ".csv")),
                                               slurp(dir / (tag + ".jsonl"))};
  };

  auto serial = run_once("serial", 1);
  auto pooled = run_once("pooled", 3);
  CHECK(serial.first == pooled.first);
  CHECK(serial.second == pooled.second);

  // the first CSV line is the header with the check columns appended
  CHECK(serial.first.rfind(csv_header() + ",checks_passed,checks_failed,watch\n", 0) == 0);

  // every JSONL line parses and carries the checks array
  std::istringstream lines(serial.second);
  std::string line;
  Int n_lines = 0;
  while (std::getline(lines, line)) {
    ++n_lines;
    nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("checks"));
    CHECK(j.contains("watch"));
    CHECK(j.at("schema") == 1);
  }
  CHECK(n_lines == 32);

  fs::remove_all(dir);
}

TEST_CASE("summary file carries counts and timestamps stay out of records") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rrmono_explore_summary";
  fs::remove_all(dir);
  fs::create_directories(dir);

  ExploreJob job;
  job.family = Family::Middle;
  job.d = 8;
  job.summary_path = (dir / "summary.json").string();
  std::ostringstream log;
  ExploreSummary sum = run_job(job, log);
  CHECK(sum.records == 28);  // pairs 1 <= a <= b <= 7
  CHECK(sum.check_failures == 0);

  nlohmann::json j = nlohmann::json::parse(slurp(dir / "summary.json"));
  CHECK(j.at("schema") == 1);
  CHECK(j.at("family") == "middle");
  CHECK(j.at("records") == 28);
  CHECK(j.at("check_failures") == 0);
  CHECK(j.contains("finished_at"));
  CHECK(j.contains("elapsed_ms"));

  fs::remove_all(dir);
}
