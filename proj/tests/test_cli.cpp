#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rrmono/cli.hpp"
#include "rrmono/report_io.hpp"

using namespace rrmono;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("analyze prints the human report") {
  CliRun r = cli({"analyze", "x^7, x^6*y, x^2*y^5, y^7"});
  CHECK(r.code == 0);
  CHECK(r.err.empty());
  CHECK(r.out.find("r_J              4   (J = (x^7, y^7))") != std::string::npos);
  CHECK(r.out.find("reg R            4") != std::string::npos);
  CHECK(r.out.find("reg F            4") != std::string::npos);
  CHECK(r.out.find("Buchsbaum        no") != std::string::npos);
}

TEST_CASE("analyze --json round-trips") {
  CliRun r = cli({"analyze", "d=7; a=0,1,5,7", "--json", "--max-n", "2"});
  CHECK(r.code == 0);
  AnalysisReport R = report_from_json(nlohmann::json::parse(r.out));
  CHECK(R.r_J == 4);
  CHECK(R.s_star == 4);
  REQUIRE(R.rr_generators.size() == 2);
  CHECK(R.rr_generators[1].n == 2);
}

TEST_CASE("bad input exits 1 with a message on stderr") {
  CliRun r = cli({"analyze", "x^2, y^3"});
  CHECK(r.code == 1);
  CHECK(r.err.find("not generated in a single degree") != std::string::npos);

  CliRun missing = cli({"analyze", "x^2, x*y"});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("not m-primary in scope") != std::string::npos);
}

TEST_CASE("verify reports each internal check") {
  CliRun r = cli({"verify", "d=7; a=0,1,5,7"});
  CHECK(r.code == 0);
  for (const char* check :
       {"triple_regularity_agreement", "inequality_chain", "rr_indices",
        "max_formula_rees", "max_formula_fiber", "index_bounds",
        "closure_chain_stable", "colon_formula_agreement",
        "power_colon_descends", "reduction_colon_identity"})
    CHECK_MESSAGE(r.out.find(std::string("PASS ") + check) != std::string::npos, check);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("rr prints closures and equality verdicts") {
  CliRun n3 = cli({"rr", "d=7; a=0,1,5,7", "--n", "3"});
  CHECK(n3.code == 0);
  CHECK(n3.out.find("closure of I^3 (chain index 1):") != std::string::npos);
  CHECK(n3.out.find("x^17*y^4") != std::string::npos);
  CHECK(n3.out.find("equals I^3: no") != std::string::npos);

  CliRun n4 = cli({"rr", "d=7; a=0,1,5,7", "--n", "4"});
  CHECK(n4.out.find("equals I^4: yes") != std::string::npos);

  CliRun both = cli({"rr", "d=7; a=0,1,5,7", "--n", "2", "--max-n", "3"});
  CHECK(both.code == 1);
  CHECK(both.err.find("choose one of --n and --max-n, not both") != std::string::npos);

  CliRun zero = cli({"rr", "d=7; a=0,1,5,7", "--n", "0"});
  CHECK(zero.code == 1);
  CHECK(zero.err.find("powers start at n = 1") != std::string::npos);
}

TEST_CASE("staircase renders ascii and SVG") {
  CliRun art = cli({"staircase", "d=3; a=0,3", "--n", "1"});
  CHECK(art.code == 0);
  CHECK(art.out.find("I^1 staircase") != std::string::npos);

  std::filesystem::path svg_path =
      std::filesystem::temp_directory_path() / "rrmono_test_staircase.svg";
  std::filesystem::remove(svg_path);
  CliRun svg = cli({"staircase", "d=3; a=0,3", "--n", "1", "--svg", svg_path.string()});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("wrote SVG to ") != std::string::npos);
  std::ifstream in(svg_path);
  std::string contents((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  CHECK(contents.rfind("<svg", 0) == 0);
  std::filesystem::remove(svg_path);
}

TEST_CASE("reduce handles forms, powers, and samples") {
  CliRun rn = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | x^6*y + y^7"});
  CHECK(rn.code == 0);
  CHECK(rn.out.find("reduction number 3") != std::string::npos);

  CliRun at = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7", "--n", "3"});
  CHECK(at.code == 0);
  CHECK(at.out.find("reduces I at n = 3: no") != std::string::npos);

  CliRun capped = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7", "--cap", "3"});
  CHECK(capped.code == 0);
  CHECK(capped.out.find("no reduction number up to cap 3") != std::string::npos);

  CliRun degenerate = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | x^7"});
  CHECK(degenerate.code == 1);
  CHECK(degenerate.err.find("do not form a system of parameters") != std::string::npos);
  CHECK(degenerate.err.find("(forms: x^7 | x^7)") != std::string::npos);

  CliRun noforms = cli({"reduce", "d=7; a=0,1,5,7"});
  CHECK(noforms.code == 1);
  CHECK(noforms.err.find("reduce needs --forms") != std::string::npos);
}

TEST_CASE("reduce --sample is seeded") {
  CliRun s = cli({"reduce", "d=7; a=0,1,5,7", "--sample", "--trials", "25",
                  "--seed", "1", "--json"});
  CHECK(s.code == 0);
  nlohmann::json j = nlohmann::json::parse(s.out);
  CHECK(j.at("trials") == 25);
  CHECK(j.at("histogram").at("3") == 24);
  CHECK(j.at("histogram").at("4") == 1);
  CHECK(j.at("max_r") == 4);
  CHECK(j.at("conjecture_flag") == false);
}

TEST_CASE("field mode validation") {
  CliRun notprime = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7",
                         "--field", "p:4"});
  CHECK(notprime.code == 1);
  CHECK(notprime.err.find("--field value 4 is not prime") != std::string::npos);

  CliRun small = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7",
                      "--field", "p:7"});
  CHECK(small.code == 1);
  CHECK(small.err.find("too small: need p > d*(cap+1) = 42") != std::string::npos);

  CliRun junk = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7",
                     "--field", "weird"});
  CHECK(junk.code == 1);
  CHECK(junk.err.find("--field expects q or p:<prime>") != std::string::npos);

  CliRun good = cli({"reduce", "d=7; a=0,1,5,7", "--forms", "x^7 | y^7",
                     "--field", "p:1000003"});
  CHECK(good.code == 0);
  CHECK(good.out.find("reduction number 4") != std::string::npos);
}

TEST_CASE("explore subcommand writes deterministic records") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "rrmono_cli_explore";
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto run_once = [&](const std::string& tag) {
    fs::path csv = dir / (tag + ".csv");
    CliRun r = cli({"explore", "--family", "exhaustive", "--d", "4", "--csv",
                    csv.string(), "--jobs", "2"});
    CHECK(r.code == 0);
    std::ifstream in(csv);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
  };
  std::string first = run_once("a");
  std::string second = run_once("b");
  CHECK(first == second);
  CHECK(first.find("checks_passed,checks_failed,watch") != std::string::npos);
  // 2^(4-1) = 8 ideals plus the header line
  CHECK(std::count(first.begin(), first.end(), '\n') == 9);
  fs::remove_all(dir);
}

TEST_CASE("usage errors and help") {
  CliRun none = cli({});
  CHECK(none.code == 1);

  CliRun help = cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("analyze") != std::string::npos);

  CliRun badflag = cli({"analyze", "d=3; a=0,3", "--nonsense"});
  CHECK(badflag.code == 1);
}
