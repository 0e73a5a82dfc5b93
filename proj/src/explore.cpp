#include "rrmono/explore.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "rrmono/errors.hpp"

namespace rrmono {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<Int> mask_to_set(Int d, std::uint64_t mask) {
  std::vector<Int> a{0, d};
  for (Int k = 1; k < d; ++k)
    if (mask >> (k - 1) & 1) a.push_back(k);
  return a;
}

bool in_classes(const AnalysisReport& R, EuClass c) {
  return std::find(R.classes.begin(), R.classes.end(), c) != R.classes.end();
}

std::string ideal_tag(const AnalysisReport& R) {
  std::string s = "d=" + std::to_string(R.d) + " A=[";
  for (size_t k = 0; k < R.A.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(R.A[k]);
  }
  return s + "]";
}

HomogeneousForm2 form_from(const GeneratorSet& E, const std::vector<Int>& coeffs) {
  HomogeneousForm2 f;
  f.d = E.d;
  for (size_t k = 0; k < E.A.size(); ++k)
    if (coeffs[k] != 0) f.coeffs[E.A[k]] = mpq_class(static_cast<long>(coeffs[k]));
  return f;
}

// Budgeted coefficient sweep for flagged conjecture cases: primitive integer
// coefficient vectors with entries in [-2, 2] over the generator support,
// deduplicated up to scaling, at most 512 nondegenerate pairs.  Returns the
// largest reduction number met, -1 if none.
Int sweep_reductions(SumsetCache& cache, Int regR, std::uint64_t seed) {
  const GeneratorSet& E = cache.gen_set();
  std::mt19937_64 rng(seed);
  std::set<std::vector<Int>> seen;
  std::vector<std::vector<Int>> vecs;
  for (int attempt = 0; attempt < 4096 && vecs.size() < 64; ++attempt) {
    std::vector<Int> v(E.A.size());
    for (auto& c : v) c = static_cast<Int>(rng() % 5) - 2;
    Int g = 0;
    for (Int c : v) g = std::gcd(g, c < 0 ? -c : c);
    if (g == 0) continue;
    if (g > 1)
      for (auto& c : v) c /= g;
    for (Int c : v) {
      if (c == 0) continue;
      if (c < 0)
        for (auto& w : v) w = -w;
      break;
    }
    if (seen.insert(v).second) vecs.push_back(v);
  }
  Int best = -1;
  int pairs = 0;
  for (size_t i = 0; i < vecs.size() && pairs < 512; ++i)
    for (size_t j = i + 1; j < vecs.size() && pairs < 512; ++j) {
      HomogeneousForm2 f = form_from(E, vecs[i]);
      HomogeneousForm2 g = form_from(E, vecs[j]);
      if (!sylvester_nondegenerate(f, g)) continue;
      ++pairs;
      if (auto r = reduction_number_of(cache, f, g, regR + 1))
        best = std::max(best, *r);
    }
  return best;
}

ExploreRecord explore_one(const GeneratorSet& E, const ExploreJob& job, size_t index) {
  ExploreRecord rec;
  try {
    rec.report = analyze(E);
    rec.checks = theorem_checks(rec.report);
    if (job.trials > 0) {
      SumsetCache cache(E);
      const std::uint64_t ideal_seed = mix64(job.seed ^ mix64(index + 1));
      ReductionSample smp = sample_reductions(cache, job.trials, ideal_seed);
      if (smp.conjecture_flag) {
        Int best = smp.max_r;
        if (job.br_sweep)
          best = std::max(best, sweep_reductions(cache, rec.report.regR,
                                                 mix64(ideal_seed + 0x5eedULL)));
        if (best < rec.report.s_star) {
          rec.watch = true;
          rec.watch_note = ideal_tag(rec.report) + ": sampled max reduction number " +
                           std::to_string(best) + " < s* = " +
                           std::to_string(rec.report.s_star) +
                           "; lower bound only, needs exhaustive verification";
        }
      }
    }
  } catch (const std::exception& ex) {
    rec.report.d = E.d;
    rec.report.A = E.A;
    rec.checks.push_back({"analysis", false, ex.what()});
  }
  return rec;
}

std::string jsonl_line(const ExploreRecord& rec) {
  nlohmann::json j = report_to_json(rec.report);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& c : rec.checks) {
    nlohmann::json cj{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  j["watch"] = rec.watch;
  if (rec.watch) j["watch_note"] = rec.watch_note;
  return j.dump();
}

std::string iso8601_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Exhaustive: return "exhaustive";
    case Family::Neighbor: return "neighbor";
    case Family::Middle: return "middle";
    case Family::ThreeGen: return "threegen";
    case Family::RandomSample: return "random";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "exhaustive") return Family::Exhaustive;
  if (name == "neighbor") return Family::Neighbor;
  if (name == "middle") return Family::Middle;
  if (name == "threegen") return Family::ThreeGen;
  if (name == "random") return Family::RandomSample;
  throw InputError("unknown family '" + name +
                   "' (expected exhaustive, neighbor, middle, threegen, or random)");
}

std::vector<GeneratorSet> enumerate_family(const ExploreJob& job) {
  const Int d = job.d;
  if (d < 1) throw InputError("family degree must be at least 1");
  std::vector<GeneratorSet> out;
  switch (job.family) {
    case Family::Exhaustive: {
      if (d > 12)
        throw InputError("exhaustive family is limited to d <= 12 (2^(d-1) ideals)");
      for (std::uint64_t mask = 0; mask < (1ULL << (d - 1)); ++mask)
        out.emplace_back(d, mask_to_set(d, mask));
      break;
    }
    case Family::Neighbor: {
      if (d < 2) throw InputError("neighbor family needs d >= 2");
      if (d > 12) throw InputError("neighbor family is limited to d <= 12");
      for (std::uint64_t mask = 0; mask < (1ULL << (d - 2)); ++mask) {
        std::vector<Int> a{0, 1, d};
        for (Int k = 2; k < d; ++k)
          if (mask >> (k - 2) & 1) a.push_back(k);
        out.emplace_back(d, std::move(a));
      }
      break;
    }
    case Family::Middle: {
      for (Int a = 1; a < d; ++a)
        for (Int b = a; b < d; ++b) {
          std::vector<Int> s{0, d};
          for (Int k = a; k <= b; ++k) s.push_back(k);
          out.emplace_back(d, std::move(s));
        }
      break;
    }
    case Family::ThreeGen: {
      for (Int a = 1; a < d; ++a) out.emplace_back(d, std::vector<Int>{0, a, d});
      break;
    }
    case Family::RandomSample: {
      if (job.count < 1) throw InputError("random family needs count >= 1");
      std::mt19937_64 rng(job.seed);
      for (Int k = 0; k < job.count; ++k) {
        std::uint64_t mask = rng();
        if (d - 1 < 64) mask &= (1ULL << (d - 1)) - 1;
        out.emplace_back(d, mask_to_set(d, mask));
      }
      break;
    }
  }
  return out;
}

std::vector<CheckResult> theorem_checks(const AnalysisReport& R) {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool ok, const std::string& detail) {
    out.push_back({name, ok, ok ? std::string() : ideal_tag(R) + ": " + detail});
  };
  const bool parameter = R.A.size() == 2;

  check("inequality_chain", R.r_J <= R.regF && R.regF <= R.regR,
        "r_J=" + std::to_string(R.r_J) + " regF=" + std::to_string(R.regF) +
            " regR=" + std::to_string(R.regR));
  check("max_formula_rees",
        parameter ? R.regR == 0 : R.regR == std::max(R.r_J, R.s_star),
        "regR=" + std::to_string(R.regR) + " vs max(r_J=" + std::to_string(R.r_J) +
            ", s*=" + std::to_string(R.s_star) + ")");
  check("max_formula_fiber",
        parameter ? R.regF == 0 : R.regF == std::max(R.r_J, R.s_ini),
        "regF=" + std::to_string(R.regF) + " vs max(r_J=" + std::to_string(R.r_J) +
            ", s*_ini=" + std::to_string(R.s_ini) + ")");
  check("s_bound", R.s <= std::max<Int>(R.regR - 1, 0),
        "s=" + std::to_string(R.s) + " regR=" + std::to_string(R.regR));
  check("index_order", R.s_ini <= R.s_star && R.s_star <= std::max<Int>(R.regR, 1),
        "s*_ini=" + std::to_string(R.s_ini) + " s*=" + std::to_string(R.s_star) +
            " regR=" + std::to_string(R.regR));
  check("middle_theorem",
        !in_classes(R, EuClass::MiddleClass) || (R.regR == R.regF && R.regR == R.r_J),
        "regR=" + std::to_string(R.regR) + " regF=" + std::to_string(R.regF) +
            " r_J=" + std::to_string(R.r_J));
  check("neighbor_theorem", !in_classes(R, EuClass::NeighborClass) || R.regR == R.regF,
        "regR=" + std::to_string(R.regR) + " regF=" + std::to_string(R.regF));
  {
    bool ok = true;
    std::string detail;
    if (in_classes(R, EuClass::ThreeGenerator) && R.A.size() == 3) {
      const Int a = R.A[1];
      const Int want = R.d / std::gcd(a, R.d) - 1;
      ok = R.regR == want && R.regF == want;
      detail = "regR=" + std::to_string(R.regR) + " regF=" + std::to_string(R.regF) +
               " expected d/gcd(a,d)-1=" + std::to_string(want);
    }
    check("threegen_formula", ok, detail);
  }
  check("cm_iff_h1_zero",
        R.is_cm == (R.s_ini == 1) && R.is_cm == R.h1.empty() &&
            std::all_of(R.h1.begin(), R.h1.end(), [](Int v) { return v >= 0; }),
        "is_cm=" + std::to_string(R.is_cm) + " s*_ini=" + std::to_string(R.s_ini));
  check("cm_implies_buchsbaum", !R.is_cm || R.is_buchsbaum,
        "is_cm set but is_buchsbaum clear");
  return out;
}

ExploreSummary run_job(const ExploreJob& job, std::ostream& log) {
  const std::vector<GeneratorSet> ideals = enumerate_family(job);

  std::ofstream csv, jsonl;
  if (!job.csv_path.empty()) {
    std::error_code ec;
    const bool fresh = !std::filesystem::exists(job.csv_path, ec) ||
                       std::filesystem::file_size(job.csv_path, ec) == 0;
    csv.open(job.csv_path, std::ios::app);
    if (!csv) throw InputError("cannot open CSV output path: " + job.csv_path);
    if (fresh) csv << csv_header() << ",checks_passed,checks_failed,watch\n" << std::flush;
  }
  if (!job.jsonl_path.empty()) {
    jsonl.open(job.jsonl_path, std::ios::app);
    if (!jsonl) throw InputError("cannot open JSON-lines output path: " + job.jsonl_path);
  }

  unsigned workers = job.jobs > 0 ? static_cast<unsigned>(job.jobs)
                                  : std::thread::hardware_concurrency();
  workers = std::clamp(workers, 1u, 16u);
  workers = std::min<unsigned>(workers, std::max<size_t>(ideals.size(), 1));

  std::atomic<size_t> next{0};
  std::mutex mu;
  std::condition_variable cv;
  std::map<size_t, ExploreRecord> ready;  // reorder buffer, keyed by canonical index

  auto work = [&] {
    for (;;) {
      const size_t k = next.fetch_add(1);
      if (k >= ideals.size()) return;
      ExploreRecord rec = explore_one(ideals[k], job, k);
      {
        std::lock_guard<std::mutex> lk(mu);
        ready.emplace(k, std::move(rec));
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const auto t0 = std::chrono::steady_clock::now();
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);

  ExploreSummary sum;
  for (size_t written = 0; written < ideals.size(); ++written) {
    ExploreRecord rec;
    {
      std::unique_lock<std::mutex> lk(mu);
      cv.wait(lk, [&] { return ready.count(written) > 0; });
      rec = std::move(ready.at(written));
      ready.erase(written);
    }
    ++sum.records;
    Int passed = 0, failed = 0;
    for (const CheckResult& c : rec.checks) {
      if (c.pass) {
        ++passed;
        continue;
      }
      ++failed;
      ++sum.check_failures;
      sum.failures.push_back(c.name + " " + c.detail);
      log << "FAIL " << c.name << " " << c.detail << '\n';
    }
    if (rec.watch) {
      sum.conjecture_watch.push_back(rec.watch_note);
      log << "WATCH " << rec.watch_note << '\n';
    }
    if (csv.is_open())
      csv << csv_row(rec.report) << ',' << passed << ',' << failed << ','
          << (rec.watch ? 1 : 0) << '\n'
          << std::flush;
    if (jsonl.is_open()) jsonl << jsonl_line(rec) << '\n' << std::flush;
  }
  for (std::thread& th : pool) th.join();
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);

  log << "family=" << to_string(job.family) << " d=" << job.d << " records=" << sum.records
      << " check_failures=" << sum.check_failures
      << " conjecture_watch=" << sum.conjecture_watch.size() << '\n';

  if (!job.summary_path.empty()) {
    nlohmann::json js{{"schema", 1},
                      {"family", to_string(job.family)},
                      {"d", job.d},
                      {"seed", job.seed},
                      {"trials", job.trials},
                      {"records", sum.records},
                      {"check_failures", sum.check_failures},
                      {"failures", sum.failures},
                      {"conjecture_watch", sum.conjecture_watch},
                      {"elapsed_ms", elapsed.count()},
                      {"finished_at", iso8601_now()}};
    if (job.family == Family::RandomSample) js["count"] = job.count;
    std::ofstream sf(job.summary_path);
    if (!sf) throw InputError("cannot open summary output path: " + job.summary_path);
    sf << js.dump(2) << '\n';
  }
  return sum;
}

}  // namespace rrmono
