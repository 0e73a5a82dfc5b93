#include "rrmono/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>

#include "rrmono/analysis.hpp"
#include "rrmono/errors.hpp"
#include "rrmono/explore.hpp"
#include "rrmono/parse.hpp"
#include "rrmono/report_io.hpp"
#include "rrmono/staircase_render.hpp"

namespace rrmono {

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

// "q" = exact rationals; "p:<prime>" = prime-field sampling mode.  The prime
// must clear d*(cap+1) so every graded piece touched by the scan stays small
// relative to p; reduction behavior over a finite field can still differ from
// characteristic 0, which is why rationals are the default.
FieldMode parse_field(const std::string& text, Int d, Int cap) {
  if (text.empty() || text == "q") return {};
  if (text.rfind("p:", 0) == 0) {
    std::uint64_t p = 0;
    try {
      size_t used = 0;
      p = std::stoull(text.substr(2), &used);
      if (used != text.size() - 2) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw InputError("--field p:<prime> needs an integer prime, got '" + text + "'");
    }
    if (p > 2147483647ULL)
      throw InputError("--field prime must be at most 2^31 - 1");
    if (!is_prime(p)) throw InputError("--field value " + std::to_string(p) + " is not prime");
    const std::uint64_t need = static_cast<std::uint64_t>(d) * (cap + 1);
    if (p <= need)
      throw InputError("--field prime " + std::to_string(p) + " is too small: need p > d*(cap+1) = " +
                       std::to_string(need));
    return {p};
  }
  throw InputError("--field expects q or p:<prime>, got '" + text + "'");
}

std::string gens_line(const MonomialIdeal2& I) { return to_string(I); }

int cmd_rr(const IdealSpec& spec, Int one_n, Int max_n, bool json, std::ostream& out) {
  SumsetCache cache(spec.resolved);
  const Int regR = reg_rees(cache);
  Int lo = 1, hi = 1;
  if (one_n >= 0 && max_n > 0) throw InputError("choose one of --n and --max-n, not both");
  if (one_n == 0 || max_n < 0) throw InputError("powers start at n = 1");
  if (one_n > 0) lo = hi = one_n;
  if (max_n > 0) hi = max_n;

  nlohmann::json jout{{"schema", 1}, {"d", spec.resolved.d}, {"A", spec.resolved.A},
                      {"reg_rees", regR}};
  nlohmann::json closures = nlohmann::json::array();
  for (Int n = lo; n <= hi; ++n) {
    const RRFiltrationEntry entry = rr_closure(cache, n, regR);
    const bool equal = entry.closure == power_ideal(cache, n);
    if (json) {
      nlohmann::json gens = nlohmann::json::array();
      for (const Monomial2& g : entry.closure.gens)
        gens.push_back(nlohmann::json::array({g.i, g.j}));
      closures.push_back({{"n", n},
                          {"t_used", entry.t_used},
                          {"stabilized", entry.stabilized},
                          {"equals_power", equal},
                          {"gens", std::move(gens)}});
    } else {
      out << "closure of I^" << n << " (chain index " << entry.t_used
          << "): " << gens_line(entry.closure) << '\n';
      out << "  equals I^" << n << ": " << (equal ? "yes" : "no") << '\n';
    }
  }
  if (json) {
    jout["closures"] = std::move(closures);
    out << jout.dump(2) << '\n';
  }
  return 0;
}

int cmd_staircase(const IdealSpec& spec, Int n, const std::string& svg_path, std::ostream& out) {
  if (n < 1) throw InputError("powers start at n = 1");
  SumsetCache cache(spec.resolved);
  const Int regR = reg_rees(cache);
  if (svg_path.empty()) {
    out << render_ascii(cache, n, regR);
  } else {
    std::ofstream f(svg_path);
    if (!f) throw InputError("cannot open SVG output path: " + svg_path);
    f << render_svg(cache, n, regR);
    out << "wrote SVG to " << svg_path << '\n';
  }
  return 0;
}

int cmd_reduce(const IdealSpec& spec, const std::string& forms_text, Int at_n, Int cap_opt,
               bool sample, Int trials, std::uint64_t seed, const std::string& field_text,
               bool json, std::ostream& out) {
  SumsetCache cache(spec.resolved);
  if (sample) {
    const Int cap_hint = reg_rees(cache) + 1;
    const FieldMode mode = parse_field(field_text, spec.resolved.d, cap_hint);
    const ReductionSample smp = sample_reductions(cache, trials, seed, mode);
    if (json) {
      nlohmann::json hist = nlohmann::json::object();
      for (const auto& [r, c] : smp.histogram) hist[std::to_string(r)] = c;
      out << nlohmann::json{{"schema", 1},
                            {"d", spec.resolved.d},
                            {"A", spec.resolved.A},
                            {"trials", smp.trials_done},
                            {"rejected", smp.rejected},
                            {"min_r", smp.min_r},
                            {"max_r", smp.max_r},
                            {"s_star", smp.s_star},
                            {"histogram", std::move(hist)},
                            {"conjecture_flag", smp.conjecture_flag}}
                 .dump(2)
          << '\n';
      return 0;
    }
    out << "sampled " << smp.trials_done << " reduction pairs (" << smp.rejected
        << " degenerate draws rejected)\n";
    for (const auto& [r, c] : smp.histogram)
      out << "  reduction number " << r << ": " << c << " pair" << (c == 1 ? "" : "s") << '\n';
    out << "min = " << smp.min_r << ", max = " << smp.max_r << ", s* = " << smp.s_star << '\n';
    if (smp.conjecture_flag)
      out << "note: no sampled pair reached s*; lower bound only, needs exhaustive verification\n";
    return 0;
  }

  if (forms_text.empty())
    throw InputError("reduce needs --forms \"f | g\" (or --sample)");
  auto [f, g] = parse_form_pair(forms_text);
  try {
    if (at_n >= 0) {
      const Int cap = std::max<Int>(at_n, 1);
      const FieldMode mode = parse_field(field_text, spec.resolved.d, cap);
      const bool ok = is_reduction_at(cache, f, g, at_n, mode);
      if (json)
        out << nlohmann::json{{"schema", 1}, {"n", at_n}, {"is_reduction", ok}}.dump(2) << '\n';
      else
        out << "(f, g) reduces I at n = " << at_n << ": " << (ok ? "yes" : "no") << '\n';
      return 0;
    }
    const Int cap = cap_opt > 0 ? cap_opt : reg_rees(cache) + 1;
    const FieldMode mode = parse_field(field_text, spec.resolved.d, cap);
    const std::optional<Int> r = reduction_number_of(cache, f, g, cap, mode);
    if (json) {
      nlohmann::json j{{"schema", 1}, {"cap", cap}};
      if (r)
        j["reduction_number"] = *r;
      else
        j["reduction_number"] = nullptr;
      out << j.dump(2) << '\n';
    } else if (r) {
      out << "reduction number " << *r << '\n';
    } else {
      out << "no reduction number up to cap " << cap << '\n';
    }
    return 0;
  } catch (const InputError& e) {
    throw InputError(std::string(e.what()) + " (forms: " + forms_text + ")");
  }
}

int cmd_verify(const IdealSpec& spec, std::ostream& out) {
  SumsetCache cache(spec.resolved);
  const GeneratorSet& E = spec.resolved;
  const Int d = E.d;
  bool all_ok = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail = "") {
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name;
    if (!ok && !detail.empty()) out << ": " << detail;
    out << '\n';
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      line(name, false, e.what());
    }
  };

  const Int r = reduction_number(cache);
  const Int regR = reg_rees(cache);
  const Int regF = reg_fiber_with(cache, regR);

  guarded("triple_regularity_agreement", [&] {
    const Int a = reg_rees_via_rr(cache);
    const Int b = reg_rees_alternative(cache);
    line("triple_regularity_agreement", a == regR && b == regR,
         "reg_rees=" + std::to_string(regR) + " via_rr=" + std::to_string(a) +
             " alternative=" + std::to_string(b));
  });
  line("inequality_chain", r <= regF && regF <= regR && regR <= safe_cap(d),
       "r_J=" + std::to_string(r) + " regF=" + std::to_string(regF) +
           " regR=" + std::to_string(regR));

  RRIndices idx{};
  guarded("rr_indices", [&] {
    idx = rr_indices(cache, regR, regF);
    line("rr_indices", true);
  });
  if (E.is_parameter()) {
    line("max_formula_rees", regR == 0, "parameter ideal must have regR = 0");
    line("max_formula_fiber", regF == 0, "parameter ideal must have regF = 0");
  } else {
    line("max_formula_rees", regR == std::max(r, idx.s_star),
         "regR=" + std::to_string(regR) + " max(r_J,s*)=" +
             std::to_string(std::max(r, idx.s_star)));
    line("max_formula_fiber", regF == std::max(r, idx.s_ini),
         "regF=" + std::to_string(regF) + " max(r_J,s*_ini)=" +
             std::to_string(std::max(r, idx.s_ini)));
  }
  line("index_bounds",
       idx.s <= std::max<Int>(regR - 1, 0) && idx.s_ini <= idx.s_star &&
           idx.s_star <= std::max<Int>(regR, 1),
       "s=" + std::to_string(idx.s) + " s*_ini=" + std::to_string(idx.s_ini) +
           " s*=" + std::to_string(idx.s_star));

  guarded("closure_chain_stable", [&] {
    bool ok = true;
    for (Int n = 1; n <= std::max<Int>(regR, 1) + 1 && ok; ++n)
      ok = rr_closure(cache, n, regR).stabilized;
    line("closure_chain_stable", ok);
  });
  guarded("colon_formula_agreement", [&] {
    bool ok = true;
    std::string detail;
    for (Int n = 1; n <= regR + 1 && ok; ++n) {
      const MonomialIdeal2 closure = rr_closure(cache, n, regR).closure;
      for (Int t = std::max<Int>(regR - n, 0); t <= std::max<Int>(regR - n, 0) + 1 && ok; ++t) {
        const MonomialIdeal2 via_powers =
            colon_ideal(power_ideal(cache, n + t), power_ideal(cache, t));
        ok = via_powers == closure;
        if (!ok) detail = "n=" + std::to_string(n) + " t=" + std::to_string(t);
      }
    }
    line("colon_formula_agreement", ok, detail);
  });
  guarded("power_colon_descends", [&] {
    bool ok = true;
    std::string detail;
    const MonomialIdeal2 I = ideal_of(E);
    for (Int n : {regR, regR + 1}) {
      const MonomialIdeal2 lhs = colon_ideal(power_ideal(cache, n + 1), I);
      if (lhs != power_ideal(cache, n)) {
        ok = false;
        detail = "n=" + std::to_string(n);
        break;
      }
    }
    line("power_colon_descends", ok, detail);
  });
  guarded("reduction_colon_identity", [&] {
    bool ok = true;
    std::string detail;
    const Monomial2 xd{d, 0};
    const MonomialIdeal2 tail = colon_monomial(power_ideal(cache, r + 1), xd);
    for (Int n = r; n <= regR + 2 && ok; ++n) {
      const MonomialIdeal2 lhs = colon_monomial(power_ideal(cache, n + 1), xd);
      const MonomialIdeal2 rhs =
          add(power_ideal(cache, n), multiply(tail, Monomial2{0, (n - r) * d}));
      ok = lhs == rhs;
      if (!ok) detail = "n=" + std::to_string(n);
    }
    line("reduction_colon_identity", ok, detail);
  });
  return all_ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact Ratliff-Rush filtration, reduction number, and regularity calculator\n"
               "for m-primary monomial ideals of k[x,y] generated in one degree"};
  app.require_subcommand(1);

  std::string ideal_text, forms_text, svg_path, field_text = "q", family_name = "exhaustive";
  std::string csv_path, jsonl_path, summary_path;
  Int one_n = -1, max_n = 0, stair_n = 1, cap_opt = 0, trials = 20, count = 100, fam_d = 5;
  std::uint64_t seed = 1;
  Int explore_trials = 0;
  int jobs = 0;
  bool json_flag = false, sample_flag = false, br_sweep = false;

  const char* ideal_help =
      "ideal: \"x^7, x^6*y, x^2*y^5, y^7\" or \"d=7; a=0,1,5,7\"";

  CLI::App* sc_analyze = app.add_subcommand("analyze", "full invariant report for one ideal");
  sc_analyze->add_option("ideal", ideal_text, ideal_help)->required();
  sc_analyze->add_flag("--json", json_flag, "emit the report as JSON");
  sc_analyze->add_option("--max-n", max_n, "include closure generators for n = 1..N");

  CLI::App* sc_rr = app.add_subcommand("rr", "print the closure of I^n");
  sc_rr->add_option("ideal", ideal_text, ideal_help)->required();
  sc_rr->add_option("--n", one_n, "single power n (default 1)");
  sc_rr->add_option("--max-n", max_n, "range n = 1..N");
  sc_rr->add_flag("--json", json_flag, "emit JSON");

  CLI::App* sc_stair = app.add_subcommand("staircase", "draw the staircase of I^n with its closure");
  sc_stair->add_option("ideal", ideal_text, ideal_help)->required();
  sc_stair->add_option("--n", stair_n, "power n (default 1)");
  sc_stair->add_option("--svg", svg_path, "write an SVG file instead of ASCII");

  CLI::App* sc_reduce = app.add_subcommand("reduce", "test a candidate reduction pair or sample random ones");
  sc_reduce->add_option("ideal", ideal_text, ideal_help)->required();
  sc_reduce->add_option("--forms", forms_text, "two forms separated by '|', e.g. \"x^7 | x^6*y + y^7\"");
  sc_reduce->add_option("--n", one_n, "test reduction at this power instead of scanning");
  sc_reduce->add_option("--cap", cap_opt, "scan cap (default reg R + 1)");
  sc_reduce->add_flag("--sample", sample_flag, "sample random reduction pairs");
  sc_reduce->add_option("--trials", trials, "sample size (default 20)");
  sc_reduce->add_option("--seed", seed, "sampling seed (default 1)");
  sc_reduce->add_option("--field", field_text, "q (exact rationals, default) or p:<prime>");
  sc_reduce->add_flag("--json", json_flag, "emit JSON");

  CLI::App* sc_verify = app.add_subcommand("verify", "recompute every cross-check for one ideal");
  sc_verify->add_option("ideal", ideal_text, ideal_help)->required();

  CLI::App* sc_explore = app.add_subcommand("explore", "run a family batch with regression checks");
  sc_explore->add_option("--family", family_name, "exhaustive | neighbor | middle | threegen | random");
  sc_explore->add_option("--d", fam_d, "generator degree")->required();
  sc_explore->add_option("--count", count, "random family: ideals to draw (default 100)");
  sc_explore->add_option("--seed", seed, "seed (default 1)");
  sc_explore->add_option("--trials", explore_trials, "reduction samples per ideal (default 0 = off)");
  sc_explore->add_flag("--br-sweep", br_sweep, "sweep coefficient pairs on flagged conjecture cases");
  sc_explore->add_option("--csv", csv_path, "append records to this CSV file");
  sc_explore->add_option("--jsonl", jsonl_path, "append records to this JSON-lines file");
  sc_explore->add_option("--summary", summary_path, "write the summary JSON here");
  sc_explore->add_option("--jobs", jobs, "worker threads (default: hardware)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(std::move(rev));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(sc_analyze)) {
      const IdealSpec spec = parse_ideal(ideal_text);
      const AnalysisReport rep = analyze(spec.resolved, AnalyzeOptions{max_n});
      if (json_flag)
        out << report_to_json(rep).dump(2) << '\n';
      else
        out << report_human(rep);
      return 0;
    }
    if (app.got_subcommand(sc_rr))
      return cmd_rr(parse_ideal(ideal_text), one_n, max_n, json_flag, out);
    if (app.got_subcommand(sc_stair))
      return cmd_staircase(parse_ideal(ideal_text), stair_n, svg_path, out);
    if (app.got_subcommand(sc_reduce))
      return cmd_reduce(parse_ideal(ideal_text), forms_text, one_n, cap_opt, sample_flag,
                        trials, seed, field_text, json_flag, out);
    if (app.got_subcommand(sc_verify)) return cmd_verify(parse_ideal(ideal_text), out);
    if (app.got_subcommand(sc_explore)) {
      ExploreJob job;
      job.family = family_from_name(family_name);
      job.d = fam_d;
      job.count = count;
      job.seed = seed;
      job.trials = explore_trials;
      job.br_sweep = br_sweep;
      job.csv_path = csv_path;
      job.jsonl_path = jsonl_path;
      job.summary_path = summary_path;
      job.jobs = jobs;
      const ExploreSummary sum = run_job(job, out);
      return sum.check_failures == 0 ? 0 : 2;
    }
  } catch (const InternalCheckError& e) {
    err << "internal check failed: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace rrmono
