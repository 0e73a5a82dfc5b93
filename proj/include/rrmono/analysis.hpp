#pragma once

#include "rrmono/parse.hpp"
#include "rrmono/semigroup.hpp"

namespace rrmono {

struct RRGenerators {
  Int n = 1;
  Int t_used = 0;
  std::vector<Monomial2> gens;  // minimal generators of the closure of I^n

  friend bool operator==(const RRGenerators&, const RRGenerators&) = default;
};

struct AnalysisReport {
  Int d = 1;
  std::vector<Int> A;
  Int r_J = 0;
  Int regR = 0;
  Int regF = 0;
  Int s = 0;
  Int s_star = 1;
  Int s_ini = 1;
  Int e = 1;
  bool eu_equal = true;
  EuClass eu_class = EuClass::General;
  std::vector<EuClass> classes;
  bool invariance = false;
  bool is_cm = true;
  bool is_buchsbaum = true;
  std::vector<Int> h1;                   // degree n = 1 .. s_ini-1
  std::vector<RRGenerators> rr_generators;  // filled when options ask for it

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalyzeOptions {
  Int max_n = 0;  // > 0: include closure generators for n = 1..max_n
};

AnalysisReport analyze(const GeneratorSet& E, const AnalyzeOptions& opt = {});

// Re-asserts every cheap cross-formula invariant; throws InternalCheckError.
void assert_report_invariants(const AnalysisReport& R);

}  // namespace rrmono
