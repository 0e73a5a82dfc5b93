#pragma once

#include <string>
#include <utility>

#include "rrmono/redcheck.hpp"

namespace rrmono {

struct IdealSpec {
  std::string source;
  GeneratorSet resolved;
};

// Accepts either a comma-separated monomial list ("x^7, x^6*y, x^2*y^5, y^7")
// or the direct exponent form "d=17; a=0,1,3,5,13,14,16,17".
IdealSpec parse_ideal(const std::string& text);

// One degree-d form with rational coefficients, e.g. "x^6*y + 2/3*y^7 - x^7".
HomogeneousForm2 parse_form(const std::string& text);

// Two forms separated by '|', e.g. "x^7 | x^6*y + y^7".
std::pair<HomogeneousForm2, HomogeneousForm2> parse_form_pair(const std::string& text);

}  // namespace rrmono
