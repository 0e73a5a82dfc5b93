#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rrmono/equigen.hpp"
#include "rrmono/monomial_ideal.hpp"

namespace rrmono::testing {

// Build a normalized ideal from (i, j) exponent pairs.
inline MonomialIdeal2 mk(std::initializer_list<std::pair<Int, Int>> pts) {
  std::vector<Monomial2> raw;
  for (auto [i, j] : pts) raw.push_back({i, j});
  return normalize(std::move(raw));
}

// Flatten generators back to comparable pairs.
inline std::vector<std::pair<Int, Int>> pairs(const MonomialIdeal2& I) {
  std::vector<std::pair<Int, Int>> out;
  for (const Monomial2& g : I.gens) out.emplace_back(g.i, g.j);
  return out;
}

inline GeneratorSet gs(Int d, std::initializer_list<Int> A) {
  return GeneratorSet(d, std::vector<Int>(A));
}

}  // namespace rrmono::testing
