#pragma once

#include <compare>
#include <string>
#include <vector>

#include "rrmono/bitvec.hpp"

namespace rrmono {

struct Monomial2 {
  Int i = 0;  // exponent of x
  Int j = 0;  // exponent of y

  friend bool operator==(const Monomial2&, const Monomial2&) = default;
  friend auto operator<=>(const Monomial2&, const Monomial2&) = default;

  bool divides(const Monomial2& m) const { return i <= m.i && j <= m.j; }
};

// Minimal monomial generators in staircase order: i strictly increasing,
// j strictly decreasing.  This normal form is unique, so ideal equality is
// plain structural equality.
struct MonomialIdeal2 {
  std::vector<Monomial2> gens;

  friend bool operator==(const MonomialIdeal2&, const MonomialIdeal2&) = default;
};

MonomialIdeal2 normalize(std::vector<Monomial2> raw);
MonomialIdeal2 unit_ideal();
bool is_unit(const MonomialIdeal2& I);

bool contains(const MonomialIdeal2& I, const Monomial2& m);
bool subset(const MonomialIdeal2& I, const MonomialIdeal2& K);  // I contained in K

MonomialIdeal2 multiply(const MonomialIdeal2& I, const MonomialIdeal2& K);
MonomialIdeal2 multiply(const MonomialIdeal2& I, const Monomial2& m);
MonomialIdeal2 power(const MonomialIdeal2& I, Int n);
MonomialIdeal2 colon_monomial(const MonomialIdeal2& I, const Monomial2& m);
MonomialIdeal2 colon_ideal(const MonomialIdeal2& I, const MonomialIdeal2& K);
MonomialIdeal2 intersect(const MonomialIdeal2& I, const MonomialIdeal2& K);
MonomialIdeal2 add(const MonomialIdeal2& I, const MonomialIdeal2& K);

std::vector<Monomial2> graded_piece(const MonomialIdeal2& I, Int deg);

std::string to_string(const Monomial2& m);
std::string to_string(const MonomialIdeal2& I);

}  // namespace rrmono
