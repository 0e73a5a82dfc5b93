#include "rrmono/monomial_ideal.hpp"

#include <algorithm>

#include "rrmono/errors.hpp"

namespace rrmono {

MonomialIdeal2 normalize(std::vector<Monomial2> raw) {
  if (raw.empty())
    throw InputError("empty generating set: the zero ideal is out of scope");
  for (const Monomial2& m : raw)
    if (m.i < 0 || m.j < 0)
      throw InputError("negative exponent in monomial generator");
  // Sort by (i asc, j asc); a point survives iff its j is strictly below every
  // j seen so far, which prunes exactly the divisible points and duplicates.
  std::sort(raw.begin(), raw.end(),
            [](const Monomial2& a, const Monomial2& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  MonomialIdeal2 out;
  Int minj = -1;
  bool first = true;
  for (const Monomial2& m : raw) {
    if (first || m.j < minj) {
      out.gens.push_back(m);
      minj = m.j;
      first = false;
    }
  }
  return out;
}

MonomialIdeal2 unit_ideal() { return MonomialIdeal2{{Monomial2{0, 0}}}; }

bool is_unit(const MonomialIdeal2& I) {
  return I.gens.size() == 1 && I.gens[0] == Monomial2{0, 0};
}

bool contains(const MonomialIdeal2& I, const Monomial2& m) {
  // Generators are sorted by i ascending with j strictly decreasing, so the
  // best candidate divisor is the last generator with g.i <= m.i.
  auto it = std::upper_bound(
      I.gens.begin(), I.gens.end(), m.i,
      [](Int v, const Monomial2& g) { return v < g.i; });
  if (it == I.gens.begin()) return false;
  return std::prev(it)->j <= m.j;
}

bool subset(const MonomialIdeal2& I, const MonomialIdeal2& K) {
  for (const Monomial2& g : I.gens)
    if (!contains(K, g)) return false;
  return true;
}

MonomialIdeal2 multiply(const MonomialIdeal2& I, const MonomialIdeal2& K) {
  std::vector<Monomial2> prod;
  prod.reserve(I.gens.size() * K.gens.size());
  for (const Monomial2& g : I.gens)
    for (const Monomial2& h : K.gens)
      prod.push_back({g.i + h.i, g.j + h.j});
  return normalize(std::move(prod));
}

MonomialIdeal2 multiply(const MonomialIdeal2& I, const Monomial2& m) {
  // Shifting preserves the staircase antichain, no renormalization needed.
  MonomialIdeal2 out = I;
  for (Monomial2& g : out.gens) {
    g.i += m.i;
    g.j += m.j;
  }
  return out;
}

MonomialIdeal2 power(const MonomialIdeal2& I, Int n) {
  if (n < 0) throw InputError("negative ideal power");
  MonomialIdeal2 acc = unit_ideal();
  MonomialIdeal2 base = I;
  while (n > 0) {
    if (n & 1) acc = multiply(acc, base);
    n >>= 1;
    if (n) base = multiply(base, base);
  }
  return acc;
}

MonomialIdeal2 colon_monomial(const MonomialIdeal2& I, const Monomial2& m) {
  std::vector<Monomial2> out;
  out.reserve(I.gens.size());
  for (const Monomial2& g : I.gens)
    out.push_back({std::max(g.i - m.i, Int(0)), std::max(g.j - m.j, Int(0))});
  return normalize(std::move(out));
}

MonomialIdeal2 intersect(const MonomialIdeal2& I, const MonomialIdeal2& K) {
  std::vector<Monomial2> out;
  out.reserve(I.gens.size() * K.gens.size());
  for (const Monomial2& g : I.gens)
    for (const Monomial2& h : K.gens)
      out.push_back({std::max(g.i, h.i), std::max(g.j, h.j)});
  return normalize(std::move(out));
}

MonomialIdeal2 colon_ideal(const MonomialIdeal2& I, const MonomialIdeal2& K) {
  MonomialIdeal2 acc = colon_monomial(I, K.gens.front());
  for (size_t k = 1; k < K.gens.size(); ++k)
    acc = intersect(acc, colon_monomial(I, K.gens[k]));
  return acc;
}

MonomialIdeal2 add(const MonomialIdeal2& I, const MonomialIdeal2& K) {
  std::vector<Monomial2> all = I.gens;
  all.insert(all.end(), K.gens.begin(), K.gens.end());
  return normalize(std::move(all));
}

std::vector<Monomial2> graded_piece(const MonomialIdeal2& I, Int deg) {
  std::vector<Monomial2> out;
  for (Int i = 0; i <= deg; ++i) {
    Monomial2 m{i, deg - i};
    if (contains(I, m)) out.push_back(m);
  }
  return out;
}

std::string to_string(const Monomial2& m) {
  if (m.i == 0 && m.j == 0) return "1";
  std::string s;
  if (m.i > 0) {
    s += "x";
    if (m.i > 1) s += "^" + std::to_string(m.i);
  }
  if (m.j > 0) {
    if (!s.empty()) s += "*";
    s += "y";
    if (m.j > 1) s += "^" + std::to_string(m.j);
  }
  return s;
}

std::string to_string(const MonomialIdeal2& I) {
  std::string s = "(";
  for (size_t k = 0; k < I.gens.size(); ++k) {
    if (k) s += ", ";
    s += to_string(I.gens[k]);
  }
  return s + ")";
}

}  // namespace rrmono
