#include "rrmono/parse.hpp"

#include <algorithm>
#include <cctype>

#include "rrmono/errors.hpp"

namespace rrmono {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError(msg + " at position " + std::to_string(pos));
  }
  Int integer() {
    skip_ws();
    const size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 15) fail("integer too long");
    return std::stoll(s.substr(start, pos - start));
  }
};

// term := x['^'int]['*' y['^'int]] | y['^'int]
Monomial2 parse_monomial(Cursor& c) {
  Monomial2 m{0, 0};
  bool any = false;
  if (c.peek() == 'x') {
    ++c.pos;
    m.i = c.eat('^') ? c.integer() : 1;
    any = true;
    if (c.eat('*')) {
      if (c.peek() != 'y') c.fail("expected y after '*'");
    }
  }
  if (c.peek() == 'y') {
    ++c.pos;
    m.j = c.eat('^') ? c.integer() : 1;
    any = true;
  }
  if (!any) c.fail("expected a monomial in x, y");
  return m;
}

GeneratorSet resolve(const std::vector<Monomial2>& monomials) {
  Int d = -1;
  std::vector<Int> A;
  for (const Monomial2& m : monomials) {
    const Int deg = m.i + m.j;
    if (d < 0) d = deg;
    if (deg != d) throw InputError("not generated in a single degree");
    A.push_back(m.j);
  }
  if (d < 1) throw InputError("generators must have positive degree");
  std::sort(A.begin(), A.end());
  A.erase(std::unique(A.begin(), A.end()), A.end());
  if (A.front() != 0 || A.back() != d)
    throw InputError("not m-primary in scope: x^d and y^d must appear among the generators");
  return GeneratorSet(d, std::move(A));
}

GeneratorSet parse_direct(Cursor& c) {
  if (!c.eat('d')) c.fail("expected 'd'");
  if (!c.eat('=')) c.fail("expected '=' after d");
  const Int d = c.integer();
  if (!c.eat(';')) c.fail("expected ';' after the degree");
  if (!c.eat('a')) c.fail("expected 'a'");
  if (!c.eat('=')) c.fail("expected '=' after a");
  std::vector<Int> A;
  A.push_back(c.integer());
  while (c.eat(',')) A.push_back(c.integer());
  if (!c.done()) c.fail("unexpected trailing text");
  return GeneratorSet(d, std::move(A));  // the constructor validates 0, d in A
}

mpq_class parse_rational(Cursor& c) {
  // integers stay below 16 digits here, so the narrowing to long is exact
  const long num = static_cast<long>(c.integer());
  if (c.eat('/')) {
    const long den = static_cast<long>(c.integer());
    if (den == 0) c.fail("zero denominator");
    return mpq_class(num) / den;
  }
  return mpq_class(num);
}

}  // namespace

IdealSpec parse_ideal(const std::string& text) {
  Cursor c{text};
  if (c.done()) throw InputError("empty ideal specification");
  if (c.peek() == 'd') {
    GeneratorSet E = parse_direct(c);
    return {text, std::move(E)};
  }
  std::vector<Monomial2> monomials;
  monomials.push_back(parse_monomial(c));
  while (c.eat(',')) monomials.push_back(parse_monomial(c));
  if (!c.done()) c.fail("unexpected trailing text");
  return {text, resolve(monomials)};
}

HomogeneousForm2 parse_form(const std::string& text) {
  Cursor c{text};
  std::map<Int, mpq_class> terms;  // y-exponent -> coefficient
  Int d = -1;
  bool first = true;
  while (!c.done()) {
    mpq_class sign = 1;
    if (c.eat('+')) {
    } else if (c.eat('-')) {
      sign = -1;
    } else if (!first) {
      c.fail("expected '+' or '-' between terms");
    }
    first = false;
    mpq_class coef = sign;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coef = sign * parse_rational(c);
      c.eat('*');
    }
    const Monomial2 m = parse_monomial(c);
    const Int deg = m.i + m.j;
    if (d < 0) d = deg;
    if (deg != d) throw InputError("form terms must all have the same degree");
    terms[m.j] += coef;
  }
  if (d < 1) throw InputError("empty form");
  HomogeneousForm2 f{d, {}};
  for (auto& [a, q] : terms)
    if (q != 0) f.coeffs.emplace(a, std::move(q));
  if (f.coeffs.empty()) throw InputError("zero form");
  return f;
}

std::pair<HomogeneousForm2, HomogeneousForm2> parse_form_pair(const std::string& text) {
  const size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw InputError("expected two forms separated by '|'");
  if (text.find('|', bar + 1) != std::string::npos)
    throw InputError("expected exactly one '|' separator");
  HomogeneousForm2 f = parse_form(text.substr(0, bar));
  HomogeneousForm2 g = parse_form(text.substr(bar + 1));
  if (f.d != g.d) throw InputError("the two forms must have the same degree");
  return {std::move(f), std::move(g)};
}

}  // namespace rrmono
