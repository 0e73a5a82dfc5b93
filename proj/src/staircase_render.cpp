#include "rrmono/staircase_render.hpp"

#include <algorithm>
#include <sstream>

namespace rrmono {

namespace {

struct Scene {
  Int clip;  // draw [0, clip] x [0, clip]
  MonomialIdeal2 power_n;
  MonomialIdeal2 closure;
  std::vector<Monomial2> extra;  // closure members outside I^n (all lie in the clip box)
};

Scene build_scene(SumsetCache& cache, Int n, Int regR) {
  Scene sc;
  const Int d = cache.gen_set().d;
  sc.clip = n * d + d;
  sc.power_n = power_ideal(cache, n);
  sc.closure = rr_closure(cache, n, regR).closure;
  for (Int i = 0; i <= sc.clip; ++i)
    for (Int j = 0; j <= sc.clip; ++j) {
      const Monomial2 m{i, j};
      if (contains(sc.closure, m) && !contains(sc.power_n, m))
        sc.extra.push_back(m);
    }
  return sc;
}

}  // namespace

std::string render_ascii(SumsetCache& cache, Int n, Int regR) {
  const Scene sc = build_scene(cache, n, regR);
  std::ostringstream os;
  os << "I^" << n << " staircase, window [0," << sc.clip << "]^2"
     << " ('#' generator, '.' member, '*' closure-only)\n";
  for (Int j = sc.clip; j >= 0; --j) {
    std::string line;
    for (Int i = 0; i <= sc.clip; ++i) {
      const Monomial2 m{i, j};
      char ch = ' ';
      if (std::binary_search(sc.power_n.gens.begin(), sc.power_n.gens.end(), m))
        ch = '#';
      else if (contains(sc.power_n, m))
        ch = '.';
      else if (contains(sc.closure, m))
        ch = '*';
      line += ch;
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << '|' << line << '\n';
  }
  os << '+';
  for (Int i = 0; i <= sc.clip; ++i) os << '-';
  os << '\n';
  return os.str();
}

std::string render_svg(SumsetCache& cache, Int n, Int regR) {
  const Scene sc = build_scene(cache, n, regR);
  const Int cell = 14, margin = 28;
  const Int size = 2 * margin + sc.clip * cell;
  auto px = [&](Int i) { return margin + i * cell; };
  auto py = [&](Int j) { return size - margin - j * cell; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size
     << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<desc>staircase of I^" << n << " with its closure</desc>\n";
  os << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  // light lattice grid
  for (Int k = 0; k <= sc.clip; ++k) {
    os << "<line x1=\"" << px(k) << "\" y1=\"" << py(0) << "\" x2=\"" << px(k)
       << "\" y2=\"" << py(sc.clip) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << px(0) << "\" y1=\"" << py(k) << "\" x2=\"" << px(sc.clip)
       << "\" y2=\"" << py(k) << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
  }
  // axes
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(sc.clip)
     << "\" y2=\"" << py(0) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  os << "<line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(0)
     << "\" y2=\"" << py(sc.clip) << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  // staircase boundary of I^n
  os << "<path d=\"M " << px(sc.power_n.gens.front().i) << ' ' << py(sc.clip);
  for (size_t k = 0; k < sc.power_n.gens.size(); ++k) {
    const Monomial2& g = sc.power_n.gens[k];
    os << " L " << px(g.i) << ' ' << py(g.j);
    const Int next_i = k + 1 < sc.power_n.gens.size() ? sc.power_n.gens[k + 1].i : sc.clip;
    os << " L " << px(std::min(next_i, sc.clip)) << ' ' << py(g.j);
  }
  os << "\" fill=\"none\" stroke=\"#3366cc\" stroke-width=\"2\"/>\n";
  // closure-only points first so generators draw on top
  for (const Monomial2& m : sc.extra)
    os << "<circle cx=\"" << px(m.i) << "\" cy=\"" << py(m.j)
       << "\" r=\"4\" fill=\"white\" stroke=\"#cc3333\" stroke-width=\"2\"/>\n";
  for (const Monomial2& g : sc.power_n.gens)
    if (g.i <= sc.clip && g.j <= sc.clip)
      os << "<circle cx=\"" << px(g.i) << "\" cy=\"" << py(g.j)
         << "\" r=\"4\" fill=\"#3366cc\"/>\n";
  os << "<text x=\"" << px(sc.clip) - 8 << "\" y=\"" << py(0) + 18
     << "\" font-family=\"monospace\" font-size=\"12\">i</text>\n";
  os << "<text x=\"" << px(0) - 16 << "\" y=\"" << py(sc.clip) + 4
     << "\" font-family=\"monospace\" font-size=\"12\">j</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace rrmono
