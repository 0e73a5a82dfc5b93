#include "rrmono/redcheck.hpp"

#include <algorithm>

#include "rrmono/errors.hpp"

namespace rrmono {

bool GradedSubspace::insert(std::vector<mpq_class> v) {
  const size_t dim = static_cast<size_t>(degree) + 1;
  if (v.size() != dim) throw InternalCheckError("subspace vector length mismatch");
  for (size_t k = 0; k < rows.size(); ++k) {
    const size_t p = static_cast<size_t>(pivots[k]);
    if (v[p] == 0) continue;
    const mpq_class c = v[p];
    for (size_t i = p; i < dim; ++i) v[i] -= c * rows[k][i];
  }
  Int piv = -1;
  for (size_t i = 0; i < dim; ++i)
    if (v[i] != 0) {
      piv = static_cast<Int>(i);
      break;
    }
  if (piv < 0) return false;
  const mpq_class lead = v[static_cast<size_t>(piv)];
  for (auto& x : v) x /= lead;
  for (size_t k = 0; k < rows.size(); ++k) {
    mpq_class& c = rows[k][static_cast<size_t>(piv)];
    if (c == 0) continue;
    const mpq_class f = c;
    for (size_t i = static_cast<size_t>(piv); i < dim; ++i)
      rows[k][i] -= f * v[i];
  }
  const auto pos = std::lower_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
  pivots.insert(pivots.begin() + pos, piv);
  rows.insert(rows.begin() + pos, std::move(v));
  return true;
}

namespace {

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; p prime and a != 0 mod p
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    const long long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw InputError("coefficient not invertible modulo the chosen prime");
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((__uint128_t)a * b % p);
}

}  // namespace

bool ModSubspace::insert(std::vector<std::uint64_t> v) {
  const size_t dim = static_cast<size_t>(degree) + 1;
  if (v.size() != dim) throw InternalCheckError("subspace vector length mismatch");
  for (size_t k = 0; k < rows.size(); ++k) {
    const size_t pv = static_cast<size_t>(pivots[k]);
    if (v[pv] == 0) continue;
    const std::uint64_t c = v[pv];
    for (size_t i = pv; i < dim; ++i)
      v[i] = (v[i] + p - mod_mul(c, rows[k][i], p)) % p;
  }
  Int piv = -1;
  for (size_t i = 0; i < dim; ++i)
    if (v[i] != 0) {
      piv = static_cast<Int>(i);
      break;
    }
  if (piv < 0) return false;
  const std::uint64_t inv = mod_inverse(v[static_cast<size_t>(piv)], p);
  for (auto& x : v) x = mod_mul(x, inv, p);
  for (size_t k = 0; k < rows.size(); ++k) {
    const std::uint64_t c = rows[k][static_cast<size_t>(piv)];
    if (c == 0) continue;
    for (size_t i = static_cast<size_t>(piv); i < dim; ++i)
      rows[k][i] = (rows[k][i] + p - mod_mul(c, v[i], p)) % p;
  }
  const auto pos = std::lower_bound(pivots.begin(), pivots.end(), piv) - pivots.begin();
  pivots.insert(pivots.begin() + pos, piv);
  rows.insert(rows.begin() + pos, std::move(v));
  return true;
}

bool sylvester_nondegenerate(const HomogeneousForm2& f, const HomogeneousForm2& g) {
  const Int d = f.d;
  GradedSubspace sp(2 * d - 1);
  const size_t dim = static_cast<size_t>(2 * d);
  for (const HomogeneousForm2* h : {&f, &g})
    for (Int k = 0; k < d; ++k) {
      std::vector<mpq_class> v(dim, mpq_class(0));
      for (const auto& [a, q] : h->coeffs) v[static_cast<size_t>(a + k)] = q;
      sp.insert(std::move(v));
    }
  return sp.rank() == 2 * d;
}

namespace {

void validate_pair(SumsetCache& cache, const HomogeneousForm2& f,
                   const HomogeneousForm2& g) {
  const GeneratorSet& E = cache.gen_set();
  for (const HomogeneousForm2* h : {&f, &g}) {
    if (h->d != E.d)
      throw InputError("form degree " + std::to_string(h->d) +
                       " differs from the ideal degree " + std::to_string(E.d));
    if (h->coeffs.empty())
      throw InputError("degenerate reduction candidate: zero form");
    for (const auto& [a, q] : h->coeffs) {
      if (q == 0) throw InputError("zero coefficient stored in a form");
      if (a < 0 || a > E.d || !std::binary_search(E.A.begin(), E.A.end(), a))
        throw InputError("forms not in I: monomial with y-exponent " +
                         std::to_string(a) + " is outside the generator support");
    }
  }
  if (!sylvester_nondegenerate(f, g))
    throw InputError(
        "degenerate reduction candidate: the forms do not form a system of parameters");
}

// Core rank test, input already validated.  The products f*m, g*m for the
// degree-nd monomial generators m of I^n live inside the degree-(n+1)d piece
// of I^(n+1) automatically (supports add), so spanning it is a rank count.
bool reduction_rank_test(SumsetCache& cache, const HomogeneousForm2& f,
                         const HomogeneousForm2& g, Int n, const FieldMode& mode) {
  const Int d = cache.gen_set().d;
  const Int target = cache.row(n + 1).count();
  const Int dim = (n + 1) * d + 1;
  const std::vector<Int> cs = cache.set_of(n);
  if (mode.p == 0) {
    GradedSubspace sp(dim - 1);
    for (Int c : cs)
      for (const HomogeneousForm2* h : {&f, &g}) {
        std::vector<mpq_class> v(static_cast<size_t>(dim), mpq_class(0));
        for (const auto& [a, q] : h->coeffs) v[static_cast<size_t>(c + a)] = q;
        if (sp.insert(std::move(v)) && sp.rank() == target) return true;
      }
    return sp.rank() == target;
  }
  ModSubspace sp(mode.p, dim - 1);
  for (Int c : cs)
    for (const HomogeneousForm2* h : {&f, &g}) {
      std::vector<std::uint64_t> v(static_cast<size_t>(dim), 0);
      for (const auto& [a, q] : h->coeffs) {
        const std::uint64_t p = mode.p;
        mpz_class num = q.get_num(), den = q.get_den();
        std::uint64_t nm = mpz_fdiv_ui(num.get_mpz_t(), p);
        std::uint64_t dn = mpz_fdiv_ui(den.get_mpz_t(), p);
        if (dn == 0)
          throw InputError("coefficient denominator vanishes modulo the prime");
        v[static_cast<size_t>(c + a)] = mod_mul(nm, mod_inverse(dn, p), p);
      }
      if (sp.insert(std::move(v)) && sp.rank() == target) return true;
    }
  return sp.rank() == target;
}

}  // namespace

bool is_reduction_at(SumsetCache& cache, const HomogeneousForm2& f,
                     const HomogeneousForm2& g, Int n, FieldMode mode) {
  if (n < 0) throw InputError("negative power in reduction test");
  validate_pair(cache, f, g);
  return reduction_rank_test(cache, f, g, n, mode);
}

std::optional<Int> reduction_number_of(SumsetCache& cache, const HomogeneousForm2& f,
                                       const HomogeneousForm2& g, Int cap,
                                       FieldMode mode) {
  if (cap < 0) throw InputError("negative reduction-number cap");
  validate_pair(cache, f, g);
  for (Int n = 0; n <= cap; ++n)
    if (reduction_rank_test(cache, f, g, n, mode)) return n;
  return std::nullopt;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

ReductionSample sample_reductions(SumsetCache& cache, Int trials, std::uint64_t seed,
                                  FieldMode mode) {
  if (trials < 1) throw InputError("at least one sampling trial is required");
  const GeneratorSet& E = cache.gen_set();
  const Int regR = reg_rees(cache);
  const Int regF = reg_fiber_with(cache, regR);
  const RRIndices ix = rr_indices(cache, regR, regF);
  const Int cap = regR + 1;

  ReductionSample out;
  out.s_star = ix.s_star;
  for (Int t = 0; t < trials; ++t) {
    HomogeneousForm2 f{E.d, {}}, g{E.d, {}};
    if (t == 0) {
      f.coeffs[0] = 1;   // x^d
      g.coeffs[E.d] = 1; // y^d
    } else {
      std::uint64_t state = splitmix64(seed + static_cast<std::uint64_t>(t));
      auto next_coeff = [&state]() {
        state = splitmix64(state);
        return static_cast<Int>(state % 7) - 3;  // uniform in [-3, 3]
      };
      while (true) {
        f.coeffs.clear();
        g.coeffs.clear();
        for (Int a : E.A) {
          if (Int c = next_coeff(); c != 0) f.coeffs[a] = static_cast<long>(c);
          if (Int c = next_coeff(); c != 0) g.coeffs[a] = static_cast<long>(c);
        }
        if (!f.coeffs.empty() && !g.coeffs.empty() && sylvester_nondegenerate(f, g))
          break;
        ++out.rejected;
      }
    }
    const std::optional<Int> r = reduction_number_of(cache, f, g, cap, mode);
    if (!r)
      throw InternalCheckError("sampled parameter pair admitted no reduction number <= regR+1");
    if (*r > ix.s_star && *r != regR)
      throw InternalCheckError("sampled reduction number " + std::to_string(*r) +
                               " above s* must equal reg R");
    ++out.histogram[*r];
    ++out.trials_done;
    if (out.min_r < 0 || *r < out.min_r) out.min_r = *r;
    if (*r > out.max_r) out.max_r = *r;
  }
  // Parameter ideals sit outside the conjecture's scope: every reduction
  // number is 0 while s* >= 1 by convention, so the comparison is vacuous.
  out.conjecture_flag = !E.is_parameter() && (out.max_r < ix.s_star);
  return out;
}

}  // namespace rrmono
