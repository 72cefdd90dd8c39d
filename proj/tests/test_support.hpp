#pragma once

#include <random>
#include <vector>

#include "crlab/hypersurface.hpp"
#include "crlab/linalg.hpp"
#include "crlab/parser.hpp"
#include "crlab/polynomial.hpp"
#include "crlab/resultant.hpp"

namespace testsupport {

using namespace crlab;

inline Coeff random_coeff(std::mt19937& rng, bool gaussian = true) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  Rational re(num(rng), den(rng));
  re.canonicalize();
  Rational im(0);
  if (gaussian && rng() % 3 == 0) {
    im = Rational(num(rng), den(rng));
    im.canonicalize();
  }
  return Coeff(re, im);
}

// Random polynomial in the listed slots with total degree <= max_degree.
inline Polynomial random_poly(const ArenaPtr& arena, const std::vector<std::size_t>& slots,
                              unsigned max_degree, unsigned max_terms, std::mt19937& rng,
                              bool gaussian = true) {
  std::vector<Term> terms;
  const unsigned count = 1 + rng() % max_terms;
  for (unsigned k = 0; k < count; ++k) {
    Exponents e(arena->size(), 0);
    unsigned budget = rng() % (max_degree + 1);
    while (budget > 0) {
      e[slots[rng() % slots.size()]] += 1;
      --budget;
    }
    terms.push_back({e, random_coeff(rng, gaussian)});
  }
  return Polynomial::from_terms(arena, std::move(terms));
}

// Laplace expansion along the first row; independent of the Bareiss route.
inline Polynomial cofactor_det(const PolyMatrix& m, const ArenaPtr& arena) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(arena, Coeff(1));
  if (n == 1) return m[0][0];
  Polynomial sum(arena);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial t = m[0][c] * cofactor_det(minor, arena);
    if (c % 2 == 1) t = -t;
    sum += t;
  }
  return sum;
}

// Sylvester matrix built from scratch for the oracle route.
inline Polynomial sylvester_oracle(const Polynomial& p, const Polynomial& q, std::size_t v) {
  const ArenaPtr& arena = p.arena();
  const auto a = p.coefficients_in(v);
  const auto b = q.coefficients_in(v);
  const std::size_t m = a.size() - 1;
  const std::size_t n = b.size() - 1;
  PolyMatrix s(m + n, std::vector<Polynomial>(m + n, Polynomial(arena)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = a[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = b[n - k];
  }
  return cofactor_det(s, arena);
}

// Builds and validates a hypersurface from an expression at the origin
// (or the given base point).
inline HypersurfaceSpec surface(std::size_t n, const std::string& rho, Point p = {}) {
  const ArenaPtr a = VariableArena::make(n);
  if (p.empty()) p.assign(n, Coeff(0));
  return validate(parse_expression(rho, a), p);
}

// Rational points on a rigid hypersurface: pick z and the free real variable,
// then solve for the other one through phi.
inline std::vector<Point> on_surface_points(const HypersurfaceSpec& m, std::size_t count,
                                            std::mt19937& rng) {
  const auto rf = recognize_rigid_form(m);
  const auto* form = std::get_if<RigidNormalForm>(&rf);
  if (form == nullptr) return {};
  const ArenaPtr& a = m.arena;
  std::vector<Point> out;
  std::uniform_int_distribution<int> num(-3, 3);
  std::uniform_int_distribution<int> den(1, 3);
  auto small = [&] {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    return r;
  };
  while (out.size() < count) {
    std::vector<Coeff> vals(a->size(), Coeff(0));
    Point p(m.n, Coeff(0));
    for (std::size_t k = 0; k + 1 < m.n; ++k) {
      p[k] = Coeff(small(), small());
      vals[a->holo(k)] = p[k];
      vals[a->anti(k)] = p[k].conj();
    }
    const Rational s = small();
    vals[a->index_of("s")] = Coeff(s);
    const Coeff phi = form->phi.evaluate(vals);
    p[m.n - 1] = form->rotated ? Coeff(-phi.re(), s) : Coeff(s, phi.re());
    if (phi.im() == 0 && point_membership(m, p)) out.push_back(p);
  }
  return out;
}

// Staircase count for a monomial ideal in k variables: monomials not divisible
// by any generator, enumerated inside a box large enough to contain them all.
// Returns -1 if some axis is unbounded (infinite codimension).
inline long staircase_count(const std::vector<std::vector<unsigned>>& gens, std::size_t k) {
  std::vector<unsigned> bound(k, 0);
  for (std::size_t v = 0; v < k; ++v) {
    bool found = false;
    for (const auto& g : gens) {
      bool pure = true;
      for (std::size_t u = 0; u < k; ++u) {
        if (u != v && g[u] != 0) pure = false;
      }
      if (pure && g[v] > 0 && (!found || g[v] < bound[v])) {
        bound[v] = g[v];
        found = true;
      }
    }
    if (!found) return -1;
  }
  long count = 0;
  std::vector<unsigned> e(k, 0);
  while (true) {
    bool in_ideal = false;
    for (const auto& g : gens) {
      bool div = true;
      for (std::size_t u = 0; u < k; ++u) {
        if (g[u] > e[u]) div = false;
      }
      if (div) in_ideal = true;
    }
    if (!in_ideal) ++count;
    std::size_t u = 0;
    while (u < k && ++e[u] >= bound[u]) {
      e[u] = 0;
      ++u;
    }
    if (u == k) break;
  }
  return count;
}

// rho = a * v + b with gcd(a, b) = 1, hence irreducible; V(rho) is the
// closure of the graph v = -b / a, which is what the sampler draws from.
struct LinearPrincipal {
  Polynomial rho, a, b;
  std::size_t v = 0;
};

inline LinearPrincipal random_linear_principal(const ArenaPtr& arena, std::mt19937& rng) {
  const std::size_t slots = 2 * arena->dimension();
  while (true) {
    LinearPrincipal out;
    out.v = rng() % slots;
    std::vector<std::size_t> others;
    for (std::size_t k = 0; k < slots; ++k) {
      if (k != out.v) others.push_back(k);
    }
    out.a = random_poly(arena, others, 1, 2, rng) + Polynomial::constant(arena, Coeff(1 + rng() % 3));
    out.b = random_poly(arena, others, 2, 3, rng);
    if (out.a.is_zero() || out.b.is_zero()) continue;
    if (gcd(out.a, out.b).total_degree() > 0) continue;
    out.rho = out.a * Polynomial::variable(arena, out.v) + out.b;
    return out;
  }
}

// A multiple of a power of rho, or such a multiple plus a stray term.
inline Polynomial membership_candidate(const LinearPrincipal& inst, bool member, std::mt19937& rng) {
  const ArenaPtr& arena = inst.rho.arena();
  std::vector<std::size_t> slots;
  for (std::size_t k = 0; k < 2 * arena->dimension(); ++k) slots.push_back(k);
  Polynomial g = random_poly(arena, slots, 2, 3, rng);
  if (g.is_zero()) g = Polynomial::constant(arena, Coeff(1));
  Polynomial f = g * inst.rho.pow(1 + rng() % 2);
  if (!member) {
    Polynomial stray = random_poly(arena, slots, 2, 2, rng);
    while (stray.is_zero() || stray.divide_exact(inst.rho)) stray = random_poly(arena, slots, 2, 2, rng);
    f += stray;
  }
  return f;
}

// True when f vanishes at `samples` random Gaussian-rational points of V(rho).
inline bool vanishes_on_samples(const Polynomial& f, const LinearPrincipal& inst, std::mt19937& rng,
                                int samples = 12) {
  const ArenaPtr& arena = inst.rho.arena();
  int done = 0;
  while (done < samples) {
    std::vector<Coeff> pt(arena->size(), Coeff(0));
    for (std::size_t k = 0; k < arena->size(); ++k) pt[k] = random_coeff(rng);
    const Coeff av = inst.a.evaluate(pt);
    if (av.is_zero()) continue;
    pt[inst.v] = -inst.b.evaluate(pt) / av;
    if (!f.evaluate(pt).is_zero()) return false;
    ++done;
  }
  return true;
}

}  // namespace testsupport
