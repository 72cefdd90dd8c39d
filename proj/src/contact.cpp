#include "crlab/contact.hpp"

#include <algorithm>

#include "crlab/cr_calculus.hpp"
#include "crlab/errors.hpp"

namespace crlab {

ArenaPtr curve_arena() {
  static const ArenaPtr a = VariableArena::make(1, {{"t", true}});
  return a;
}

Point HoloCurve::base_point() const {
  Point p;
  for (const auto& c : components) p.push_back(c.constant_term());
  return p;
}

int curve_order(const HoloCurve& gamma) {
  int best = -1;
  for (const auto& c : gamma.components) {
    const Polynomial moving = c - Polynomial::constant(c.arena(), c.constant_term());
    if (moving.is_zero()) continue;
    const int d = moving.min_degree();
    if (best < 0 || d < best) best = d;
  }
  if (best < 0) throw ValidationError("ConstantCurve", "curve is constant");
  return best;
}

namespace {

Polynomial compose_with(const HypersurfaceSpec& m, const HoloCurve& gamma,
                        const std::optional<Point>& frozen_conj) {
  const ArenaPtr ca = curve_arena();
  std::vector<Polynomial> images(m.arena->size(), Polynomial(ca));
  for (std::size_t k = 0; k < m.n; ++k) {
    images[m.arena->holo(k)] = gamma.components[k].embed(ca);
    images[m.arena->anti(k)] = frozen_conj
                                   ? Polynomial::constant(ca, (*frozen_conj)[k].conj())
                                   : gamma.components[k].embed(ca).conjugate_swap();
  }
  return m.rho.compose(images, ca);
}

Coeff t_coefficient(const Polynomial& f, std::size_t t, unsigned k) {
  for (const auto& term : f.terms()) {
    if (term.exps[t] == k) return term.coeff;
  }
  return Coeff(0);
}

}  // namespace

Polynomial compose_along(const HypersurfaceSpec& m, const HoloCurve& gamma) {
  if (gamma.components.size() != m.n) {
    throw ValidationError("BadCurve", "curve has " + std::to_string(gamma.components.size()) +
                                          " components, expected " + std::to_string(m.n));
  }
  return compose_with(m, gamma, std::nullopt);
}

ContactRatio contact_ratio(const HypersurfaceSpec& m, const HoloCurve& gamma,
                           const std::optional<Point>& p) {
  if (gamma.components.size() != m.n) {
    throw ValidationError("BadCurve", "curve has the wrong number of components");
  }
  const Point base = gamma.base_point();
  if ((p && *p != base) || !point_membership(m, base)) {
    throw ValidationError("BasePointMismatch", "curve does not start at a point of M");
  }
  ContactRatio r;
  r.ord_gamma = curve_order(gamma);
  const Polynomial f = compose_along(m, gamma);
  if (f.is_zero()) {
    r.inside = true;
    return r;
  }
  r.ord_rho = f.min_degree();
  r.ratio = Rational(r.ord_rho, r.ord_gamma);
  r.ratio.canonicalize();
  return r;
}

ContactEstimate estimate_mp(const HypersurfaceSpec& m, const Point& p, unsigned jet_degree,
                            unsigned order_cap) {
  if (!point_membership(m, p)) throw ValidationError("OffSurface", "point is not on M");
  const ArenaPtr ca = curve_arena();
  const std::size_t t = ca->index_of("t");
  const Polynomial T = Polynomial::variable(ca, t);
  const std::size_t pivot = choose_pivot(m, p);
  const Coeff slope = m.rho.derivative(m.arena->holo(pivot)).evaluate(complexified_point(m.arena, p));
  internal_check(!slope.is_zero(), "pivot slope vanishes");

  ContactEstimate out;
  out.jet_degree = jet_degree;
  out.order_cap = order_cap;
  out.best_ratio = 0;

  const std::vector<Coeff> scalars{Coeff(1), Coeff(-1), Coeff::i(), Coeff(2)};
  // Choice per non-pivot coordinate: 0 = fixed, else (scalar, exponent).
  const std::size_t per = 1 + scalars.size() * jet_degree;
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < m.n; ++k) {
    if (k != pivot) others.push_back(k);
  }
  std::vector<std::size_t> choice(others.size(), 0);

  auto try_curve = [&](HoloCurve gamma) -> bool {
    ++out.templates_tried;
    // Solve the pivot coordinate so rho(gamma(t), conj p) = O(t^order_cap).
    for (unsigned k = 1; k < order_cap; ++k) {
      const Polynomial f = compose_with(m, gamma, p);
      const Coeff c = t_coefficient(f, t, k);
      if (c.is_zero()) continue;
      gamma.components[pivot] -= (c / slope) * T.pow(k);
    }
    int ord = -1;
    try {
      ord = curve_order(gamma);
    } catch (const ValidationError&) {
      return false;
    }
    const Polynomial f = compose_along(m, gamma);
    if (f.is_zero()) {
      out.infinite = true;
      out.witness = std::move(gamma);
      return true;
    }
    Rational ratio(f.min_degree(), ord);
    ratio.canonicalize();
    if (ratio > out.best_ratio) {
      out.best_ratio = ratio;
      out.witness = std::move(gamma);
    }
    return false;
  };

  auto base_curve = [&] {
    HoloCurve g;
    for (std::size_t k = 0; k < m.n; ++k) g.components.push_back(Polynomial::constant(ca, p[k]));
    return g;
  };

  // Template along the pivot direction alone.
  {
    HoloCurve g = base_curve();
    g.components[pivot] += T;
    if (try_curve(std::move(g))) return out;
  }
  while (!others.empty()) {
    // Odometer over choices, first coordinate fastest.
    std::size_t pos = 0;
    while (pos < choice.size() && ++choice[pos] == per) choice[pos++] = 0;
    if (pos == choice.size()) break;
    HoloCurve g = base_curve();
    for (std::size_t q = 0; q < others.size(); ++q) {
      if (choice[q] == 0) continue;
      const std::size_t e = 1 + (choice[q] - 1) / scalars.size();
      const Coeff& c = scalars[(choice[q] - 1) % scalars.size()];
      g.components[others[q]] += c * T.pow(static_cast<unsigned>(e));
    }
    if (try_curve(std::move(g))) return out;
  }
  Rational ceil_ratio = out.best_ratio;
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), ceil_ratio.get_num_mpz_t(), ceil_ratio.get_den_mpz_t());
  out.lower_bound = static_cast<unsigned>(q.get_ui());
  return out;
}

}  // namespace crlab
