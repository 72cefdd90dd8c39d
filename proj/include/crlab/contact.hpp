#pragma once

#include <optional>
#include <vector>

#include "crlab/hypersurface.hpp"

namespace crlab {

// Arena for curve parameters: slot "t" with partner conj(t).
ArenaPtr curve_arena();

// Z = gamma(t); components are polynomials in t over curve_arena().
struct HoloCurve {
  std::vector<Polynomial> components;

  Point base_point() const;  // gamma(0)
};

// Lowest t-degree of gamma(t) - gamma(0). Throws ValidationError(ConstantCurve).
int curve_order(const HoloCurve& gamma);

struct ContactRatio {
  bool inside = false;  // rho(gamma, conj gamma) vanishes identically
  int ord_rho = 0;
  int ord_gamma = 0;
  Rational ratio;
};

// rho(gamma(t), conj(gamma)(conj t)) with t and conj t independent.
Polynomial compose_along(const HypersurfaceSpec& m, const HoloCurve& gamma);

// Throws ValidationError(BasePointMismatch) when gamma(0) is not on M or
// differs from the given point.
ContactRatio contact_ratio(const HypersurfaceSpec& m, const HoloCurve& gamma,
                           const std::optional<Point>& p = std::nullopt);

struct ContactEstimate {
  bool infinite = false;            // a curve inside M was found
  std::optional<HoloCurve> witness;  // the curve inside M, or the best curve
  unsigned lower_bound = 0;          // ceil of the best ratio when finite
  Rational best_ratio;
  unsigned jet_degree = 0;
  unsigned order_cap = 0;
  std::size_t templates_tried = 0;
};

// Certified lower bound for m_p from a deterministic template search: the
// non-pivot coordinates run over c * t^e with c in {1, -1, i, 2} (or fixed),
// e <= jet_degree; the pivot coordinate is solved order by order so that
// rho(gamma(t), conj p) vanishes to order order_cap.
ContactEstimate estimate_mp(const HypersurfaceSpec& m, const Point& p, unsigned jet_degree,
                            unsigned order_cap);

}  // namespace crlab
