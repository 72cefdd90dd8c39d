#include <random>

#include "crlab/contact.hpp"
#include "crlab/errors.hpp"
#include "crlab/parser.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace crlab;
using testsupport::on_surface_points;
using testsupport::surface;

namespace {

const char* kSphere = "z2 + conj(z2) + z1*conj(z1)";
const char* kLinearRigid = "(w - conj(w))/(2*i) - ((w + conj(w))/2) * z1*conj(z1)";
const char* kQuartic = "(w - conj(w))/(2*i) - (z1*conj(z1))^2";

HoloCurve curve(const std::string& text) {
  return HoloCurve{parse_expression_list(text, curve_arena())};
}

Point origin(std::size_t n) { return Point(n, Coeff(0)); }

// Substitutes t -> t^k in every component.
HoloCurve reparametrize(const HoloCurve& g, unsigned k) {
  const ArenaPtr a = curve_arena();
  const std::size_t t = a->index_of("t");
  HoloCurve out;
  for (const auto& c : g.components) out.components.push_back(c.substitute(t, Polynomial::variable(a, t).pow(k)));
  return out;
}

}  // namespace

TEST_CASE("curve order examples") {
  CHECK(curve_order(curve("t, 0")) == 1);
  CHECK(curve_order(curve("t^2, t^3")) == 2);
  CHECK(curve_order(curve("0, t^5")) == 5);
  CHECK(curve_order(curve("1 + t^2, -1/2")) == 2);
  CHECK_THROWS_AS(curve_order(curve("1, 0")), ValidationError);
}

TEST_CASE("contact ratio examples") {
  const auto sphere = surface(2, kSphere);
  auto r = contact_ratio(sphere, curve("t, 0"));
  CHECK_FALSE(r.inside);
  CHECK(r.ord_rho == 2);
  CHECK(r.ratio == 2);
  CHECK(compose_along(sphere, curve("t, 0")) == parse_expression("t*conj(t)", curve_arena()));

  r = contact_ratio(sphere, curve("0, i*t"));
  CHECK(r.ord_rho == 1);
  CHECK(r.ratio == 1);
  CHECK(compose_along(sphere, curve("0, i*t")) == parse_expression("i*t - i*conj(t)", curve_arena()));

  CHECK(contact_ratio(surface(2, kLinearRigid), curve("t, 0")).inside);
  CHECK_THROWS_AS(contact_ratio(sphere, curve("1 + t, 0")), ValidationError);
  CHECK_THROWS_AS(contact_ratio(sphere, curve("t, 0"), Point{Coeff(1), Coeff(Rational(-1, 2))}),
                  ValidationError);
}

TEST_CASE("estimate_mp examples") {
  auto e = estimate_mp(surface(2, kSphere), origin(2), 3, 12);
  CHECK_FALSE(e.infinite);
  CHECK(e.lower_bound == 2);

  e = estimate_mp(surface(2, kLinearRigid), origin(2), 3, 12);
  CHECK(e.infinite);
  REQUIRE(e.witness.has_value());
  CHECK(e.witness->components[0] == parse_expression("t", curve_arena()));
  CHECK(e.witness->components[1].is_zero());

  e = estimate_mp(surface(2, kQuartic), origin(2), 3, 12);
  CHECK_FALSE(e.infinite);
  CHECK(e.lower_bound == 4);
  CHECK(e.jet_degree == 3);
  CHECK(e.order_cap == 12);
}

TEST_CASE("property: sphere contact bound is two at sampled points") {
  std::mt19937 rng(41);
  for (const auto& m : {surface(2, kSphere), surface(3, "z3 + conj(z3) + z1*conj(z1) + z2*conj(z2)")}) {
    auto points = on_surface_points(m, m.n == 2 ? 6 : 3, rng);
    points.push_back(m.base_point);
    for (const auto& p : points) {
      for (unsigned jet = 1; jet <= (m.n == 2 ? 4u : 2u); ++jet) {
        const auto e = estimate_mp(m, p, jet, 10);
        REQUIRE_FALSE(e.infinite);
        REQUIRE(e.lower_bound == 2);
      }
    }
  }
}

TEST_CASE("property: contact ratio is ord_rho over ord_gamma and at least one") {
  std::mt19937 rng(42);
  const std::vector<std::size_t> tslot{curve_arena()->index_of("t")};
  const std::vector<const char*> rhos{kSphere, kQuartic, kLinearRigid,
                                      "(w - conj(w))/(2*i) - ((w + conj(w))/2)^3 * z1*conj(z1)"};
  int checked = 0;
  for (const char* rho : rhos) {
    const auto m = surface(2, rho);
    const auto points = on_surface_points(m, 5, rng);
    for (const auto& p : points) {
      for (int trial = 0; trial < 6; ++trial) {
        HoloCurve g;
        for (std::size_t k = 0; k < 2; ++k) {
          Polynomial c = testsupport::random_poly(curve_arena(), tslot, 3, 3, rng);
          c -= Polynomial::constant(curve_arena(), c.constant_term());
          g.components.push_back(c + Polynomial::constant(curve_arena(), p[k]));
        }
        if (g.components[0].is_constant() && g.components[1].is_constant()) continue;
        const auto r = contact_ratio(m, g, p);
        if (r.inside) continue;
        ++checked;
        CHECK(r.ratio >= 1);
        CHECK(r.ratio * r.ord_gamma == r.ord_rho);
        for (unsigned k : {2u, 3u}) {
          const auto rk = contact_ratio(m, reparametrize(g, k), p);
          CHECK(rk.ord_gamma == static_cast<int>(k) * r.ord_gamma);
          CHECK(rk.ord_rho == static_cast<int>(k) * r.ord_rho);
          CHECK(rk.ratio == r.ratio);
        }
      }
    }
  }
  CHECK(checked > 50);
}
