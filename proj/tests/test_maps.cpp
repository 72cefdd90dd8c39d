#include <random>

#include "crlab/errors.hpp"
#include "crlab/map_checker.hpp"
#include "crlab/parser.hpp"
#include "crlab/resultant.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace crlab;
using testsupport::surface;

namespace {

const char* kSphere = "z2 + conj(z2) + z1*conj(z1)";
const char* kCubicRigid = "(w - conj(w))/(2*i) - ((w + conj(w))/2)^3 * z1*conj(z1)";
// Im w' = 2 Re w' theta / (1 - theta^2) with theta^3 + theta = |z'|^2, theta eliminated.
const char* kCubicThetaTarget =
    "4*((w+conj(w))/2)^2*((w-conj(w))/(2*i)) + 4*((w-conj(w))/(2*i))^3"
    " - 8*((w+conj(w))/2)^3*z1*conj(z1) - 8*((w+conj(w))/2)*((w-conj(w))/(2*i))^2*z1*conj(z1)"
    " - ((w-conj(w))/(2*i))^3*(z1*conj(z1))^2";

PolyMap map_of(const HypersurfaceSpec& m, const std::string& text) {
  return PolyMap{parse_expression_list(text, m.arena), {}};
}

Point origin(std::size_t n) { return Point(n, Coeff(0)); }

const char* kReflectionSurface = "z2 + conj(z2) + z1*conj(z1) + z1^2*conj(z1)^2";

}  // namespace

TEST_CASE("maps_into examples") {
  const auto sphere = surface(2, kSphere);
  CHECK(maps_into(sphere, sphere, map_of(sphere, "z1, z2")));
  CHECK(maps_into(sphere, sphere, map_of(sphere, "2*z1, 4*z2")));
  CHECK(pullback(sphere, map_of(sphere, "2*z1, 4*z2")) == Coeff(4) * sphere.rho);
  CHECK_FALSE(maps_into(sphere, sphere, map_of(sphere, "z1, z2 + 1")));
  CHECK_THROWS_AS(maps_into(sphere, sphere, map_of(sphere, "conj(z1), z2")), ValidationError);
}

TEST_CASE("cubic theta target is the eliminant of theta") {
  // Res_theta(T (1 - theta^2) - 2 S theta, theta^3 + theta - u) with S = Re w,
  // T = Im w, u = |z|^2, computed here with the library's resultant.
  const auto a = VariableArena::make(2);
  const std::size_t th = a->index_of("X");
  const Polynomial S = parse_expression("(w+conj(w))/2", a);
  const Polynomial T = parse_expression("(w-conj(w))/(2*i)", a);
  const Polynomial U = parse_expression("z1*conj(z1)", a);
  const Polynomial Th = Polynomial::variable(a, th);
  const Polynomial one = Polynomial::constant(a, Coeff(1));
  const Polynomial p = T * (one - Th * Th) - Coeff(2) * S * Th;
  const Polynomial q = Th.pow(3) + Th - U;
  const Polynomial res = resultant(p, q, th);
  const auto target = surface(2, kCubicThetaTarget, {Coeff(0), Coeff(1)});
  CHECK((res == target.rho || res == -target.rho));
}

TEST_CASE("(zw, w^2) sends the cubic rigid surface into the theta target") {
  const auto m = surface(2, kCubicRigid);
  const auto target = surface(2, kCubicThetaTarget, {Coeff(0), Coeff(1)});
  const auto h = map_of(m, "z1*z2, z2^2");
  CHECK(maps_into(m, target, h));
  CHECK_FALSE(maps_into(m, target, map_of(m, "z1*z2, z2^2 + z2")));
  const auto j = jacobian_determinant(m, h);
  CHECK(j.determinant == parse_expression("2*z2^2", m.arena));
  CHECK(j.nonvanishing_on_m);
}

TEST_CASE("jacobian examples") {
  const auto sphere = surface(2, kSphere);
  auto j = jacobian_determinant(sphere, map_of(sphere, "z1, z2"));
  CHECK(j.determinant == Polynomial::constant(sphere.arena, Coeff(1)));
  CHECK(j.nonvanishing_on_m);
  j = jacobian_determinant(sphere, map_of(sphere, "z1, z1"));
  CHECK(j.determinant.is_zero());
  CHECK_FALSE(j.nonvanishing_on_m);
  CHECK_THROWS_AS(jacobian_determinant(sphere, map_of(sphere, "z1")), ValidationError);
}

TEST_CASE("property: jacobian determinant is multiplicative under composition") {
  std::mt19937 rng(51);
  const auto a = VariableArena::make(2);
  const std::vector<std::size_t> slots{0, 1};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Polynomial> g, h;
    for (int k = 0; k < 2; ++k) {
      g.push_back(testsupport::random_poly(a, slots, 2, 3, rng));
      h.push_back(testsupport::random_poly(a, slots, 2, 3, rng));
    }
    std::vector<Polynomial> images;
    for (std::size_t v = 0; v < a->size(); ++v) images.push_back(Polynomial::variable(a, v));
    images[0] = h[0];
    images[1] = h[1];
    std::vector<Polynomial> gh{g[0].compose(images, a), g[1].compose(images, a)};
    const Polynomial lhs = jacobian_determinant(gh, 2);
    const Polynomial rhs = jacobian_determinant(g, 2).compose(images, a) * jacobian_determinant(h, 2);
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("algebraicity certificate examples") {
  const auto sphere = surface(2, kSphere);
  const std::size_t x = sphere.arena->index_of("X");
  auto P = [&](const char* s) { return parse_expression(s, sphere.arena); };
  CHECK(algebraicity_certificate(sphere, P("z1"), P("X - z1"), x));
  const auto flat = surface(2, "(w - conj(w))/(2*i)");
  CHECK(algebraicity_certificate(flat, parse_expression("conj(z2)", flat.arena),
                                 parse_expression("X - z2", flat.arena), x));
  CHECK_FALSE(algebraicity_certificate(sphere, P("z1*conj(z1)"), P("X - z2"), x));
  // |z|^2 = -2 Re w on the sphere, but no holomorphic identity captures it.
  CHECK(algebraicity_certificate(sphere, P("z1*conj(z1)"), P("X + z2"), x) == false);
  CHECK_THROWS_AS(algebraicity_certificate(sphere, P("z1"), P("z1"), x), ValidationError);
  CHECK_THROWS_AS(algebraicity_certificate(sphere, P("z1"), P("X - conj(z1)"), x), ValidationError);
}

TEST_CASE("algebraicity with an auxiliary algebraic function") {
  // f = sqrt(1 + z1) enters as an auxiliary slot with relation f^2 - 1 - z1.
  const auto a = VariableArena::make(2)->extended({"r", true});
  HypersurfaceSpec m = surface(2, kCubicRigid);
  m.rho = m.rho.embed(a);
  m.arena = a;
  const Polynomial rel = parse_expression("r^2 - 1 - z1", a);
  const Polynomial f = parse_expression("r", a);
  const std::size_t x = a->index_of("X");
  CHECK(algebraicity_certificate(m, f, parse_expression("X^2 - 1 - z1", a), x, {rel}));
  CHECK(algebraicity_certificate(m, f, parse_expression("(X^2 - 1 - z1)*(X + z2)", a), x, {rel}));
  CHECK_FALSE(algebraicity_certificate(m, f, parse_expression("X - 1", a), x, {rel}));
  CHECK_FALSE(algebraicity_certificate(m, f, parse_expression("X^2 - 1", a), x, {rel}));
}

TEST_CASE("reflection system fixtures") {
  const auto heis = surface(2, kSphere);
  auto sys = reflection_system(heis, map_of(heis, "z1, 0, z2"), origin(2));
  REQUIRE(sys.betas.size() == 1);
  CHECK(sys.betas[0] == MultiIndex{1});
  CHECK(sys.v[0][0] == Polynomial::constant(heis.arena, Coeff(1)));
  REQUIRE(sys.xi().has_value());
  CHECK((*sys.xi())[0] == parse_expression("-z1", heis.arena));
  CHECK((*sys.eta())[0].is_zero());
  CHECK(sys.f_identity);
  CHECK(sys.sphere_identity);
  CHECK(sys.rearranged_identity);

  sys = reflection_system(heis, map_of(heis, "2*z1, 0, 4*z2"), origin(2));
  CHECK(sys.v[0][0] == Polynomial::constant(heis.arena, Coeff(2)));
  CHECK((*sys.xi())[0] == parse_expression("-2*z1", heis.arena));
  CHECK(sys.f_identity);
  CHECK(sys.rearranged_identity);

  const auto refl = surface(2, kReflectionSurface);
  sys = reflection_system(refl, map_of(refl, "z1, z1^2, z2"), origin(2));
  CHECK((*sys.eta())[0] == parse_expression("2*conj(z1)", refl.arena));
  CHECK((*sys.xi())[0] == parse_expression("-(z1 + 2*z1^2*conj(z1))", refl.arena));
  CHECK(sys.f_identity);
  CHECK(sys.sphere_identity);
  CHECK(sys.rearranged_identity);
  // The same identity with a = eta . conj(eta) does not hold here.
  Polynomial literal_a(refl.arena);
  literal_a += sys.eta_numerator[0] * sys.eta_numerator[0].conjugate_swap();
  CHECK_FALSE(radical_membership(
      rearranged_identity_residual(sys, literal_a, sys.b_numerator, sys.c_numerator), refl.ideal()));

  try {
    reflection_system(heis, map_of(heis, "0, 0, 0"), origin(2));
    FAIL("expected NoIndexFound");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "NoIndexFound");
  }
  try {
    reflection_system(heis, map_of(heis, "z1, 0, z2 + z1"), origin(2));
    FAIL("expected NotIntoSphere");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "NotIntoSphere");
  }
}

TEST_CASE("property: reflection identities survive rational unitary rotations") {
  const auto heis = surface(2, kSphere);
  // (3/5, 4/5) mixes the first two target coordinates.
  auto sys = reflection_system(heis, map_of(heis, "3/5*z1, 4/5*z1, z2"), origin(2));
  CHECK(sys.f_identity);
  CHECK(sys.sphere_identity);
  CHECK(sys.rearranged_identity);

  const auto refl = surface(2, kReflectionSurface);
  const auto base = reflection_system(refl, map_of(refl, "z1, z1^2, z2"), origin(2));
  for (const char* rotated : {"3/5*z1 + 4/5*z1^2, -4/5*z1 + 3/5*z1^2, z2",
                              "z1^2, z1, z2", "i*z1, -z1^2, z2",
                              "5/13*z1 - 12/13*i*z1^2, 12/13*z1 + 5/13*i*z1^2, z2"}) {
    const auto sys2 = reflection_system(refl, map_of(refl, rotated), origin(2));
    CHECK(sys2.f_identity == base.f_identity);
    CHECK(sys2.sphere_identity);
    CHECK(sys2.rearranged_identity);
  }

  // C^3 source: the sphere in C^3 mapped into C^4 with a rotated pair.
  const auto s3 = surface(3, "z3 + conj(z3) + z1*conj(z1) + z2*conj(z2)");
  for (const char* h : {"z1, z2, 0, z3", "z2, z1, 0, z3", "3/5*z1 + 4/5*z2, 4/5*z1 - 3/5*z2, 0, z3",
                        "3/5*z1, z2, 4/5*z1, z3"}) {
    const auto sys3 = reflection_system(s3, map_of(s3, h), origin(3));
    CHECK(sys3.betas.size() == 2);
    CHECK(sys3.f_identity);
    CHECK(sys3.sphere_identity);
    CHECK(sys3.rearranged_identity);
  }
  // Both tangential derivatives of the first row are nonzero: a Householder
  // rotation is needed and is rational here.
  const auto sys4 = reflection_system(s3, map_of(s3, "3/5*z1 + 4/5*z2, 4/5*z1 - 3/5*z2, 0, z3"), origin(3));
  CHECK(sys4.rotation[0][1] != Coeff(0));
  CHECK(sys4.f_identity);
  // A unitary mix with entries of modulus 1/sqrt(2) cannot be undone by a
  // Gaussian-rational rotation.
  try {
    reflection_system(s3, map_of(s3, "(1+i)/2*z1 + (1-i)/2*z2, (1-i)/2*z1 + (1+i)/2*z2, 0, z3"), origin(3));
    FAIL("expected IrrationalRotationRequired");
  } catch (const ValidationError& e) {
    CHECK(e.kind() == "IrrationalRotationRequired");
  }
}
