#include <cmath>
#include <random>

#include "crlab/errors.hpp"
#include "crlab/flow.hpp"
#include "crlab/parser.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace crlab;
using testsupport::on_surface_points;
using testsupport::surface;

namespace {

const char* kTube3 = "(z3 - conj(z3))/(2*i) - z1*conj(z1)";

HoloField field(const ArenaPtr& a, const char* text) { return HoloField{parse_expression_list(text, a)}; }

double dist(const ComplexPoint& a, const ComplexPoint& b) {
  double s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) s += std::norm(a[j] - b[j]);
  return std::sqrt(s);
}

ComplexPoint to_complex(const Point& p) {
  ComplexPoint z;
  for (const auto& c : p) z.push_back(c.to_complex());
  return z;
}

}  // namespace

TEST_CASE("integrate flow examples") {
  const auto a1 = VariableArena::make(1);
  auto traj = integrate_flow(field(a1, "z1"), {Complex(1)}, Complex(1), 1000);
  CHECK(std::abs(traj.samples.back().z[0] - std::exp(1.0)) < 1e-10);
  CHECK(traj.samples.size() == 1001);
  CHECK(traj.samples.front().t == Complex(0));

  const auto a2 = VariableArena::make(2);
  traj = integrate_flow(field(a2, "1, 0"), {Complex(0), Complex(0)}, Complex(0, 1), 10);
  CHECK(dist(traj.samples.back().z, {Complex(0, 1), Complex(0)}) < 1e-12);

  const auto tube = surface(3, kTube3);
  traj = integrate_flow(field(tube.arena, "0, 1, 0"), {Complex(1), Complex(1), Complex(0, 1)}, Complex(1), 1000);
  CHECK(rho_residual(tube, traj) <= 1e-10);

  CHECK_THROWS_AS(integrate_flow(field(a1, "z1"), {Complex(1)}, Complex(1), 0), ValidationError);
  CHECK_THROWS_AS(integrate_flow(field(a1, "conj(z1)"), {Complex(1)}, Complex(1), 4), ValidationError);
}

TEST_CASE("overflow is reported as an infinite residual") {
  const auto a1 = VariableArena::make(1);
  const auto m = surface(1, "z1 + conj(z1)");
  // Z' = Z^3 blows up at t = 1/2 from Z0 = 1.
  const auto traj = integrate_flow(field(a1, "z1^3"), {Complex(1)}, Complex(4), 40);
  CHECK(traj.overflow);
  CHECK(std::isinf(rho_residual(m, traj)));
}

TEST_CASE("reparametrized flow examples") {
  const auto tube = surface(3, kTube3);
  const ComplexPoint z0{Complex(1), Complex(1), Complex(0, 1)};
  const auto a = field(tube.arena, "0, 1, 0");

  auto run = integrate_reparam(Polynomial::constant(tube.arena, Coeff(1)), a, tube, z0, Complex(1), 1000);
  for (std::size_t i = 0; i < run.k.size(); ++i) CHECK(std::abs(run.k[i] - run.psi.samples[i].t) < 1e-12);
  CHECK(*run.residuals.reparam_defect_max <= 1e-10);

  run = integrate_reparam(Polynomial(tube.arena), a, tube, z0, Complex(1), 100);
  for (std::size_t i = 0; i < run.k.size(); ++i) {
    CHECK(run.k[i] == Complex(0));
    CHECK(run.psi.samples[i].z == z0);
  }

  run = integrate_reparam(parse_expression("z3", tube.arena), a, tube, z0, Complex(1), 1000);
  CHECK(*run.residuals.reparam_defect_max <= 1e-6);
  CHECK(run.residuals.rho_max <= 1e-10);
  // K' = h(psi) = i, so psi(1) = (1, 1 + i, i).
  CHECK(dist(run.psi.samples.back().z, {Complex(1), Complex(1, 1), Complex(0, 1)}) < 1e-10);
}

TEST_CASE("reparametrized flow with a nonlinear field") {
  // h = z2 feeds back into the flow, so K is not linear in t.
  const auto tube = surface(3, kTube3);
  const ComplexPoint z0{Complex(1), Complex(1), Complex(0, 1)};
  const auto run = integrate_reparam(parse_expression("z2/4", tube.arena), field(tube.arena, "0, z2, 0"), tube, z0,
                                     Complex(1), 1000);
  // psi_2 solves y' = y^2 / 4, y(0) = 1: y(t) = 4 / (4 - t).
  CHECK(std::abs(run.psi.samples.back().z[1] - Complex(4.0 / 3.0)) < 1e-8);
  CHECK(*run.residuals.reparam_defect_max <= 1e-6);
  CHECK(run.residuals.rho_max <= 1e-10);
}

TEST_CASE("property: rk4 convergence factor") {
  const auto a1 = VariableArena::make(1);
  // Z' = Z^2 is nonlinear with solution 1 / (1 - t).
  const double f = convergence_factor(field(a1, "z1^2"), {Complex(1)}, Complex(0.5), 10);
  CHECK(f >= 12);
  CHECK(f <= 20);
  const auto a2 = VariableArena::make(2);
  const double g = convergence_factor(field(a2, "z2, -z1 + z1*z2/2"), {Complex(1), Complex(0, 1)},
                                      Complex(0.6, 0.4), 16);
  CHECK(g >= 12);
  CHECK(g <= 20);
}

TEST_CASE("property: flow group law") {
  const auto a2 = VariableArena::make(2);
  const auto a = field(a2, "z2, -z1 + z1*z2/2");
  const ComplexPoint z0{Complex(0.3), Complex(0.1, 0.2)};
  for (const auto& [s, t] : {std::pair{Complex(0.5), Complex(0.25)}, std::pair{Complex(0, 0.4), Complex(0.3, 0.1)}}) {
    const auto mid = integrate_flow(a, z0, t, 1000).samples.back().z;
    const auto two = integrate_flow(a, mid, s, 1000).samples.back().z;
    const auto one = integrate_flow(a, z0, s + t, 1000).samples.back().z;
    CHECK(dist(one, two) < 1e-8);
  }
}

TEST_CASE("property: witness fields stay tangent") {
  std::mt19937 rng(5);
  const char* degenerate[] = {"(w - conj(w))/(2*i)", kTube3, "(z3 - conj(z3))/(2*i) - (z1 + z2)*(conj(z1) + conj(z2))"};
  const std::size_t dims[] = {2, 3, 3};
  for (std::size_t e = 0; e < 3; ++e) {
    CAPTURE(e);
    const auto m = surface(dims[e], degenerate[e]);
    const auto w = degeneracy_witness(m, 3);
    REQUIRE(w.field.has_value());
    const auto points = on_surface_points(m, 10, rng);
    REQUIRE(points.size() == 10);
    for (const auto& p : points) {
      for (Complex t : {Complex(1), Complex(0, 1), Complex(-0.6, 0.8)}) {
        const auto traj = integrate_flow(*w.field, to_complex(p), t, 1000);
        CHECK(rho_residual(m, traj) <= 1e-8);
      }
    }
  }
}
