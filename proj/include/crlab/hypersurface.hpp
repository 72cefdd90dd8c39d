#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "crlab/ideal.hpp"
#include "crlab/polynomial.hpp"

namespace crlab {

using Point = std::vector<Coeff>;  // N complex coordinates

// A validated real algebraic hypersurface with a base point on it.
struct HypersurfaceSpec {
  std::string name;
  ArenaPtr arena;
  Polynomial rho;
  std::size_t n = 0;  // ambient dimension N
  int degree = 0;
  Point base_point;

  // Principal ideal (rho); rho is square-free, so it is its own radical.
  IdealPresentation ideal() const { return principal_ideal(rho, true); }
};

// Evaluation vector for the arena: Z = p, zeta = conj(p), auxiliaries 0.
std::vector<Coeff> complexified_point(const ArenaPtr& arena, const Point& p);

// Checks reality, base point membership, smoothness at the base point and
// square-freeness. Throws ValidationError with kind NotReal,
// BasePointOffSurface, SingularBasePoint, NotSquareFree or BadVariables.
HypersurfaceSpec validate(const Polynomial& rho, const Point& base_point, std::string name = {});

bool point_membership(const HypersurfaceSpec& m, const Point& p);

// (rho(p0, zeta)) in the zeta variables.
IdealPresentation segre_variety(const HypersurfaceSpec& m, const Point& p0);

// rho(Z + p, zeta + conj(p)): coordinates centred at p.
Polynomial shifted_rho(const HypersurfaceSpec& m, const Point& p);

// rho rewritten as unit * (t - phi(z, zbar, s)) with w = s + i t, where phi
// vanishes when either all z or all zbar are set to zero. When rho is only
// linear in Re w, the form is found in the rotated coordinate w' = -i w and
// `rotated` is set; phi's s then stands for Re w' = Im w.
struct RigidNormalForm {
  Polynomial phi;  // in z_1..z_n, their conjugates and the auxiliary s
  Coeff unit;
  bool rotated = false;
};

struct NotRigid {
  std::string reason;
  std::optional<Exponents> witness;  // a monomial of phi violating normality
};

std::variant<RigidNormalForm, NotRigid> recognize_rigid_form(const HypersurfaceSpec& m);

// Rebuilds unit * (t - phi) as a polynomial in Z, zeta (inverse of the rewrite).
Polynomial rigid_to_rho(const HypersurfaceSpec& m, const RigidNormalForm& form);

}  // namespace crlab
