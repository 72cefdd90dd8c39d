#pragma once

#include <optional>
#include <string>
#include <vector>

#include "crlab/cr_calculus.hpp"
#include "crlab/ideal.hpp"

namespace crlab {

// Holomorphic map Z -> (H_1(Z), ..., H_N'(Z)). Components may use auxiliary
// slots standing for algebraic functions; each such slot comes with a
// relation (its minimal polynomial) listed in `relations`.
struct PolyMap {
  std::vector<Polynomial> components;
  std::vector<Polynomial> relations;

  std::size_t target_dimension() const { return components.size(); }
  const ArenaPtr& arena() const;
};

// rho' o (H, conj H) as a polynomial in the map's arena.
Polynomial pullback(const HypersurfaceSpec& target, const PolyMap& h);

// Ideal generated by rho, the relations and their conjugates.
IdealPresentation source_ideal(const HypersurfaceSpec& m, const PolyMap& h);

// rho'(H, conj H) in rad(rho, relations, conj relations). Throws
// ResourceLimitError when the ideal engine gives up.
bool maps_into(const HypersurfaceSpec& m, const HypersurfaceSpec& target, const PolyMap& h,
               const GroebnerOptions& opt = {});

struct JacobianVerdict {
  Polynomial determinant;
  bool nonvanishing_on_m = false;  // determinant outside rad(rho)
};

JacobianVerdict jacobian_determinant(const HypersurfaceSpec& m, const PolyMap& h);
Polynomial jacobian_determinant(const std::vector<Polynomial>& components, std::size_t n);

// P(Z, f) in rad(rho, relations): f satisfies the polynomial identity P on M.
// P must involve the auxiliary slot x_slot and no antiholomorphic slot.
bool algebraicity_certificate(const HypersurfaceSpec& m, const Polynomial& f, const Polynomial& p,
                              std::size_t x_slot, const std::vector<Polynomial>& relations = {},
                              const GroebnerOptions& opt = {});

// Sphere Z'_{n+2} + conj(Z'_{n+2}) + sum_{j <= n+1} |Z'_j|^2 in C^{dim}.
HypersurfaceSpec sphere_target(std::size_t dim);

struct ReflectionSystem {
  std::vector<MultiIndex> betas;
  CoeffMatrix rotation;        // unitary U applied as H_S -> U H_S on H_1..H_{n+1}
  PolyMap rotated;             // the map after rotation
  PolyMatrix v;                // V = (L^{beta^j} conj H_l), j, l <= n
  Polynomial delta;            // det V
  std::vector<Polynomial> xi_numerator;   // adj(V) w2, xi = xi_numerator / delta
  std::vector<Polynomial> eta_numerator;  // adj(V) w1, eta = eta_numerator / delta
  // Coefficients of the rearranged sphere identity, cleared by delta * conj(delta):
  Polynomial a_numerator;  // eta . conj(xi)
  Polynomial b_numerator;  // 1 + |eta|^2
  Polynomial c_numerator;  // |xi|^2
  bool f_identity = false;        // F = -xi - H_{n+1} eta on M
  bool sphere_identity = false;   // H_{n+2} + conj H_{n+2} + F.conj F + |H_{n+1}|^2 = 0 on M
  bool rearranged_identity = false;
  unsigned m_bound = 0;

  // xi and eta as polynomials when delta is a nonzero constant.
  std::optional<std::vector<Polynomial>> xi() const;
  std::optional<std::vector<Polynomial>> eta() const;
};

// Builds the reflection system of a map H into the sphere of dimension N + 1
// centred at p (H(p) = 0). Fields are the cross basis with pivot N. Errors:
// ValidationError kinds NotIntoSphere, MapNotCentered, PivotDegenerate,
// NoIndexFound, VNotInvertibleAtPoint, IrrationalRotationRequired.
ReflectionSystem reflection_system(const HypersurfaceSpec& m, const PolyMap& h, const Point& p,
                                   unsigned m_bound = 4);

// Cleared left side of the rearranged sphere identity for given a, b, c numerators.
Polynomial rearranged_identity_residual(const ReflectionSystem& sys, const Polynomial& a_num,
                                        const Polynomial& b_num, const Polynomial& c_num);

}  // namespace crlab
