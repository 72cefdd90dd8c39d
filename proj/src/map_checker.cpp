#include "crlab/map_checker.hpp"

#include "crlab/errors.hpp"
#include "crlab/linalg.hpp"

namespace crlab {

const ArenaPtr& PolyMap::arena() const {
  static const ArenaPtr none;
  for (const auto& c : components) {
    if (c.arena()) return c.arena();
  }
  return none;
}

Polynomial pullback(const HypersurfaceSpec& target, const PolyMap& h) {
  if (h.components.size() != target.n) {
    throw ValidationError("DimensionMismatch", "map has " + std::to_string(h.components.size()) +
                                                   " components, target dimension is " +
                                                   std::to_string(target.n));
  }
  const ArenaPtr& a = h.arena();
  std::vector<Polynomial> images(target.arena->size(), Polynomial(a));
  for (std::size_t k = 0; k < target.n; ++k) {
    images[target.arena->holo(k)] = h.components[k];
    images[target.arena->anti(k)] = h.components[k].conjugate_swap();
  }
  return target.rho.compose(images, a);
}

IdealPresentation source_ideal(const HypersurfaceSpec& m, const PolyMap& h) {
  if (h.relations.empty()) return m.ideal();
  IdealPresentation ideal;
  ideal.generators.push_back(m.rho.embed(h.arena()));
  for (const auto& r : h.relations) {
    ideal.generators.push_back(r);
    const Polynomial c = r.conjugate_swap();
    if (c != r) ideal.generators.push_back(c);
  }
  return ideal;
}

bool maps_into(const HypersurfaceSpec& m, const HypersurfaceSpec& target, const PolyMap& h,
               const GroebnerOptions& opt) {
  for (const auto& c : h.components) {
    for (std::size_t k = 0; k < m.n; ++k) {
      if (c.depends_on(c.arena()->anti(k))) {
        throw ValidationError("NotHolomorphic", "map components must not involve conj(z)");
      }
    }
  }
  return radical_membership(pullback(target, h), source_ideal(m, h), opt);
}

Polynomial jacobian_determinant(const std::vector<Polynomial>& components, std::size_t n) {
  PolyMatrix jac;
  for (const auto& c : components) {
    std::vector<Polynomial> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(c.derivative(c.arena()->holo(k)));
    jac.push_back(std::move(row));
  }
  return determinant(jac, components.front().arena());
}

JacobianVerdict jacobian_determinant(const HypersurfaceSpec& m, const PolyMap& h) {
  if (h.components.size() != m.n) {
    throw ValidationError("DimensionMismatch", "Jacobian needs as many components as N");
  }
  if (!h.relations.empty()) {
    throw ValidationError("AuxiliaryComponents", "Jacobian needs polynomial components");
  }
  JacobianVerdict v;
  v.determinant = jacobian_determinant(h.components, m.n);
  v.nonvanishing_on_m = !radical_membership(v.determinant, m.ideal());
  return v;
}

bool algebraicity_certificate(const HypersurfaceSpec& m, const Polynomial& f, const Polynomial& p,
                              std::size_t x_slot, const std::vector<Polynomial>& relations,
                              const GroebnerOptions& opt) {
  if (!p.depends_on(x_slot)) {
    throw ValidationError("TrivialCertificate", "P does not involve the unknown");
  }
  for (std::size_t k = 0; k < m.n; ++k) {
    if (p.depends_on(p.arena()->anti(k))) {
      throw ValidationError("NotHolomorphic", "P must be a polynomial in Z and the unknown");
    }
  }
  const Polynomial value = p.substitute(x_slot, f);
  PolyMap carrier{{value}, relations};
  return radical_membership(value, source_ideal(m, carrier), opt);
}

HypersurfaceSpec sphere_target(std::size_t dim) {
  const ArenaPtr a = VariableArena::make(dim);
  Polynomial rho = Polynomial::variable(a, a->holo(dim - 1)) + Polynomial::variable(a, a->anti(dim - 1));
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    rho += Polynomial::variable(a, a->holo(k)) * Polynomial::variable(a, a->anti(k));
  }
  return validate(rho, Point(dim, Coeff(0)), "sphere");
}

namespace {

std::optional<std::vector<Polynomial>> divide_by_constant(const std::vector<Polynomial>& num,
                                                          const Polynomial& delta) {
  if (!delta.is_constant() || delta.is_zero()) return std::nullopt;
  const Coeff inv = Coeff(1) / delta.constant_term();
  std::vector<Polynomial> out;
  for (const auto& p : num) out.push_back(p * inv);
  return out;
}

// Hermitian unitary Q with Q v = r e_0; nullopt when no Gaussian-rational r exists.
std::optional<CoeffMatrix> householder(const CoeffVector& v) {
  const std::size_t t = v.size();
  Rational nrm2 = 0;
  for (const auto& c : v) nrm2 += c.norm();
  Rational s;
  Coeff r;
  if (!v[0].is_zero()) {
    if (!rational_sqrt(Rational(nrm2 / v[0].norm()), s)) return std::nullopt;
    r = v[0] * Coeff(s);
  } else {
    if (!rational_sqrt(nrm2, s)) return std::nullopt;
    r = Coeff(s);
  }
  CoeffVector u = v;
  u[0] -= r;
  Rational uu = 0;
  for (const auto& c : u) uu += c.norm();
  CoeffMatrix q(t, CoeffVector(t, Coeff(0)));
  for (std::size_t a = 0; a < t; ++a) {
    for (std::size_t b = 0; b < t; ++b) {
      q[a][b] = (a == b ? Coeff(1) : Coeff(0));
      if (uu != 0) q[a][b] -= Coeff(2) * u[a] * u[b].conj() / Coeff(uu);
    }
  }
  return q;
}

}  // namespace

std::optional<std::vector<Polynomial>> ReflectionSystem::xi() const {
  return divide_by_constant(xi_numerator, delta);
}

std::optional<std::vector<Polynomial>> ReflectionSystem::eta() const {
  return divide_by_constant(eta_numerator, delta);
}

Polynomial rearranged_identity_residual(const ReflectionSystem& sys, const Polynomial& a_num,
                                        const Polynomial& b_num, const Polynomial& c_num) {
  const auto& h = sys.rotated.components;
  const std::size_t n = h.size() - 2;
  const Polynomial dd = sys.delta * sys.delta.conjugate_swap();
  const Polynomial& hn1 = h[n];
  const Polynomial& hn2 = h[n + 1];
  const Polynomial hn1b = hn1.conjugate_swap();
  return dd * (hn2 + hn2.conjugate_swap()) + hn1 * (a_num + hn1b * b_num) +
         hn1b * a_num.conjugate_swap() + c_num;
}

ReflectionSystem reflection_system(const HypersurfaceSpec& m, const PolyMap& h, const Point& p,
                                   unsigned m_bound) {
  const std::size_t big_n = m.n;
  if (big_n < 2) throw ValidationError("DimensionMismatch", "source dimension must be at least 2");
  const std::size_t n = big_n - 1;
  if (h.components.size() != big_n + 1) {
    throw ValidationError("DimensionMismatch", "map must have N + 1 components");
  }
  if (!h.relations.empty()) {
    throw ValidationError("AuxiliaryComponents", "reflection system needs polynomial components");
  }
  const ArenaPtr& a = m.arena;
  const HypersurfaceSpec sphere = sphere_target(big_n + 1);
  if (!maps_into(m, sphere, h)) throw ValidationError("NotIntoSphere", "H does not map M into the sphere");
  const auto at = complexified_point(a, p);
  for (const auto& c : h.components) {
    if (!c.evaluate(at).is_zero()) throw ValidationError("MapNotCentered", "H(p) must be 0");
  }
  const std::size_t pivot = big_n - 1;
  if (m.rho.derivative(a->anti(pivot)).evaluate(at).is_zero()) {
    throw ValidationError("PivotDegenerate", "d rho / d conj(w) vanishes at the point");
  }
  const auto fields = cr_basis(m, pivot);

  ReflectionSystem sys;
  sys.m_bound = m_bound;
  std::vector<Polynomial> hv = h.components;
  sys.rotation.assign(n + 1, CoeffVector(n + 1, Coeff(0)));
  for (std::size_t k = 0; k <= n; ++k) sys.rotation[k][k] = Coeff(1);

  auto apply_rotation = [&](const CoeffMatrix& u, std::size_t offset) {
    // u acts on positions offset .. offset + u.size() - 1.
    const std::size_t t = u.size();
    std::vector<Polynomial> mixed(t, Polynomial(a));
    CoeffMatrix rows(t, CoeffVector(n + 1, Coeff(0)));
    for (std::size_t r = 0; r < t; ++r) {
      for (std::size_t c = 0; c < t; ++c) {
        if (u[r][c].is_zero()) continue;
        mixed[r] += u[r][c] * hv[offset + c];
        for (std::size_t k = 0; k <= n; ++k) rows[r][k] += u[r][c] * sys.rotation[offset + c][k];
      }
    }
    for (std::size_t r = 0; r < t; ++r) {
      hv[offset + r] = std::move(mixed[r]);
      sys.rotation[offset + r] = rows[r];
    }
  };

  std::vector<MultiIndex> candidates;
  for (auto& beta : multi_indices_up_to(n, m_bound)) {
    if (order(beta) > 0) candidates.push_back(std::move(beta));
  }
  bool clean = true;  // every accepted row vanishes in column n (H_{n+1})
  for (std::size_t j = 0; j < n; ++j) {
    bool found = false;
    for (const auto& beta : candidates) {
      CoeffVector v(n + 1, Coeff(0));
      for (std::size_t l = j; l <= n; ++l) {
        v[l] = apply_multiindex(fields, beta, hv[l].conjugate_swap()).evaluate(at);
      }
      std::vector<std::size_t> nonzero;
      for (std::size_t l = j; l < n; ++l) {
        if (!v[l].is_zero()) nonzero.push_back(l);
      }
      if (nonzero.empty()) {
        if (!clean || v[n].is_zero()) continue;
        nonzero.push_back(n);
      }
      if (nonzero.size() == 1 && nonzero[0] != j) {
        // Swap H_j with the only usable component.
        const std::size_t k = nonzero[0];
        const std::size_t t = k - j + 1;
        CoeffMatrix perm(t, CoeffVector(t, Coeff(0)));
        for (std::size_t r = 0; r < t; ++r) perm[r][r] = Coeff(1);
        perm[0][0] = perm[t - 1][t - 1] = Coeff(0);
        perm[0][t - 1] = perm[t - 1][0] = Coeff(1);
        apply_rotation(perm, j);
      } else if (nonzero.size() > 1) {
        CoeffVector sub(v.begin() + static_cast<long>(j), v.begin() + static_cast<long>(n));
        auto q = householder(sub);
        if (!q) {
          throw ValidationError("IrrationalRotationRequired",
                                "triangularizing the tangential derivatives needs an irrational rotation");
        }
        for (auto& row : *q) {
          for (auto& c : row) c = c.conj();
        }
        apply_rotation(*q, j);
      }
      // Recompute after any rotation; the pattern must now hold.
      for (std::size_t l = j; l <= n; ++l) {
        v[l] = apply_multiindex(fields, beta, hv[l].conjugate_swap()).evaluate(at);
      }
      bool ok = !v[j].is_zero();
      for (std::size_t l = j + 1; l < n; ++l) ok = ok && v[l].is_zero();
      internal_check(ok, "rotation did not produce the triangular pattern");
      clean = clean && v[n].is_zero();
      sys.betas.push_back(beta);
      found = true;
      break;
    }
    if (!found) {
      throw ValidationError("NoIndexFound", "no multi-index of order <= " + std::to_string(m_bound) +
                                                " gives a nonzero tangential derivative for row " +
                                                std::to_string(j + 1));
    }
  }

  sys.rotated.components = hv;
  std::vector<Polynomial> w1, w2;
  for (const auto& beta : sys.betas) {
    std::vector<Polynomial> row;
    for (std::size_t l = 0; l < n; ++l) row.push_back(apply_multiindex(fields, beta, hv[l].conjugate_swap()));
    sys.v.push_back(std::move(row));
    w1.push_back(apply_multiindex(fields, beta, hv[n].conjugate_swap()));
    w2.push_back(apply_multiindex(fields, beta, hv[n + 1].conjugate_swap()));
  }
  sys.delta = determinant(sys.v, a);
  if (sys.delta.evaluate(at).is_zero()) {
    throw ValidationError("VNotInvertibleAtPoint", "V is singular at the point");
  }
  const PolyMatrix adj = adjugate(sys.v, a);
  for (std::size_t r = 0; r < n; ++r) {
    Polynomial x(a), e(a);
    for (std::size_t c = 0; c < n; ++c) {
      x += adj[r][c] * w2[c];
      e += adj[r][c] * w1[c];
    }
    sys.xi_numerator.push_back(std::move(x));
    sys.eta_numerator.push_back(std::move(e));
  }

  const auto ideal = m.ideal();
  bool f_ok = true;
  for (std::size_t l = 0; l < n; ++l) {
    const Polynomial r = sys.delta * hv[l] + sys.xi_numerator[l] + hv[n] * sys.eta_numerator[l];
    f_ok = f_ok && radical_membership(r, ideal);
  }
  sys.f_identity = f_ok;
  sys.sphere_identity = radical_membership(pullback(sphere, sys.rotated), ideal);

  sys.a_numerator = Polynomial(a);
  sys.b_numerator = sys.delta * sys.delta.conjugate_swap();
  sys.c_numerator = Polynomial(a);
  for (std::size_t l = 0; l < n; ++l) {
    sys.a_numerator += sys.eta_numerator[l] * sys.xi_numerator[l].conjugate_swap();
    sys.b_numerator += sys.eta_numerator[l] * sys.eta_numerator[l].conjugate_swap();
    sys.c_numerator += sys.xi_numerator[l] * sys.xi_numerator[l].conjugate_swap();
  }
  sys.rearranged_identity = radical_membership(
      rearranged_identity_residual(sys, sys.a_numerator, sys.b_numerator, sys.c_numerator), ideal);
  return sys;
}

}  // namespace crlab
