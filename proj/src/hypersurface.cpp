#include "crlab/hypersurface.hpp"

#include "crlab/errors.hpp"
#include "crlab/resultant.hpp"

namespace crlab {

std::vector<Coeff> complexified_point(const ArenaPtr& arena, const Point& p) {
  const std::size_t n = arena->dimension();
  internal_check(p.size() == n, "point has wrong number of coordinates");
  std::vector<Coeff> v(arena->size(), Coeff(0));
  for (std::size_t k = 0; k < n; ++k) {
    v[arena->holo(k)] = p[k];
    v[arena->anti(k)] = p[k].conj();
  }
  return v;
}

HypersurfaceSpec validate(const Polynomial& rho, const Point& base_point, std::string name) {
  const ArenaPtr& arena = rho.arena();
  if (!arena) throw ValidationError("BadVariables", "defining polynomial is zero");
  const std::size_t n = arena->dimension();
  if (base_point.size() != n) {
    throw ValidationError("BadPoint", "base point needs " + std::to_string(n) + " coordinates");
  }
  for (std::size_t v = 2 * n; v < arena->size(); ++v) {
    if (rho.depends_on(v)) {
      throw ValidationError("BadVariables", "defining polynomial involves auxiliary '" + arena->name(v) + "'");
    }
  }
  if (rho.is_constant()) throw ValidationError("BadVariables", "defining polynomial is constant");
  if (rho.conjugate_swap() != rho) {
    throw ValidationError("NotReal", "conjugation does not fix the defining polynomial");
  }
  const auto pt = complexified_point(arena, base_point);
  if (!rho.evaluate(pt).is_zero()) {
    throw ValidationError("BasePointOffSurface", "rho does not vanish at the base point");
  }
  bool smooth = false;
  for (std::size_t k = 0; k < n && !smooth; ++k) {
    smooth = !rho.derivative(arena->holo(k)).evaluate(pt).is_zero();
  }
  if (!smooth) throw ValidationError("SingularBasePoint", "gradient of rho vanishes at the base point");
  if (!is_square_free(rho)) throw ValidationError("NotSquareFree", "rho has a repeated factor");
  HypersurfaceSpec m;
  m.name = std::move(name);
  m.arena = arena;
  m.rho = rho;
  m.n = n;
  m.degree = rho.total_degree();
  m.base_point = base_point;
  return m;
}

bool point_membership(const HypersurfaceSpec& m, const Point& p) {
  if (p.size() != m.n) throw Error(ErrorCode::invalid_argument, "point has wrong number of coordinates");
  return m.rho.evaluate(complexified_point(m.arena, p)).is_zero();
}

IdealPresentation segre_variety(const HypersurfaceSpec& m, const Point& p0) {
  if (!point_membership(m, p0)) throw ValidationError("BasePointOffSurface", "point is not on M");
  std::vector<std::pair<std::size_t, Coeff>> values;
  for (std::size_t k = 0; k < m.n; ++k) values.emplace_back(m.arena->holo(k), p0[k]);
  Polynomial g = m.rho.specialize(values);
  if (g.is_zero()) throw ValidationError("DegenerateSegre", "rho(p0, zeta) vanishes identically");
  return principal_ideal(g);
}

Polynomial shifted_rho(const HypersurfaceSpec& m, const Point& p) {
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < m.arena->size(); ++v) images.push_back(Polynomial::variable(m.arena, v));
  for (std::size_t k = 0; k < m.n; ++k) {
    images[m.arena->holo(k)] += Polynomial::constant(m.arena, p[k]);
    images[m.arena->anti(k)] += Polynomial::constant(m.arena, p[k].conj());
  }
  return m.rho.compose(images, m.arena);
}

namespace {

std::optional<Exponents> normality_witness(const HypersurfaceSpec& m, const Polynomial& phi) {
  for (const auto& t : phi.terms()) {
    bool has_z = false;
    bool has_zbar = false;
    for (std::size_t k = 0; k + 1 < m.n; ++k) {
      has_z = has_z || t.exps[m.arena->holo(k)] != 0;
      has_zbar = has_zbar || t.exps[m.arena->anti(k)] != 0;
    }
    if (!has_z || !has_zbar) return t.exps;
  }
  return std::nullopt;
}

}  // namespace

std::variant<RigidNormalForm, NotRigid> recognize_rigid_form(const HypersurfaceSpec& m) {
  const ArenaPtr& a = m.arena;
  const std::size_t s = a->index_of("s");
  const std::size_t t = a->index_of("t");
  const Polynomial S = Polynomial::variable(a, s);
  const Polynomial T = Polynomial::variable(a, t);
  const Polynomial r = m.rho.substitute(a->holo(m.n - 1), S + Coeff::i() * T)
                           .substitute(a->anti(m.n - 1), S - Coeff::i() * T);
  auto linear_with_constant = [&](std::size_t v) -> std::optional<std::pair<Coeff, Polynomial>> {
    const auto cs = r.coefficients_in(v);
    if (cs.size() != 2 || !cs[1].is_constant()) return std::nullopt;
    return std::make_pair(cs[1].constant_term(), cs[0]);
  };
  RigidNormalForm form;
  if (auto lin = linear_with_constant(t)) {
    // rho = A t + B  =>  t = -B / A
    form.unit = lin->first;
    form.phi = lin->second * (Coeff(-1) / lin->first);
  } else if (auto lin_s = linear_with_constant(s)) {
    // rho = A s + B(t); with w' = -i w: s = -t', t = s', so rho = -A (t' - B(s') / A).
    form.unit = -lin_s->first;
    form.phi = lin_s->second.substitute(t, S) * (Coeff(1) / lin_s->first);
    form.rotated = true;
  } else {
    return NotRigid{"rho is not linear in Im w or Re w with a constant coefficient", std::nullopt};
  }
  if (auto w = normality_witness(m, form.phi)) {
    return NotRigid{"phi violates normality at monomial " + monomial_to_string(*a, *w), w};
  }
  return form;
}

Polynomial rigid_to_rho(const HypersurfaceSpec& m, const RigidNormalForm& form) {
  const ArenaPtr& a = m.arena;
  const std::size_t s = a->index_of("s");
  const std::size_t t = a->index_of("t");
  const Polynomial W = Polynomial::variable(a, a->holo(m.n - 1));
  const Polynomial Wb = Polynomial::variable(a, a->anti(m.n - 1));
  const Polynomial re_w = (W + Wb) * Coeff(Rational(1, 2));
  const Polynomial im_w = (W - Wb) * (Coeff(1) / Coeff(Rational(0), Rational(2)));
  Polynomial r = form.unit * (Polynomial::variable(a, t) - form.phi);
  if (form.rotated) {
    // s' = Im w, t' = -Re w
    return r.substitute(t, -re_w).substitute(s, im_w);
  }
  return r.substitute(t, im_w).substitute(s, re_w);
}

}  // namespace crlab
