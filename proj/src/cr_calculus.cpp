#include "crlab/cr_calculus.hpp"

#include "crlab/errors.hpp"

namespace crlab {

bool VectorField::is_zero() const {
  for (const auto& p : c) {
    if (!p.is_zero()) return false;
  }
  return true;
}

std::size_t choose_pivot(const HypersurfaceSpec& m, const Point& p) {
  const auto pt = complexified_point(m.arena, p);
  for (std::size_t k = m.n; k-- > 0;) {
    if (!m.rho.derivative(m.arena->anti(k)).evaluate(pt).is_zero()) return k;
  }
  throw ValidationError("PivotDegenerate", "no d rho / d zeta_k is nonzero at the point");
}

std::vector<CRField> cr_basis(const HypersurfaceSpec& m, std::size_t pivot) {
  const auto& a = m.arena;
  const Polynomial rp = m.rho.derivative(a->anti(pivot));
  if (rp.is_zero()) throw ValidationError("PivotDegenerate", "pivot derivative vanishes identically");
  std::vector<CRField> out;
  for (std::size_t j = 0; j < m.n; ++j) {
    if (j == pivot) continue;
    CRField l;
    l.pivot = pivot;
    l.index = j;
    l.a.assign(m.n, Polynomial(a));
    l.a[j] = rp;
    l.a[pivot] = -m.rho.derivative(a->anti(j));
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<CRField> cr_basis(const HypersurfaceSpec& m) {
  return cr_basis(m, choose_pivot(m, m.base_point));
}

Polynomial apply_field(const CRField& l, const Polynomial& f) {
  const auto& a = f.arena();
  Polynomial r(a);
  for (std::size_t k = 0; k < l.a.size(); ++k) {
    if (l.a[k].is_zero()) continue;
    const Polynomial d = f.derivative(a->anti(k));
    if (!d.is_zero()) r += l.a[k] * d;
  }
  return r;
}

Polynomial apply_field(const VectorField& x, const Polynomial& f) {
  Polynomial r(f.arena());
  for (std::size_t v = 0; v < x.c.size(); ++v) {
    if (x.c[v].is_zero()) continue;
    const Polynomial d = f.derivative(v);
    if (!d.is_zero()) r += x.c[v] * d;
  }
  return r;
}

Polynomial apply_multiindex(const std::vector<CRField>& fields, const MultiIndex& alpha,
                            const Polynomial& f) {
  internal_check(alpha.size() == fields.size(), "multi-index length mismatch");
  Polynomial r = f;
  for (std::size_t j = 0; j < fields.size(); ++j) {
    for (unsigned k = 0; k < alpha[j] && !r.is_zero(); ++k) r = apply_field(fields[j], r);
  }
  return r;
}

unsigned order(const MultiIndex& alpha) {
  unsigned s = 0;
  for (auto x : alpha) s += x;
  return s;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned bound) {
  std::vector<MultiIndex> out;
  MultiIndex cur(n, 0);
  for (unsigned d = 0; d <= bound; ++d) {
    auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
      if (n == 0) {
        if (left == 0) out.push_back(cur);
        return;
      }
      if (k + 1 == n) {
        cur[k] = left;
        out.push_back(cur);
        cur[k] = 0;
        return;
      }
      for (unsigned e = left + 1; e-- > 0;) {
        cur[k] = e;
        self(self, k + 1, left - e);
      }
      cur[k] = 0;
    };
    rec(rec, 0, d);
  }
  return out;
}

std::vector<Polynomial> gradient_z(const HypersurfaceSpec& m) {
  std::vector<Polynomial> g;
  for (std::size_t k = 0; k < m.n; ++k) g.push_back(m.rho.derivative(m.arena->holo(k)));
  return g;
}

std::vector<Polynomial> v_alpha(const HypersurfaceSpec& m, const std::vector<CRField>& fields,
                                const MultiIndex& alpha) {
  std::vector<Polynomial> out;
  for (const auto& g : gradient_z(m)) out.push_back(apply_multiindex(fields, alpha, g));
  return out;
}

Polynomial c_alpha(const HypersurfaceSpec& m, const Point& p0, const MultiIndex& alpha) {
  if (!point_membership(m, p0)) throw ValidationError("BasePointOffSurface", "point is not on M");
  const auto& a = m.arena;
  const std::size_t pivot = choose_pivot(m, p0);
  auto fields = cr_basis(m, pivot);
  internal_check(alpha.size() == fields.size(), "multi-index length mismatch");
  std::vector<std::pair<std::size_t, Coeff>> at_p0;
  for (std::size_t k = 0; k < m.n; ++k) at_p0.emplace_back(a->holo(k), p0[k]);
  for (auto& l : fields) {
    for (auto& c : l.a) c = c.specialize(at_p0);
  }
  // rho(Z + p0, zeta)
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < a->size(); ++v) images.push_back(Polynomial::variable(a, v));
  for (std::size_t k = 0; k < m.n; ++k) images[a->holo(k)] += Polynomial::constant(a, p0[k]);
  const Polynomial shifted = m.rho.compose(images, a);
  Polynomial r = apply_multiindex(fields, alpha, shifted);
  std::vector<std::pair<std::size_t, Coeff>> zeta_at;
  for (std::size_t k = 0; k < m.n; ++k) zeta_at.emplace_back(a->anti(k), p0[k].conj());
  r = r.specialize(zeta_at);
  const Coeff scale =
      m.rho.derivative(a->anti(pivot)).evaluate(complexified_point(a, p0)).pow(order(alpha));
  return r * (Coeff(1) / scale);
}

Polynomial levi_determinant(const HypersurfaceSpec& m) {
  const auto fields = cr_basis(m);
  PolyMatrix rows;
  const auto grad = gradient_z(m);
  rows.push_back(grad);
  for (const auto& l : fields) {
    std::vector<Polynomial> row;
    for (const auto& g : grad) row.push_back(apply_field(l, g));
    rows.push_back(std::move(row));
  }
  return determinant(rows, m.arena);
}

VectorField to_vector_field(const ArenaPtr& arena, const CRField& l) {
  VectorField x;
  x.c.assign(arena->size(), Polynomial(arena));
  for (std::size_t k = 0; k < l.a.size(); ++k) x.c[arena->anti(k)] = l.a[k];
  return x;
}

VectorField conjugate_field(const VectorField& x) {
  VectorField y;
  y.c.resize(x.c.size());
  for (std::size_t v = 0; v < x.c.size(); ++v) {
    const auto& arena = x.c[v].arena();
    y.c[arena->partner(v)] = x.c[v].conjugate_swap();
  }
  return y;
}

VectorField lie_bracket(const VectorField& f, const VectorField& g) {
  VectorField r;
  r.c.reserve(f.c.size());
  for (std::size_t v = 0; v < f.c.size(); ++v) {
    r.c.push_back(apply_field(f, g.c[v]) - apply_field(g, f.c[v]));
  }
  return r;
}

VectorField truncate(const VectorField& x, unsigned degree) {
  VectorField r;
  for (const auto& p : x.c) r.c.push_back(p.truncate(degree));
  return r;
}

}  // namespace crlab
