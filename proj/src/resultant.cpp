#include "crlab/resultant.hpp"

#include "crlab/errors.hpp"

namespace crlab {

PolyMatrix sylvester_matrix(const Polynomial& p, const Polynomial& q, std::size_t v) {
  const ArenaPtr& arena = p.arena() ? p.arena() : q.arena();
  const auto pc = p.coefficients_in(v);
  const auto qc = q.coefficients_in(v);
  internal_check(!pc.empty() && !qc.empty(), "sylvester matrix of zero polynomial");
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  const std::size_t size = m + n;
  PolyMatrix s(size, std::vector<Polynomial>(size, Polynomial(arena)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
  }
  return s;
}

Polynomial resultant_unchecked(const Polynomial& p, const Polynomial& q, std::size_t v) {
  const ArenaPtr& arena = p.arena() ? p.arena() : q.arena();
  if (p.is_zero() || q.is_zero()) return Polynomial(arena);
  return determinant(sylvester_matrix(p, q, v), arena);
}

Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t v) {
  if (p.degree_in(v) < 1 || q.degree_in(v) < 1) {
    throw Error(ErrorCode::invalid_argument, "resultant needs positive degree in the eliminated variable");
  }
  return resultant_unchecked(p, q, v);
}

Polynomial discriminant(const Polynomial& p, std::size_t v) {
  const int j = p.degree_in(v);
  if (j < 1) throw Error(ErrorCode::invalid_argument, "discriminant of a polynomial constant in the variable");
  Polynomial r = resultant_unchecked(p, p.derivative(v), v);
  Polynomial d = exact_quotient(r, leading_coefficient_in(p, v));
  if ((j * (j - 1) / 2) % 2 == 1) d = -d;
  return d;
}

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  return p.coefficients_in(v).back();
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  internal_check(db >= 0, "pseudo-remainder by zero");
  const Polynomial lb = leading_coefficient_in(b, v);
  const ArenaPtr& arena = a.arena();
  Polynomial r = a;
  int steps = r.degree_in(v) - db + 1;
  while (!r.is_zero() && r.degree_in(v) >= db) {
    const int dr = r.degree_in(v);
    Exponents e(arena->size(), 0);
    e[v] = static_cast<std::uint32_t>(dr - db);
    const Polynomial shift = Polynomial::monomial(arena, e, Coeff(1));
    r = lb * r - leading_coefficient_in(r, v) * shift * b;
    --steps;
  }
  // Pad to the classical exponent so the result is well defined.
  while (steps-- > 0) r *= lb;
  return r;
}

namespace {

// Highest slot on which either polynomial depends.
std::optional<std::size_t> main_variable(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.arena() ? a.arena()->size() : b.arena()->size();
  for (std::size_t v = n; v-- > 0;) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

Polynomial primitive_part(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, v));
}

}  // namespace

Polynomial content_in(const Polynomial& p, std::size_t v) {
  const ArenaPtr& arena = p.arena();
  Polynomial g(arena);
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? g : g.monic();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const ArenaPtr& arena = a.arena() ? a.arena() : b.arena();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  auto mv = main_variable(a, b);
  if (!mv) return Polynomial::constant(arena, Coeff(1));
  const std::size_t v = *mv;
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);
  const Polynomial g = gcd(content_in(a, v), content_in(b, v));
  Polynomial pa = primitive_part(a, v);
  Polynomial pb = primitive_part(b, v);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  while (true) {
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) {
      pb = Polynomial::constant(arena, Coeff(1));
      break;
    }
    pa = pb;
    pb = primitive_part(r, v);
  }
  return (g * primitive_part(pb, v)).monic();
}

bool is_square_free(const Polynomial& p) {
  if (p.is_zero()) return false;
  if (p.is_constant()) return true;
  Polynomial g = p;
  for (std::size_t v = 0; v < p.arena()->size(); ++v) {
    if (!p.depends_on(v)) continue;
    g = gcd(g, p.derivative(v));
    if (g.is_constant()) return true;
  }
  return g.is_constant();
}

}  // namespace crlab
