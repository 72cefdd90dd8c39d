#include "crlab/artin.hpp"

#include "crlab/errors.hpp"
#include "crlab/resultant.hpp"

namespace crlab {

AnnihilatingPolynomial make_annihilating(const Polynomial& p, std::optional<std::size_t> variable) {
  const ArenaPtr& a = p.arena();
  if (!variable) {
    for (const char* name : {"Y", "X"}) {
      auto v = a->find(name);
      if (v && p.depends_on(*v)) {
        variable = v;
        break;
      }
    }
  }
  if (!variable) throw ValidationError("NoAnnihilatingVariable", "polynomial involves neither Y nor X");
  AnnihilatingPolynomial out;
  out.p = p;
  out.variable = *variable;
  out.degree = p.degree_in(*variable);
  if (out.degree < 1) throw ValidationError("TrivialPolynomial", "polynomial has degree 0 in its variable");
  const auto coeffs = p.coefficients_in(*variable);
  out.leading = coeffs.back();
  out.constant = coeffs.front();
  return out;
}

int total_degree(const AnnihilatingPolynomial& p) { return p.p.total_degree(); }

Polynomial monicize(const AnnihilatingPolynomial& p) {
  const auto coeffs = p.p.coefficients_in(p.variable);
  const int j = p.degree;
  std::vector<Polynomial> out(coeffs.size(), Polynomial(p.p.arena()));
  out[j] = Polynomial::constant(p.p.arena(), Coeff(1));
  for (int k = 0; k < j; ++k) out[k] = p.leading.pow(static_cast<unsigned>(j - 1 - k)) * coeffs[k];
  return Polynomial::from_coefficients(out, p.variable);
}

Polynomial standard_discriminant(const AnnihilatingPolynomial& p) {
  return discriminant(p.p, p.variable);
}

DiscriminantCheck scaling_discriminant_check(const AnnihilatingPolynomial& p) {
  DiscriminantCheck out;
  out.discriminant = standard_discriminant(p);
  if (out.discriminant.is_zero()) throw ValidationError("ZeroDiscriminant", "polynomial is not square-free in its variable");
  out.monic_discriminant = discriminant(monicize(p), p.variable);
  const unsigned j = static_cast<unsigned>(p.degree);
  out.lhs = out.monic_discriminant * p.leading.pow(2 * j - 2);
  out.rhs = p.leading.pow(j * (j - 1)) * out.discriminant;
  out.holds = (out.lhs - out.rhs).is_zero();
  return out;
}

GapBound gap_bound_from_degrees(int d1, int d2, int j) {
  GapBound g;
  g.d1 = d1;
  g.d2 = d2;
  g.j = j;
  const int num = d1 + d2 * j * (j - 1) + 1;
  g.r = (num + 1) / 2;
  g.rounded = num % 2 != 0;
  return g;
}

GapBound gap_bound_r(const AnnihilatingPolynomial& p) {
  const Polynomial d = standard_discriminant(p);
  if (d.is_zero()) throw ValidationError("ZeroDiscriminant", "polynomial is not square-free in its variable");
  return gap_bound_from_degrees(d.total_degree(), p.leading.total_degree(), p.degree);
}

}  // namespace crlab
