#pragma once

#include <cstddef>
#include <optional>

#include "crlab/polynomial.hpp"

namespace crlab {

// P = a_J X^J + ... + a_0 viewed as a polynomial in one auxiliary slot.
struct AnnihilatingPolynomial {
  Polynomial p;
  std::size_t variable = 0;
  int degree = 0;  // J
  Polynomial leading;
  Polynomial constant;
};

// Picks the slot named Y when p involves it, else X, unless `variable` is given.
// Throws ValidationError NoAnnihilatingVariable or TrivialPolynomial.
AnnihilatingPolynomial make_annihilating(const Polynomial& p,
                                         std::optional<std::size_t> variable = std::nullopt);

int total_degree(const AnnihilatingPolynomial& p);

// Y^J + sum_k a_J^(J-1-k) a_k Y^k; a_J times a root of p is a root of the result.
Polynomial monicize(const AnnihilatingPolynomial& p);

// Discriminant with the usual normalization; 1 for J = 1.
Polynomial standard_discriminant(const AnnihilatingPolynomial& p);

struct DiscriminantCheck {
  bool holds = false;
  Polynomial monic_discriminant;  // disc of monicize(p)
  Polynomial discriminant;        // standard_discriminant(p)
  // disc(q) * a_J^(2J-2) and a_J^(J(J-1)) * disc(p); equal iff `holds`.
  Polynomial lhs;
  Polynomial rhs;
};

// The root-product discriminant prod (r_i - r_j)^2 equals disc(p) / a_J^(2J-2),
// so the scaling identity is compared with that denominator cleared.
// Throws ValidationError ZeroDiscriminant.
DiscriminantCheck scaling_discriminant_check(const AnnihilatingPolynomial& p);

struct GapBound {
  int r = 0;
  int d1 = 0;  // degree of the discriminant
  int d2 = 0;  // degree of a_J
  int j = 0;
  bool rounded = false;  // (d1 + d2 J(J-1) + 1) was odd
};

// ceil((d1 + d2 J(J-1) + 1) / 2) from explicit degrees.
GapBound gap_bound_from_degrees(int d1, int d2, int j);
// Throws ValidationError ZeroDiscriminant.
GapBound gap_bound_r(const AnnihilatingPolynomial& p);

}  // namespace crlab
