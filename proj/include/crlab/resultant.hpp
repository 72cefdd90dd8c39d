#pragma once

#include <cstddef>

#include "crlab/linalg.hpp"
#include "crlab/polynomial.hpp"

namespace crlab {

// Sylvester matrix of p and q with respect to slot v (p rows first, highest
// powers on the left). Degree zero operands are allowed here.
PolyMatrix sylvester_matrix(const Polynomial& p, const Polynomial& q, std::size_t v);

// Res_v(p, q); both operands must have positive degree in v.
Polynomial resultant(const Polynomial& p, const Polynomial& q, std::size_t v);
// Same determinant without the degree check: Res(c, q) = c^deg q.
Polynomial resultant_unchecked(const Polynomial& p, const Polynomial& q, std::size_t v);

// (-1)^{J(J-1)/2} Res_v(p, dp/dv) / a_J with exact division.
Polynomial discriminant(const Polynomial& p, std::size_t v);

Polynomial leading_coefficient_in(const Polynomial& p, std::size_t v);
// lc(b)^(deg a - deg b + 1) * a reduced modulo b in v.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, std::size_t v);

// Greatest common divisor over Q(i), normalized to leading coefficient 1.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, std::size_t v);

// True when no nonconstant factor divides p twice.
bool is_square_free(const Polynomial& p);

}  // namespace crlab
