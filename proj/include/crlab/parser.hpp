#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "crlab/polynomial.hpp"

namespace crlab {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor (('*'|'/') factor)*
// factor := base ('^' uint)?
// base   := integer | 'i' | ident | 'conj' '(' expr ')' | '(' expr ')'
// Division is accepted only by a nonzero constant, so "1/2" and "(w-conj(w))/(2*i)"
// parse; decimals are rejected.
Polynomial parse_expression(std::string_view text, const ArenaPtr& arena);

// Comma separated list at parenthesis depth zero, e.g. a curve or map line.
std::vector<Polynomial> parse_expression_list(std::string_view text, const ArenaPtr& arena);

// Exact Gaussian rational written as an expression without variables.
Coeff parse_coefficient(std::string_view text);

// Numeric complex literal for flow times: "1", "-0.5", "2i", "0.25-1.5i", "i".
std::complex<double> parse_complex_literal(std::string_view text);

}  // namespace crlab
