#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crlab/polynomial.hpp"

namespace crlab {

enum class MonomialOrder { grlex, lex };

struct IdealPresentation {
  std::vector<Polynomial> generators;
  MonomialOrder order = MonomialOrder::grlex;
  // Set only when the ideal is principal with a square-free generator, so it
  // equals its own radical and membership is plain divisibility.
  bool known_radical = false;

  const ArenaPtr& arena() const;
};

IdealPresentation principal_ideal(const Polynomial& g, bool square_free = false);

struct GroebnerOptions {
  std::size_t spair_budget = 50000;
};

// Reduced, monic Gröbner basis sorted by increasing leading monomial.
// Throws ResourceLimitError when more than spair_budget S-pairs are reduced.
std::vector<Polynomial> groebner_basis(const IdealPresentation& ideal,
                                       const GroebnerOptions& options = {});

struct DivisionResult {
  std::vector<Polynomial> quotients;
  Polynomial remainder;
};

// Multivariate division by an ordered divisor list: f = sum q_k g_k + r.
DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder order = MonomialOrder::grlex);

// Remainder of f modulo a Gröbner basis; zero iff f lies in the ideal.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order = MonomialOrder::grlex);

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal,
                      const GroebnerOptions& options = {});

// f in sqrt(I), decided by 1 in I + (1 - t f) with a fresh variable t.
bool radical_membership_rabinowitsch(const Polynomial& f, const IdealPresentation& ideal,
                                     const GroebnerOptions& options = {});

// Uses divisibility when ideal.known_radical is set, Rabinowitsch otherwise.
bool radical_membership(const Polynomial& f, const IdealPresentation& ideal,
                        const GroebnerOptions& options = {});

struct CodimResult {
  enum class Status { finite_certified, not_detected };
  Status status = Status::not_detected;
  std::size_t codimension = 0;  // meaningful when certified
  unsigned degree = 0;          // certifying degree D, or the bound searched
};

// Decides whether the ideal has finite codimension in the local ring at the
// origin by truncated linear algebra: if every degree D monomial lies in the
// span of the truncated multiples m*g, Nakayama gives m^D inside the ideal.
// `slots` are the local coordinates (default: the holomorphic slots).
CodimResult finite_codimension_at_origin(const std::vector<Polynomial>& generators,
                                         unsigned d_max,
                                         std::optional<std::vector<std::size_t>> slots = {});

// All exponent vectors over `slots` of total degree exactly d, in decreasing
// graded-lex order, as full-length exponent vectors of the arena.
std::vector<Exponents> monomials_of_degree(std::size_t arena_size,
                                           const std::vector<std::size_t>& slots, unsigned d);

}  // namespace crlab
