#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crlab/cr_calculus.hpp"
#include "crlab/ideal.hpp"

namespace crlab {

struct InvariantOptions {
  GroebnerOptions groebner;
  unsigned ell_max = 0;  // 0 selects N - 1
  unsigned codim_degree_max = 12;
  unsigned bracket_max = 8;
  unsigned witness_degree = 3;

  unsigned effective_ell_max(std::size_t n) const;
};

// Holomorphic vector field sum_j a_j(Z) d/dZ_j.
struct HoloField {
  std::vector<Polynomial> a;
};

struct WitnessResult {
  std::optional<HoloField> field;
  std::optional<Polynomial> multiplier;  // q with X(rho) = q rho
  unsigned degree_bound = 0;             // searched bound, or degree where found
};

struct SpanningCertificate {
  unsigned k = 0;                     // derivative order of the stack
  std::vector<MultiIndex> rows;       // multi-indices of the certifying minor
  Polynomial minor;
};

struct NondegeneracyVerdict {
  bool nondegenerate = false;
  std::optional<SpanningCertificate> certificate;
  std::optional<WitnessResult> witness;  // cross-check run when degenerate
  unsigned alpha_bound = 0;
};

struct LeviTypeResult {
  std::optional<unsigned> ell;  // nullopt: Degenerate
  std::optional<SpanningCertificate> certificate;
};

struct PointwiseOrder {
  std::optional<unsigned> k;
  unsigned bound = 0;
};

struct EssentialFiniteness {
  bool finite = false;
  unsigned ell = 0;           // l(p0) when finite
  std::size_t codimension = 0;
  unsigned certifying_degree = 0;
  unsigned ell_max = 0;
  unsigned d_max = 0;
  std::vector<Polynomial> generators;  // c_alpha with |alpha| <= ell (or ell_max)
};

struct FiniteTypeResult {
  std::optional<unsigned> type;  // nullopt: exceeds bound
  unsigned bound = 0;
  std::size_t fields_kept = 0;
};

// Smallest k <= N - 1 for which some N x N minor of the stack {V_alpha : |alpha| <= k}
// lies outside rad(rho); minors are tried in lexicographic row order.
LeviTypeResult levi_type(const HypersurfaceSpec& m, const InvariantOptions& opt = {});

NondegeneracyVerdict holomorphic_nondegeneracy(const HypersurfaceSpec& m,
                                               const InvariantOptions& opt = {});

// Minimal k with the normalised V_alpha(p, conj p), |alpha| <= k, of full rank.
PointwiseOrder pointwise_nondegeneracy_order(const HypersurfaceSpec& m, const Point& p,
                                             unsigned bound = 0);

EssentialFiniteness essential_finiteness_at(const HypersurfaceSpec& m, const Point& p0,
                                            const InvariantOptions& opt = {});

// Searches X = sum a_j d/dZ_j with deg a_j <= b, b = 0..deg_bound, such that
// X(rho) is divisible by rho, so X is tangent to M as a complex field (the
// real field X + conj(X) alone would also admit infinitesimal automorphisms).
// Returns the first solution found.
WitnessResult degeneracy_witness(const HypersurfaceSpec& m, unsigned deg_bound);

// True when X(rho) lies in (rho).
bool is_tangent_holomorphic_field(const HypersurfaceSpec& m, const HoloField& x);

FiniteTypeResult bloom_graham_type_at(const HypersurfaceSpec& m, const Point& p,
                                      unsigned length_bound);

}  // namespace crlab
