#pragma once

#include <cstddef>
#include <vector>

#include "crlab/hypersurface.hpp"
#include "crlab/linalg.hpp"

namespace crlab {

using MultiIndex = std::vector<unsigned>;

// (0,1) field sum_k a_k d/dzeta_k on the complexified ring.
struct CRField {
  std::vector<Polynomial> a;  // N coefficients
  std::size_t pivot = 0;      // k0 of the cross construction
  std::size_t index = 0;      // the j of L_j
};

// General derivation on the ring: coefficient of d/dv for every slot v.
struct VectorField {
  std::vector<Polynomial> c;

  bool is_zero() const;
};

// Slot k with d rho/d zeta_k nonzero at (p, conj p), preferring k = N.
// Throws ValidationError(PivotDegenerate) if there is none.
std::size_t choose_pivot(const HypersurfaceSpec& m, const Point& p);

// L_j = rho_{zeta_k0} d/dzeta_j - rho_{zeta_j} d/dzeta_k0 for j != k0.
std::vector<CRField> cr_basis(const HypersurfaceSpec& m, std::size_t pivot);
std::vector<CRField> cr_basis(const HypersurfaceSpec& m);

Polynomial apply_field(const CRField& l, const Polynomial& f);
Polynomial apply_field(const VectorField& x, const Polynomial& f);

// L_1 is applied alpha_1 times first, then L_2, and so on.
Polynomial apply_multiindex(const std::vector<CRField>& fields, const MultiIndex& alpha,
                            const Polynomial& f);

// All multi-indices of length n with |alpha| <= bound, ordered by |alpha|
// and then lexicographically decreasing (e_1 before e_2).
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, unsigned bound);
unsigned order(const MultiIndex& alpha);

// Gradient rho_Z = (d rho / d Z_k)_k.
std::vector<Polynomial> gradient_z(const HypersurfaceSpec& m);

// V_alpha = L^alpha rho_Z componentwise.
std::vector<Polynomial> v_alpha(const HypersurfaceSpec& m, const std::vector<CRField>& fields,
                                const MultiIndex& alpha);

// c_alpha(Z, p0, conj p0), normalised by the pivot derivative power so the
// value does not depend on the scaling of the cross basis.
Polynomial c_alpha(const HypersurfaceSpec& m, const Point& p0, const MultiIndex& alpha);

// det [rho_Z; L_1 rho_Z; ...; L_n rho_Z].
Polynomial levi_determinant(const HypersurfaceSpec& m);

VectorField to_vector_field(const ArenaPtr& arena, const CRField& l);
VectorField conjugate_field(const VectorField& x);
VectorField lie_bracket(const VectorField& f, const VectorField& g);
VectorField truncate(const VectorField& x, unsigned degree);

}  // namespace crlab
