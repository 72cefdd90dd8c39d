#include "crlab/invariants.hpp"

#include <algorithm>
#include <map>

#include "crlab/errors.hpp"

namespace crlab {

unsigned InvariantOptions::effective_ell_max(std::size_t n) const {
  if (ell_max != 0) return ell_max;
  return n > 1 ? static_cast<unsigned>(n - 1) : 1u;
}

namespace {

void require_on_surface(const HypersurfaceSpec& m, const Point& p) {
  if (p.size() != m.n) throw ValidationError("BadPoint", "point has the wrong number of coordinates");
  if (!point_membership(m, p)) throw ValidationError("OffSurface", "point is not on M");
}

// Visits N-subsets of [0, rows) in lexicographic order that contain at least
// one index >= first_new; stops when visit returns true.
template <class F>
bool for_each_minor(std::size_t rows, std::size_t n, std::size_t first_new, F&& visit) {
  if (rows < n) return false;
  std::vector<std::size_t> pick(n);
  for (std::size_t k = 0; k < n; ++k) pick[k] = k;
  while (true) {
    if (pick.back() >= first_new && visit(pick)) return true;
    std::size_t k = n;
    while (k > 0 && pick[k - 1] == rows - n + (k - 1)) --k;
    if (k == 0) return false;
    ++pick[k - 1];
    for (std::size_t j = k; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

LeviTypeResult levi_type(const HypersurfaceSpec& m, const InvariantOptions& opt) {
  const auto fields = cr_basis(m);
  const auto ideal = m.ideal();
  const unsigned top = m.n > 1 ? static_cast<unsigned>(m.n - 1) : 1u;
  const auto alphas = multi_indices_up_to(fields.size(), top);

  std::vector<MultiIndex> idx;
  std::vector<std::vector<Polynomial>> rows;
  std::size_t next = 0;
  LeviTypeResult out;
  for (unsigned k = 0; k <= top; ++k) {
    const std::size_t first_new = rows.size();
    while (next < alphas.size() && order(alphas[next]) == k) {
      idx.push_back(alphas[next]);
      rows.push_back(v_alpha(m, fields, alphas[next]));
      ++next;
    }
    if (k == 0) continue;
    const bool found = for_each_minor(rows.size(), m.n, first_new, [&](const std::vector<std::size_t>& pick) {
      PolyMatrix sub;
      for (std::size_t r : pick) sub.push_back(rows[r]);
      Polynomial det = determinant(sub, m.arena);
      if (det.is_zero() || radical_membership(det, ideal, opt.groebner)) return false;
      SpanningCertificate cert;
      cert.k = k;
      for (std::size_t r : pick) cert.rows.push_back(idx[r]);
      cert.minor = std::move(det);
      out.certificate = std::move(cert);
      return true;
    });
    if (found) {
      out.ell = k;
      return out;
    }
  }
  return out;
}

NondegeneracyVerdict holomorphic_nondegeneracy(const HypersurfaceSpec& m,
                                               const InvariantOptions& opt) {
  NondegeneracyVerdict v;
  v.alpha_bound = m.n > 1 ? static_cast<unsigned>(m.n - 1) : 1u;
  auto lt = levi_type(m, opt);
  if (lt.certificate) {
    v.nondegenerate = true;
    v.certificate = std::move(lt.certificate);
  } else {
    v.witness = degeneracy_witness(m, opt.witness_degree);
  }
  return v;
}

PointwiseOrder pointwise_nondegeneracy_order(const HypersurfaceSpec& m, const Point& p,
                                             unsigned bound) {
  require_on_surface(m, p);
  if (bound == 0) bound = m.n > 1 ? static_cast<unsigned>(m.n - 1) : 1u;
  const std::size_t pivot = choose_pivot(m, p);
  const auto fields = cr_basis(m, pivot);
  const auto at = complexified_point(m.arena, p);
  const Coeff piv = m.rho.derivative(m.arena->anti(pivot)).evaluate(at);
  PointwiseOrder out;
  out.bound = bound;
  RowSpace span(m.n);
  for (const auto& alpha : multi_indices_up_to(fields.size(), bound)) {
    CoeffVector row;
    const Coeff scale = Coeff(1) / piv.pow(order(alpha));
    for (const auto& c : v_alpha(m, fields, alpha)) row.push_back(c.evaluate(at) * scale);
    span.insert(row);
    if (span.rank() == m.n) {
      out.k = order(alpha);
      return out;
    }
  }
  return out;
}

EssentialFiniteness essential_finiteness_at(const HypersurfaceSpec& m, const Point& p0,
                                            const InvariantOptions& opt) {
  require_on_surface(m, p0);
  EssentialFiniteness out;
  out.ell_max = opt.effective_ell_max(m.n);
  out.d_max = opt.codim_degree_max;
  const auto alphas = multi_indices_up_to(m.n - 1, out.ell_max);
  std::size_t next = 0;
  for (unsigned ell = 0; ell <= out.ell_max; ++ell) {
    while (next < alphas.size() && order(alphas[next]) == ell) {
      Polynomial c = c_alpha(m, p0, alphas[next++]);
      if (!c.is_zero()) out.generators.push_back(std::move(c));
    }
    if (ell == 0) continue;
    if (out.generators.empty()) continue;
    const auto r = finite_codimension_at_origin(out.generators, out.d_max);
    if (r.status == CodimResult::Status::finite_certified) {
      out.finite = true;
      out.ell = ell;
      out.codimension = r.codimension;
      out.certifying_degree = r.degree;
      return out;
    }
  }
  return out;
}

bool is_tangent_holomorphic_field(const HypersurfaceSpec& m, const HoloField& x) {
  Polynomial xr(m.arena);
  for (std::size_t j = 0; j < x.a.size(); ++j) xr += x.a[j] * m.rho.derivative(m.arena->holo(j));
  return xr.divide_exact(m.rho).has_value();
}

WitnessResult degeneracy_witness(const HypersurfaceSpec& m, unsigned deg_bound) {
  const ArenaPtr& a = m.arena;
  std::vector<std::size_t> holo;
  for (std::size_t k = 0; k < m.n; ++k) holo.push_back(a->holo(k));
  std::vector<Polynomial> grad;
  for (std::size_t k = 0; k < m.n; ++k) grad.push_back(m.rho.derivative(a->holo(k)));
  const std::vector<Polynomial> divisor{m.rho};

  WitnessResult out;
  for (unsigned b = 0; b <= deg_bound; ++b) {
    out.degree_bound = b;
    // Unknown u_{j,mono} is the coefficient of mono in a_j. X(rho) lies in (rho)
    // iff its remainder modulo rho vanishes, and the remainder is linear in
    // the unknowns, so each unknown contributes the column NF(mono * rho_Zj).
    struct Unknown {
      std::size_t j;
      Exponents mono;
    };
    std::vector<Unknown> unknowns;
    std::map<Exponents, std::vector<std::pair<std::size_t, Coeff>>, std::greater<>> eqs;
    for (std::size_t j = 0; j < m.n; ++j) {
      for (unsigned d = 0; d <= b; ++d) {
        auto monos = monomials_of_degree(a->size(), holo, d);
        std::reverse(monos.begin(), monos.end());
        for (auto& mono : monos) {
          const std::size_t col = unknowns.size();
          const Polynomial g = Polynomial::monomial(a, mono, Coeff(1)) * grad[j];
          const Polynomial r = divide(g, divisor).remainder;
          for (const auto& t : r.terms()) eqs[t.exps].emplace_back(col, t.coeff);
          unknowns.push_back({j, std::move(mono)});
        }
      }
    }
    RowSpace space(unknowns.size());
    for (auto& [mono, row] : eqs) {
      std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      space.insert(row);
    }
    auto kv = space.first_kernel_vector();
    if (!kv) continue;
    HoloField x;
    x.a.assign(m.n, Polynomial(a));
    for (std::size_t col = 0; col < unknowns.size(); ++col) {
      if ((*kv)[col].is_zero()) continue;
      x.a[unknowns[col].j] += Polynomial::monomial(a, unknowns[col].mono, (*kv)[col]);
    }
    Polynomial xr(a);
    for (std::size_t j = 0; j < m.n; ++j) xr += x.a[j] * grad[j];
    auto q = xr.divide_exact(m.rho);
    internal_check(q.has_value(), "witness does not satisfy the tangency identity");
    out.field = std::move(x);
    out.multiplier = std::move(*q);
    return out;
  }
  return out;
}

namespace {

// Column indices for jets of vector fields: one column per (slot, monomial).
class JetColumns {
 public:
  JetColumns(std::size_t slots, unsigned degree) : slots_(slots) {
    // Number of monomials of degree <= `degree` in `slots` variables.
    std::size_t count = 1;
    for (std::size_t k = 1; k <= slots; ++k) count = count * (degree + k) / k;
    columns_ = count * slots;
  }

  std::size_t columns() const { return columns_; }

  SparseRow row(const VectorField& f) {
    SparseRow out;
    for (std::size_t v = 0; v < slots_; ++v) {
      for (const auto& t : f.c[v].terms()) {
        auto key = std::make_pair(v, t.exps);
        auto it = index_.find(key);
        if (it == index_.end()) it = index_.emplace(key, index_.size()).first;
        out.emplace_back(it->second, t.coeff);
      }
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
  }

 private:
  std::size_t slots_;
  std::size_t columns_ = 0;
  std::map<std::pair<std::size_t, Exponents>, std::size_t> index_;
};

}  // namespace

FiniteTypeResult bloom_graham_type_at(const HypersurfaceSpec& m, const Point& p,
                                      unsigned length_bound) {
  require_on_surface(m, p);
  const std::size_t pivot = choose_pivot(m, p);
  HypersurfaceSpec local = m;
  local.rho = shifted_rho(m, p);
  local.base_point.assign(m.n, Coeff(0));
  const ArenaPtr& a = m.arena;
  const std::size_t dim = 2 * m.n;

  std::vector<VectorField> gens;
  for (const auto& l : cr_basis(local, pivot)) {
    VectorField f = to_vector_field(a, l);
    gens.push_back(conjugate_field(f));
    gens.push_back(std::move(f));
  }
  // Generator order: L_1, conj L_1, L_2, ...
  for (std::size_t k = 0; k + 1 < gens.size(); k += 2) std::swap(gens[k], gens[k + 1]);

  FiniteTypeResult out;
  out.bound = length_bound;
  if (length_bound == 0) return out;

  struct Kept {
    VectorField f;
    unsigned length;
  };
  std::vector<Kept> kept;
  RowSpace values(dim);
  const std::vector<Coeff> origin(a->size(), Coeff(0));
  auto value_row = [&](const VectorField& f) {
    CoeffVector r;
    for (std::size_t v = 0; v < dim; ++v) r.push_back(f.c[v].evaluate(origin));
    return r;
  };

  std::vector<std::size_t> previous;  // indices into kept of the last level
  for (unsigned len = 1; len <= length_bound; ++len) {
    const unsigned jet = length_bound - len;
    JetColumns cols(dim, jet);
    RowSpace span(cols.columns());
    for (const auto& k : kept) span.insert(cols.row(truncate(k.f, jet)));
    std::vector<VectorField> candidates;
    if (len == 1) {
      for (const auto& g : gens) candidates.push_back(truncate(g, jet));
    } else {
      for (const auto& g : gens) {
        for (std::size_t idx : previous) {
          candidates.push_back(truncate(lie_bracket(g, kept[idx].f), jet));
        }
      }
    }
    previous.clear();
    for (auto& c : candidates) {
      if (c.is_zero()) continue;
      if (!span.insert(cols.row(c))) continue;
      values.insert(value_row(c));
      previous.push_back(kept.size());
      kept.push_back({std::move(c), len});
    }
    out.fields_kept = kept.size();
    if (values.rank() == dim - 1) {
      out.type = len;
      return out;
    }
    if (previous.empty()) break;  // no new brackets can appear
  }
  return out;
}

}  // namespace crlab
