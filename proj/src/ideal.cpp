#include "crlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "crlab/errors.hpp"
#include "crlab/linalg.hpp"

namespace crlab {

const ArenaPtr& IdealPresentation::arena() const {
  static const ArenaPtr none;
  for (const auto& g : generators) {
    if (g.arena()) return g.arena();
  }
  return none;
}

IdealPresentation principal_ideal(const Polynomial& g, bool square_free) {
  IdealPresentation ideal;
  ideal.generators.push_back(g);
  ideal.known_radical = square_free;
  return ideal;
}

namespace {

int lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

int order_compare(MonomialOrder o, const Exponents& a, const Exponents& b) {
  return o == MonomialOrder::grlex ? grlex_compare(a, b) : lex_compare(a, b);
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = std::max(a[k], b[k]);
  return r;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
  return r;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

// Polynomial whose terms are sorted decreasingly in the working order.
struct GPoly {
  std::vector<Term> terms;
  unsigned sugar = 0;

  bool is_zero() const { return terms.empty(); }
  const Exponents& lm() const { return terms.front().exps; }
  const Coeff& lc() const { return terms.front().coeff; }
};

class Engine {
 public:
  Engine(MonomialOrder order, ArenaPtr arena) : order_(order), arena_(std::move(arena)) {}

  GPoly from(const Polynomial& p) const {
    GPoly g;
    g.terms = p.terms();
    if (order_ != MonomialOrder::grlex) {
      std::sort(g.terms.begin(), g.terms.end(), [this](const Term& a, const Term& b) {
        return order_compare(order_, a.exps, b.exps) > 0;
      });
    }
    g.sugar = p.is_zero() ? 0 : static_cast<unsigned>(p.total_degree());
    return g;
  }

  Polynomial to(const GPoly& g) const { return Polynomial::from_terms(arena_, g.terms); }

  void make_monic(GPoly& g) const {
    if (g.is_zero() || g.lc().is_one()) return;
    const Coeff inv = Coeff(1) / g.lc();
    for (auto& t : g.terms) t.coeff *= inv;
  }

  // a - c * x^m * b
  std::vector<Term> sub_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                               const Coeff& c, const Exponents& m) const {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
      if (j == b.size()) {
        out.push_back(a[i++]);
        continue;
      }
      Exponents bm(m.size());
      for (std::size_t k = 0; k < m.size(); ++k) bm[k] = b[j].exps[k] + m[k];
      const int cmp = i == a.size() ? -1 : order_compare(order_, a[i].exps, bm);
      if (cmp > 0) {
        out.push_back(a[i++]);
      } else if (cmp < 0) {
        out.push_back({std::move(bm), -(c * b[j].coeff)});
        ++j;
      } else {
        Coeff v = a[i].coeff - c * b[j].coeff;
        if (!v.is_zero()) out.push_back({std::move(bm), std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full reduction (leading and tail terms). Quotients are tracked when asked.
  GPoly reduce(GPoly f, const std::vector<GPoly>& basis,
               std::vector<std::vector<Term>>* quotients = nullptr) const {
    GPoly rem;
    rem.sugar = f.sugar;
    while (!f.is_zero()) {
      const Term& head = f.terms.front();
      bool reduced = false;
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const GPoly& g = basis[k];
        if (g.is_zero() || !divides(g.lm(), head.exps)) continue;
        const Exponents m = quotient(head.exps, g.lm());
        const Coeff c = head.coeff / g.lc();
        if (quotients) (*quotients)[k].push_back({m, c});
        f.sugar = std::max(f.sugar, total_degree(m) + g.sugar);
        rem.sugar = std::max(rem.sugar, f.sugar);
        f.terms = sub_scaled(f.terms, g.terms, c, m);
        reduced = true;
        break;
      }
      if (!reduced) {
        rem.terms.push_back(std::move(f.terms.front()));
        f.terms.erase(f.terms.begin());
      }
    }
    return rem;
  }

  MonomialOrder order() const { return order_; }
  const ArenaPtr& arena() const { return arena_; }

 private:
  MonomialOrder order_;
  ArenaPtr arena_;
};

struct Pair {
  unsigned sugar;
  Exponents lcm;
  std::size_t i;
  std::size_t j;
};

std::vector<GPoly> buchberger(const Engine& engine, std::vector<GPoly> input,
                              const GroebnerOptions& options) {
  const MonomialOrder order = engine.order();
  std::vector<GPoly> basis;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t processed = 0;

  auto unit_basis = [&]() {
    GPoly one;
    one.terms.push_back({Exponents(engine.arena()->size(), 0), Coeff(1)});
    return std::vector<GPoly>{one};
  };

  auto add = [&](GPoly h) {
    engine.make_monic(h);
    const std::size_t k = basis.size();
    for (std::size_t i = 0; i < k; ++i) {
      if (!active[i]) continue;
      const Exponents l = lcm(basis[i].lm(), h.lm());
      const unsigned si = basis[i].sugar + total_degree(quotient(l, basis[i].lm()));
      const unsigned sh = h.sugar + total_degree(quotient(l, h.lm()));
      pairs.push_back({std::max(si, sh), l, i, k});
      pending.insert({i, k});
    }
    // Older elements whose leading monomial is a multiple of the new one are
    // redundant for the final basis but remain usable as reducers.
    basis.push_back(std::move(h));
    active.push_back(true);
  };

  for (auto& g : input) {
    GPoly r = engine.reduce(std::move(g), basis);
    if (r.is_zero()) continue;
    if (total_degree(r.lm()) == 0) return unit_basis();
    add(std::move(r));
  }

  auto pair_less = [order](const Pair& a, const Pair& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    const int c = order_compare(order, a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::tie(a.j, a.i) < std::tie(b.j, b.i);
  };

  while (!pairs.empty()) {
    auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
    Pair p = std::move(*it);
    pairs.erase(it);
    pending.erase({p.i, p.j});
    const GPoly& a = basis[p.i];
    const GPoly& b = basis[p.j];
    if (coprime(a.lm(), b.lm())) continue;
    // Chain criterion: some k with lm(k) | lcm whose pairs with i and j are
    // already done makes this pair redundant.
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == p.i || k == p.j || !divides(basis[k].lm(), p.lcm)) continue;
      auto key = [](std::size_t x, std::size_t y) {
        return std::make_pair(std::min(x, y), std::max(x, y));
      };
      if (!pending.count(key(p.i, k)) && !pending.count(key(p.j, k))) redundant = true;
    }
    if (redundant) continue;
    if (++processed > options.spair_budget) {
      throw ResourceLimitError("Groebner basis exceeded the S-pair budget of " +
                               std::to_string(options.spair_budget));
    }
    GPoly s;
    s.sugar = p.sugar;
    const Exponents ma = quotient(p.lcm, a.lm());
    const Exponents mb = quotient(p.lcm, b.lm());
    std::vector<Term> left;
    for (const auto& t : a.terms) {
      Exponents e(ma.size());
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.exps[k] + ma[k];
      left.push_back({std::move(e), t.coeff / a.lc()});
    }
    s.terms = engine.sub_scaled(left, b.terms, Coeff(1) / b.lc(), mb);
    GPoly h = engine.reduce(std::move(s), basis);
    if (h.is_zero()) continue;
    if (total_degree(h.lm()) == 0) return unit_basis();
    add(std::move(h));
  }

  // Minimize, then interreduce.
  std::vector<GPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < basis.size() && !drop; ++j) {
      if (i == j || !divides(basis[j].lm(), basis[i].lm())) continue;
      // Equal leading monomials: keep the earliest.
      drop = basis[j].lm() != basis[i].lm() || j < i;
    }
    if (!drop) minimal.push_back(basis[i]);
  }
  std::vector<GPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j != i) others.push_back(minimal[j]);
    }
    GPoly head;
    head.terms.push_back(minimal[i].terms.front());
    GPoly tail;
    tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
    GPoly r = engine.reduce(std::move(tail), others);
    head.terms.insert(head.terms.end(), r.terms.begin(), r.terms.end());
    head.sugar = minimal[i].sugar;
    engine.make_monic(head);
    reduced.push_back(std::move(head));
  }
  std::sort(reduced.begin(), reduced.end(), [order](const GPoly& x, const GPoly& y) {
    return order_compare(order, x.lm(), y.lm()) < 0;
  });
  return reduced;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const IdealPresentation& ideal,
                                       const GroebnerOptions& options) {
  if (ideal.generators.empty()) {
    throw Error(ErrorCode::invalid_argument, "ideal needs at least one generator");
  }
  Engine engine(ideal.order, ideal.arena());
  std::vector<GPoly> input;
  for (const auto& g : ideal.generators) {
    if (!g.is_zero()) input.push_back(engine.from(g));
  }
  if (input.empty()) return {};
  // Deterministic processing order: increasing leading monomial.
  std::stable_sort(input.begin(), input.end(), [&](const GPoly& a, const GPoly& b) {
    return order_compare(ideal.order, a.lm(), b.lm()) < 0;
  });
  std::vector<Polynomial> out;
  for (const auto& g : buchberger(engine, std::move(input), options)) out.push_back(engine.to(g));
  return out;
}

DivisionResult divide(const Polynomial& f, const std::vector<Polynomial>& divisors,
                      MonomialOrder order) {
  const ArenaPtr arena = f.arena() ? f.arena() : (divisors.empty() ? ArenaPtr() : divisors[0].arena());
  Engine engine(order, arena);
  std::vector<GPoly> gs;
  for (const auto& d : divisors) gs.push_back(engine.from(d));
  std::vector<std::vector<Term>> q(divisors.size());
  GPoly r = engine.reduce(engine.from(f), gs, &q);
  DivisionResult out;
  for (auto& terms : q) out.quotients.push_back(Polynomial::from_terms(arena, std::move(terms)));
  out.remainder = engine.to(r);
  return out;
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                       MonomialOrder order) {
  return divide(f, basis, order).remainder;
}

bool ideal_membership(const Polynomial& f, const IdealPresentation& ideal,
                      const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  if (ideal.generators.size() == 1 && !ideal.generators[0].is_zero()) {
    return f.divide_exact(ideal.generators[0]).has_value();
  }
  return normal_form(f, groebner_basis(ideal, options), ideal.order).is_zero();
}

bool radical_membership_rabinowitsch(const Polynomial& f, const IdealPresentation& ideal,
                                     const GroebnerOptions& options) {
  if (f.is_zero()) return true;
  const ArenaPtr base = ideal.arena() ? ideal.arena() : f.arena();
  const ArenaPtr ext = base->extended({base->fresh_name("t_rab"), false});
  const std::size_t t = ext->size() - 1;
  IdealPresentation j;
  j.order = MonomialOrder::grlex;
  for (const auto& g : ideal.generators) j.generators.push_back(g.embed(ext));
  j.generators.push_back(Polynomial::constant(ext, Coeff(1)) -
                         Polynomial::variable(ext, t) * f.embed(ext));
  const auto gb = groebner_basis(j, options);
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool radical_membership(const Polynomial& f, const IdealPresentation& ideal,
                        const GroebnerOptions& options) {
  if (ideal.known_radical && ideal.generators.size() == 1) {
    return ideal_membership(f, ideal, options);
  }
  return radical_membership_rabinowitsch(f, ideal, options);
}

std::vector<Exponents> monomials_of_degree(std::size_t arena_size,
                                           const std::vector<std::size_t>& slots, unsigned d) {
  std::vector<Exponents> out;
  Exponents cur(arena_size, 0);
  // Distribute d over slots, earliest slot taking the most first (decreasing grlex).
  auto rec = [&](auto&& self, std::size_t k, unsigned left) -> void {
    if (k + 1 == slots.size()) {
      cur[slots[k]] = left;
      out.push_back(cur);
      cur[slots[k]] = 0;
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      cur[slots[k]] = e;
      self(self, k + 1, left - e);
    }
    cur[slots[k]] = 0;
  };
  if (slots.empty()) {
    if (d == 0) out.push_back(cur);
    return out;
  }
  rec(rec, 0, d);
  return out;
}

CodimResult finite_codimension_at_origin(const std::vector<Polynomial>& generators,
                                         unsigned d_max,
                                         std::optional<std::vector<std::size_t>> slots_opt) {
  CodimResult result;
  result.degree = d_max;
  std::vector<Polynomial> gens;
  for (const auto& g : generators) {
    if (!g.is_zero()) gens.push_back(g);
  }
  if (gens.empty()) return result;
  const ArenaPtr arena = gens.front().arena();
  std::vector<std::size_t> slots;
  if (slots_opt) {
    slots = *slots_opt;
  } else {
    for (std::size_t k = 0; k < arena->dimension(); ++k) slots.push_back(k);
  }
  std::vector<bool> allowed(arena->size(), false);
  for (auto s : slots) allowed[s] = true;
  for (const auto& g : gens) {
    if (!g.constant_term().is_zero()) {
      throw Error(ErrorCode::invalid_argument, "generator does not vanish at the origin: " + g.to_string());
    }
    for (std::size_t v = 0; v < arena->size(); ++v) {
      if (!allowed[v] && g.depends_on(v)) {
        throw Error(ErrorCode::invalid_argument, "generator involves a variable outside the local coordinates");
      }
    }
  }

  for (unsigned d = 1; d <= d_max; ++d) {
    // Column index for every monomial of degree <= d; degree d columns last.
    std::map<Exponents, std::size_t> column;
    std::vector<std::vector<Exponents>> by_degree;
    std::size_t below = 0;
    for (unsigned k = 0; k <= d; ++k) {
      by_degree.push_back(monomials_of_degree(arena->size(), slots, k));
      for (const auto& m : by_degree.back()) column.emplace(m, column.size());
      if (k < d) below = column.size();
    }
    RowSpace full(column.size());
    RowSpace low(below);
    for (const auto& g : gens) {
      const int lowest = g.min_degree();
      for (unsigned k = 0; k + static_cast<unsigned>(lowest) <= d; ++k) {
        for (const auto& m : by_degree[k]) {
          SparseRow row;
          SparseRow row_low;
          for (const auto& t : g.terms()) {
            Exponents e = t.exps;
            for (std::size_t v = 0; v < e.size(); ++v) e[v] += m[v];
            if (total_degree(e) > d) continue;
            const std::size_t c = column.at(e);
            row.emplace_back(c, t.coeff);
            if (c < below) row_low.emplace_back(c, t.coeff);
          }
          std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          std::sort(row_low.begin(), row_low.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          full.insert(std::move(row));
          low.insert(std::move(row_low));
        }
      }
    }
    bool certified = true;
    for (const auto& m : by_degree[d]) {
      if (!full.contains(SparseRow{{column.at(m), Coeff(1)}})) {
        certified = false;
        break;
      }
    }
    if (certified) {
      result.status = CodimResult::Status::finite_certified;
      result.degree = d;
      result.codimension = below - low.rank();
      return result;
    }
  }
  return result;
}

}  // namespace crlab
