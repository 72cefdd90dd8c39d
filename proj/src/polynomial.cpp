#include "crlab/polynomial.hpp"

#include <algorithm>

#include "crlab/errors.hpp"

namespace crlab {

// ---------------------------------------------------------------------------
// VariableArena

std::vector<AuxSpec> VariableArena::default_aux() {
  return {{"x", false}, {"t", false}, {"s", false}, {"X", false}, {"Y", false}, {"u", false}};
}

ArenaPtr VariableArena::make(std::size_t n) { return make(n, default_aux()); }

ArenaPtr VariableArena::make(std::size_t n, const std::vector<AuxSpec>& aux) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "dimension N must be positive");
  std::shared_ptr<VariableArena> a(new VariableArena());
  a->n_ = n;
  for (std::size_t k = 0; k < n; ++k) {
    a->vars_.push_back({"z" + std::to_string(k + 1), VarKind::holomorphic, n + k});
  }
  for (std::size_t k = 0; k < n; ++k) {
    a->vars_.push_back({"conj(z" + std::to_string(k + 1) + ")", VarKind::antiholomorphic, k});
  }
  for (const auto& spec : aux) a->push_aux(spec);
  return a;
}

void VariableArena::push_aux(const AuxSpec& spec) {
  if (spec.name.empty() || spec.name == "i" || spec.name == "conj" ||
      spec.name == "w" || find(spec.name)) {
    throw Error(ErrorCode::invalid_argument, "bad auxiliary name '" + spec.name + "'");
  }
  const std::size_t idx = vars_.size();
  if (spec.paired) {
    vars_.push_back({spec.name, VarKind::auxiliary, idx + 1});
    vars_.push_back({"conj(" + spec.name + ")", VarKind::auxiliary, idx});
  } else {
    vars_.push_back({spec.name, VarKind::auxiliary, idx});
  }
}

ArenaPtr VariableArena::extended(const AuxSpec& spec) const {
  std::shared_ptr<VariableArena> a(new VariableArena(*this));
  a->push_aux(spec);
  return a;
}

std::string VariableArena::fresh_name(std::string_view base) const {
  std::string candidate(base);
  for (int k = 1; find(candidate); ++k) candidate = std::string(base) + std::to_string(k);
  return candidate;
}

std::optional<std::size_t> VariableArena::find(std::string_view name) const {
  if (name == "w") return n_ - 1;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (vars_[v].name == name) return v;
  }
  return std::nullopt;
}

std::size_t VariableArena::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw UnknownVariableError(std::string(name));
  return *v;
}

bool VariableArena::same_as(const VariableArena& other) const {
  if (this == &other) return true;
  if (n_ != other.n_ || vars_.size() != other.vars_.size()) return false;
  return is_prefix_of(other);
}

bool VariableArena::is_prefix_of(const VariableArena& other) const {
  if (n_ != other.n_ || vars_.size() > other.vars_.size()) return false;
  for (std::size_t v = 0; v < vars_.size(); ++v) {
    if (vars_[v].name != other.vars_[v].name || vars_[v].partner != other.vars_[v].partner) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Monomials

unsigned total_degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

int grlex_compare(const Exponents& a, const Exponents& b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != b[k]) return a[k] < b[k] ? -1 : 1;
  }
  return 0;
}

namespace {

bool term_greater(const Term& a, const Term& b) { return grlex_compare(a.exps, b.exps) > 0; }

Exponents add_exps(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

// a - c * (m * b) where every term is merged in order.
std::vector<Term> sub_scaled(const std::vector<Term>& a, const std::vector<Term>& b,
                             const Coeff& c, const Exponents& m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size()) {
      out.push_back(a[i++]);
      continue;
    }
    Exponents bm = add_exps(b[j].exps, m);
    const int cmp = i == a.size() ? -1 : grlex_compare(a[i].exps, bm);
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

}  // namespace

std::string monomial_to_string(const VariableArena& arena, const Exponents& e) {
  std::string s;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] == 0) continue;
    if (!s.empty()) s += "*";
    s += arena.name(v);
    if (e[v] > 1) s += "^" + std::to_string(e[v]);
  }
  return s.empty() ? "1" : s;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(ArenaPtr arena, const Coeff& c) {
  Polynomial p(std::move(arena));
  if (!c.is_zero()) p.terms_.push_back({Exponents(p.arena_->size(), 0), c});
  return p;
}

Polynomial Polynomial::variable(ArenaPtr arena, std::size_t v) {
  Exponents e(arena->size(), 0);
  if (v >= e.size()) throw Error(ErrorCode::invalid_argument, "variable slot out of range");
  e[v] = 1;
  return monomial(std::move(arena), std::move(e), Coeff(1));
}

Polynomial Polynomial::monomial(ArenaPtr arena, Exponents exps, Coeff c) {
  Polynomial p(std::move(arena));
  internal_check(exps.size() == p.arena_->size(), "monomial length mismatch");
  if (!c.is_zero()) p.terms_.push_back({std::move(exps), std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(ArenaPtr arena, std::vector<Term> terms) {
  Polynomial p(std::move(arena));
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void Polynomial::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().exps == t.exps) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff.is_zero()) out.pop_back();
  terms_ = std::move(out);
}

namespace {

// Bring two operands into a common arena (prefix embedding or adoption by an
// arena-less zero).
void unify(Polynomial& a, Polynomial& b) {
  if (a.arena() == b.arena()) return;
  if (!a.arena()) {
    a = Polynomial(b.arena());
    return;
  }
  if (!b.arena()) {
    b = Polynomial(a.arena());
    return;
  }
  if (a.arena()->same_as(*b.arena())) return;
  if (a.arena()->is_prefix_of(*b.arena())) {
    a = a.embed(b.arena());
  } else if (b.arena()->is_prefix_of(*a.arena())) {
    b = b.embed(a.arena());
  } else {
    throw Error(ErrorCode::invalid_argument, "polynomials live in incompatible arenas");
  }
}

}  // namespace

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && crlab::total_degree(terms_[0].exps) == 0);
}

Coeff Polynomial::constant_term() const {
  if (terms_.empty()) return Coeff(0);
  const Term& last = terms_.back();
  return crlab::total_degree(last.exps) == 0 ? last.coeff : Coeff(0);
}

int Polynomial::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(crlab::total_degree(terms_.front().exps));
}

int Polynomial::min_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(crlab::total_degree(terms_.back().exps));
}

int Polynomial::degree_in(std::size_t v) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps.at(v)));
  return d;
}

bool Polynomial::depends_on(std::size_t v) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [v](const Term& t) { return t.exps.at(v) != 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial other = o;
  unify(*this, other);
  if (other.terms_.empty()) return *this;
  Exponents one(arena_->size(), 0);
  terms_ = sub_scaled(terms_, other.terms_, Coeff(-1), one);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  Polynomial other = o;
  unify(*this, other);
  if (other.terms_.empty()) return *this;
  Exponents one(arena_->size(), 0);
  terms_ = sub_scaled(terms_, other.terms_, Coeff(1), one);
  return *this;
}

Polynomial operator*(const Polynomial& a0, const Polynomial& b0) {
  Polynomial a = a0;
  Polynomial b = b0;
  unify(a, b);
  Polynomial r(a.arena_ ? a.arena_ : b.arena_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() < b.terms_.size()) std::swap(a, b);
  // Accumulate one row of b at a time; each row is already sorted.
  for (const auto& tb : b.terms_) {
    std::vector<Term> row;
    row.reserve(a.terms_.size());
    for (const auto& ta : a.terms_) row.push_back({add_exps(ta.exps, tb.exps), ta.coeff * tb.coeff});
    Exponents one(r.arena_->size(), 0);
    r.terms_ = sub_scaled(r.terms_, row, Coeff(-1), one);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial& Polynomial::operator*=(const Coeff& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

bool operator==(const Polynomial& a0, const Polynomial& b0) {
  if (a0.terms_.empty() && b0.terms_.empty()) return true;
  Polynomial a = a0;
  Polynomial b = b0;
  unify(a, b);
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    if (a.terms_[k].exps != b.terms_[k].exps || a.terms_[k].coeff != b.terms_[k].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(arena_, Coeff(1));
  Polynomial base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t v) const {
  if (arena_ && v >= arena_->size()) {
    throw Error(ErrorCode::invalid_argument, "variable slot out of range");
  }
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exps[v] == 0) continue;
    Term d = t;
    d.coeff *= Coeff(static_cast<long>(t.exps[v]));
    d.exps[v] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(arena_, std::move(out));
}

Polynomial Polynomial::conjugate_swap() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e(t.exps.size(), 0);
    for (std::size_t v = 0; v < e.size(); ++v) e[arena_->partner(v)] = t.exps[v];
    out.push_back({std::move(e), t.coeff.conj()});
  }
  return from_terms(arena_, std::move(out));
}

std::vector<Polynomial> Polynomial::coefficients_in(std::size_t v) const {
  const int d = degree_in(v);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
  for (const auto& t : terms_) {
    Term s = t;
    const auto k = s.exps[v];
    s.exps[v] = 0;
    buckets[k].push_back(std::move(s));
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(arena_, std::move(b)));
  return out;
}

Polynomial Polynomial::from_coefficients(const std::vector<Polynomial>& coeffs, std::size_t v) {
  internal_check(!coeffs.empty(), "from_coefficients needs at least one coefficient");
  ArenaPtr arena = coeffs.front().arena();
  std::vector<Term> out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    for (const auto& t : coeffs[k].terms()) {
      Term s = t;
      s.exps[v] += static_cast<std::uint32_t>(k);
      out.push_back(std::move(s));
    }
  }
  return from_terms(arena, std::move(out));
}

Polynomial Polynomial::substitute(std::size_t v, const Polynomial& value) const {
  const auto coeffs = coefficients_in(v);
  Polynomial result(arena_);
  // Horner in the substituted slot.
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    result = result * value + coeffs[k];
  }
  return result;
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images, const ArenaPtr& target) const {
  internal_check(images.size() == arena_->size(), "compose needs one image per slot");
  // Cache powers per slot.
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Polynomial::constant(target, Coeff(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  std::vector<Term> pending;
  for (const auto& t : terms_) {
    Polynomial m = Polynomial::constant(target, t.coeff);
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] != 0) m *= power(v, t.exps[v]);
    }
    for (auto& mt : m.terms_) pending.push_back(std::move(mt));
  }
  return from_terms(target, std::move(pending));
}

Coeff Polynomial::evaluate(const std::vector<Coeff>& point) const {
  internal_check(point.size() == arena_->size(), "evaluation point has wrong length");
  Coeff sum(0);
  for (const auto& t : terms_) {
    Coeff m = t.coeff;
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] != 0) m *= point[v].pow(t.exps[v]);
    }
    sum += m;
  }
  return sum;
}

Polynomial Polynomial::specialize(const std::vector<std::pair<std::size_t, Coeff>>& values) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term s = t;
    for (const auto& [v, c] : values) {
      if (s.exps[v] != 0) {
        s.coeff *= c.pow(s.exps[v]);
        s.exps[v] = 0;
      }
    }
    if (!s.coeff.is_zero()) out.push_back(std::move(s));
  }
  return from_terms(arena_, std::move(out));
}

Polynomial Polynomial::embed(const ArenaPtr& larger) const {
  if (!arena_) return Polynomial(larger);
  if (!arena_->is_prefix_of(*larger)) {
    throw Error(ErrorCode::invalid_argument, "cannot embed polynomial into unrelated arena");
  }
  Polynomial r(larger);
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.exps.resize(larger->size(), 0);
  return r;
}

Polynomial Polynomial::truncate(unsigned max_degree) const {
  Polynomial r(arena_);
  for (const auto& t : terms_) {
    if (crlab::total_degree(t.exps) <= max_degree) r.terms_.push_back(t);
  }
  return r;
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& d0) const {
  Polynomial a = *this;
  Polynomial d = d0;
  unify(a, d);
  if (d.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero polynomial");
  Polynomial q(a.arena_);
  const Term& lt = d.terms_.front();
  std::vector<Term> quotient;
  while (!a.terms_.empty()) {
    const Term& head = a.terms_.front();
    if (!divides(lt.exps, head.exps)) return std::nullopt;
    Exponents m(head.exps.size());
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = head.exps[k] - lt.exps[k];
    Coeff c = head.coeff / lt.coeff;
    a.terms_ = sub_scaled(a.terms_, d.terms_, c, m);
    quotient.push_back({std::move(m), std::move(c)});
  }
  q.terms_ = std::move(quotient);  // produced in decreasing order
  return q;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial r = *this;
  const Coeff inv = Coeff(1) / terms_.front().coeff;
  r *= inv;
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    const bool unit = crlab::total_degree(t.exps) == 0;
    const bool negative = t.coeff.prints_negative();
    const Coeff shown = negative ? -t.coeff : t.coeff;
    if (first) {
      if (negative) s += "-";
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (unit) {
      s += shown.to_string();
    } else if (shown.is_one()) {
      s += monomial_to_string(*arena_, t.exps);
    } else {
      s += shown.to_string() + "*" + monomial_to_string(*arena_, t.exps);
    }
  }
  return s;
}

Polynomial exact_quotient(const Polynomial& a, const Polynomial& d) {
  auto q = a.divide_exact(d);
  internal_check(q.has_value(), "exact division failed");
  return *q;
}

}  // namespace crlab
