#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crlab/coefficient.hpp"

namespace crlab {

enum class VarKind { holomorphic, antiholomorphic, auxiliary };

struct VarInfo {
  std::string name;
  VarKind kind;
  std::size_t partner;  // image under the conjugation involution
};

struct AuxSpec {
  std::string name;
  bool paired = false;  // paired aux u gets a partner slot printed "conj(u)"
};

class VariableArena;
using ArenaPtr = std::shared_ptr<const VariableArena>;

// Variable slots of the complexified ring: Z_1..Z_N at 0..N-1, their
// conjugates zeta_1..zeta_N at N..2N-1, then auxiliary indeterminates.
// Conjugation pairs Z_k with zeta_k; auxiliaries are fixed unless paired.
class VariableArena {
 public:
  static std::vector<AuxSpec> default_aux();

  static ArenaPtr make(std::size_t n);
  static ArenaPtr make(std::size_t n, const std::vector<AuxSpec>& aux);

  // A new arena with one more auxiliary slot appended. Polynomials over this
  // arena embed into the result.
  ArenaPtr extended(const AuxSpec& spec) const;
  // Fresh auxiliary name not yet used in this arena.
  std::string fresh_name(std::string_view base) const;

  std::size_t dimension() const { return n_; }
  std::size_t size() const { return vars_.size(); }
  std::size_t holo(std::size_t k) const { return k; }
  std::size_t anti(std::size_t k) const { return n_ + k; }

  const VarInfo& info(std::size_t v) const { return vars_.at(v); }
  const std::string& name(std::size_t v) const { return vars_.at(v).name; }
  std::size_t partner(std::size_t v) const { return vars_.at(v).partner; }

  // Accepts z1..zN, w (alias for zN), conj(zk), aux names and conj(aux).
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;

  bool same_as(const VariableArena& other) const;
  bool is_prefix_of(const VariableArena& other) const;

 private:
  VariableArena() = default;
  void push_aux(const AuxSpec& spec);

  std::size_t n_ = 0;
  std::vector<VarInfo> vars_;
};

using Exponents = std::vector<std::uint32_t>;

struct Term {
  Exponents exps;
  Coeff coeff;
};

unsigned total_degree(const Exponents& e);
// Graded lexicographic comparison (slot 0 is the largest variable).
int grlex_compare(const Exponents& a, const Exponents& b);

// Exact sparse multivariate polynomial over the Gaussian rationals. Terms are
// kept in strictly decreasing graded-lex order with no zero coefficients, so
// structural equality is mathematical equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(ArenaPtr arena) : arena_(std::move(arena)) {}

  static Polynomial constant(ArenaPtr arena, const Coeff& c);
  static Polynomial variable(ArenaPtr arena, std::size_t v);
  static Polynomial monomial(ArenaPtr arena, Exponents exps, Coeff c);
  static Polynomial from_terms(ArenaPtr arena, std::vector<Term> terms);

  const ArenaPtr& arena() const { return arena_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (coefficient of the unit monomial).
  Coeff constant_term() const;
  const Term& leading_term() const { return terms_.front(); }

  // -1 for the zero polynomial.
  int total_degree() const;
  // Lowest total degree of a nonzero term: order of vanishing at the origin.
  int min_degree() const;
  int degree_in(std::size_t v) const;
  bool depends_on(std::size_t v) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Coeff& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Coeff& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned e) const;
  Polynomial derivative(std::size_t v) const;
  // Swap Z_k <-> zeta_k (and paired auxiliaries), conjugate coefficients.
  Polynomial conjugate_swap() const;

  // coefficients_in(v)[k] is the coefficient of v^k.
  std::vector<Polynomial> coefficients_in(std::size_t v) const;
  static Polynomial from_coefficients(const std::vector<Polynomial>& coeffs,
                                      std::size_t v);

  Polynomial substitute(std::size_t v, const Polynomial& value) const;
  // images[v] replaces slot v; result lives in `target`.
  Polynomial compose(const std::vector<Polynomial>& images,
                     const ArenaPtr& target) const;
  Coeff evaluate(const std::vector<Coeff>& point) const;
  // Replace the listed slots by constants.
  Polynomial specialize(const std::vector<std::pair<std::size_t, Coeff>>& values) const;

  Polynomial embed(const ArenaPtr& larger) const;
  Polynomial truncate(unsigned max_degree) const;

  // Quotient if `d` divides this exactly, otherwise nullopt.
  std::optional<Polynomial> divide_exact(const Polynomial& d) const;
  // Scale so the leading coefficient is 1 (zero stays zero).
  Polynomial monic() const;

  std::string to_string() const;

 private:
  void canonicalize();

  ArenaPtr arena_;
  std::vector<Term> terms_;
};

// Divide by a polynomial that must divide exactly; failure is an internal error.
Polynomial exact_quotient(const Polynomial& a, const Polynomial& d);

std::string monomial_to_string(const VariableArena& arena, const Exponents& e);

}  // namespace crlab
