#include "crlab/parser.hpp"

#include <cctype>
#include <cstdlib>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

class Parser {
 public:
  Parser(std::string_view text, ArenaPtr arena) : s_(text), arena_(std::move(arena)) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  Polynomial expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (accept('*')) {
        acc *= factor();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) {
          pos_ = at;
          fail(d.is_zero() ? "division by zero" : "division only by a nonzero constant");
        }
        acc *= Coeff(1) / d.constant_term();
      } else {
        return acc;
      }
    }
  }

  Polynomial factor() {
    Polynomial b = base();
    if (accept('^')) {
      skip();
      const std::size_t start = pos_;
      if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
        fail("exponent must be a nonnegative integer");
      }
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("exponent must be a nonnegative integer");
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == '/')) {
        fail("exponent must be a nonnegative integer");
      }
      if (pos_ - start > 4) fail("exponent too large");
      const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      if (e > 1000) fail("exponent too large");
      b = b.pow(e);
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E')) {
        fail("decimal literals are not exact; write a fraction");
      }
      Rational v(std::string(s_.substr(start, pos_ - start)), 10);
      return Polynomial::constant(arena_, Coeff(v));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view ident = s_.substr(start, pos_ - start);
      if (ident == "i") return Polynomial::constant(arena_, Coeff::i());
      if (ident == "conj") {
        expect('(');
        Polynomial inner = expr();
        expect(')');
        return inner.conjugate_swap();
      }
      auto v = arena_->find(ident);
      if (!v) {
        pos_ = start;
        throw ParseError("unknown variable '" + std::string(ident) + "'", start);
      }
      return Polynomial::variable(arena_, *v);
    }
    if (c == '.') fail("decimal literals are not exact; write a fraction");
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  ArenaPtr arena_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_expression(std::string_view text, const ArenaPtr& arena) {
  return Parser(text, arena).parse_all();
}

std::vector<Polynomial> parse_expression_list(std::string_view text, const ArenaPtr& arena) {
  std::vector<Polynomial> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    if (k == text.size() || (text[k] == ',' && depth == 0)) {
      try {
        out.push_back(parse_expression(text.substr(start, k - start), arena));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at column")),
                         start + e.position());
      }
      start = k + 1;
    } else if (text[k] == '(') {
      ++depth;
    } else if (text[k] == ')') {
      --depth;
    }
  }
  return out;
}

Coeff parse_coefficient(std::string_view text) {
  static const ArenaPtr scalar_arena = VariableArena::make(1, {});
  Polynomial p = parse_expression(text, scalar_arena);
  if (!p.is_constant()) throw ParseError("expected a constant", 0);
  return p.constant_term();
}

std::complex<double> parse_complex_literal(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) throw ParseError("empty complex literal", 0);
  double re = 0.0;
  double im = 0.0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const std::size_t start = pos;
    double sign = 1.0;
    if (s[pos] == '+' || s[pos] == '-') {
      if (s[pos] == '-') sign = -1.0;
      ++pos;
    } else if (start != 0) {
      throw ParseError("malformed complex literal", pos);
    }
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    double mag = std::strtod(begin, &end);
    bool has_number = end != begin;
    if (!has_number) mag = 1.0;
    pos += static_cast<std::size_t>(end - begin);
    if (pos < s.size() && s[pos] == '*') ++pos;
    if (pos < s.size() && s[pos] == 'i') {
      im += sign * mag;
      ++pos;
    } else {
      if (!has_number) throw ParseError("malformed complex literal", pos);
      re += sign * mag;
    }
  }
  return {re, im};
}

}  // namespace crlab
