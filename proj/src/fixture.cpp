#include "crlab/fixture.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "crlab/parser.hpp"

namespace crlab {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= s.size(); ++k) {
    if (k == s.size() || s[k] == ',') {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

// Runs `f`, turning library errors into InputError at `line`.
template <class F>
auto at_line(const Fixture& fx, std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const ValidationError& e) {
    throw InputError(fx.source, line, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::parse || e.code() == ErrorCode::unknown_variable ||
        e.code() == ErrorCode::invalid_argument) {
      throw InputError(fx.source, line, e.what());
    }
    throw;
  }
}

std::size_t parse_dimension(const Fixture& fx, const FixtureValue& v) {
  std::size_t pos = 0;
  long n = 0;
  try {
    n = std::stol(v.text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != v.text.size() || n < 1 || n > 16) {
    throw InputError(fx.source, v.line, "dimension must be an integer in 1..16");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

std::string Fixture::display_name() const {
  if (name) return name->text;
  const auto slash = source.find_last_of('/');
  return slash == std::string::npos ? source : source.substr(slash + 1);
}

bool Fixture::expects_rejection() const { return expect && expect->text == "rejected"; }

Fixture parse_fixture(std::string_view text, std::string source) {
  Fixture fx;
  fx.source = std::move(source);
  fx.contents = std::string(text);
  std::istringstream in(fx.contents);
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(std::string_view(raw).substr(0, hash));
    if (body.empty()) continue;
    if (body.rfind("aux ", 0) == 0) {
      const auto colon = body.find(':');
      if (colon == std::string::npos) throw InputError(fx.source, line, "expected 'aux NAME: relation'");
      const std::string name = trim(std::string_view(body).substr(4, colon - 4));
      const std::string rel = trim(std::string_view(body).substr(colon + 1));
      if (!is_identifier(name)) throw InputError(fx.source, line, "bad auxiliary name '" + name + "'");
      if (rel.empty()) throw InputError(fx.source, line, "empty auxiliary relation");
      for (const auto& a : fx.aux) {
        if (a.name == name) throw InputError(fx.source, line, "auxiliary '" + name + "' declared twice");
      }
      fx.aux.push_back({name, {rel, line}});
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw InputError(fx.source, line, "expected 'key = value'");
    const std::string key = trim(std::string_view(body).substr(0, eq));
    FixtureValue value{trim(std::string_view(body).substr(eq + 1)), line};
    if (value.text.empty()) throw InputError(fx.source, line, "empty value for '" + key + "'");
    if (key == "curve") {
      fx.curves.push_back(std::move(value));
      continue;
    }
    if (key == "note") {
      fx.notes.push_back(std::move(value));
      continue;
    }
    std::optional<FixtureValue>* slot = nullptr;
    if (key == "name") slot = &fx.name;
    else if (key == "N") slot = &fx.n;
    else if (key == "rho") slot = &fx.rho;
    else if (key == "point") slot = &fx.point;
    else if (key == "map") slot = &fx.map;
    else if (key == "target") slot = &fx.target;
    else if (key == "target_N") slot = &fx.target_n;
    else if (key == "target_point") slot = &fx.target_point;
    else if (key == "implicit") slot = &fx.implicit;
    else if (key == "expect") slot = &fx.expect;
    if (slot == nullptr) throw InputError(fx.source, line, "unknown key '" + key + "'");
    if (slot->has_value()) {
      throw InputError(fx.source, line, "duplicate key '" + key + "' (first on line " +
                                            std::to_string((*slot)->line) + ")");
    }
    *slot = std::move(value);
  }
  if (!fx.n) throw InputError(fx.source, 0, "missing 'N'");
  if (!fx.rho) throw InputError(fx.source, 0, "missing 'rho'");
  parse_dimension(fx, *fx.n);
  if (fx.target_n) parse_dimension(fx, *fx.target_n);
  if (fx.expect && fx.expect->text != "rejected" && fx.expect->text != "valid") {
    throw InputError(fx.source, fx.expect->line, "expect must be 'rejected' or 'valid'");
  }
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, 0, "cannot read fixture");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_fixture(ss.str(), path);
}

Point parse_point(std::string_view text, std::size_t n) {
  const auto parts = split_commas(text);
  if (parts.size() != 2 * n) {
    throw Error(ErrorCode::invalid_argument, "point needs " + std::to_string(2 * n) +
                                                 " rationals (re,im per coordinate), got " +
                                                 std::to_string(parts.size()));
  }
  Point p;
  for (std::size_t k = 0; k < n; ++k) {
    const Coeff re = parse_coefficient(parts[2 * k]);
    const Coeff im = parse_coefficient(parts[2 * k + 1]);
    if (sgn(re.im()) != 0 || sgn(im.im()) != 0) {
      throw Error(ErrorCode::invalid_argument, "point entries must be real rationals");
    }
    p.push_back(Coeff(re.re(), im.re()));
  }
  return p;
}

ArenaPtr fixture_arena(const Fixture& f) {
  ArenaPtr a = VariableArena::make(parse_dimension(f, *f.n));
  for (const auto& aux : f.aux) {
    if (!a->find(aux.name)) a = a->extended({aux.name, true});
  }
  return a;
}

HypersurfaceSpec build_hypersurface(const Fixture& f) {
  const ArenaPtr a = fixture_arena(f);
  const std::size_t n = a->dimension();
  const Polynomial rho = at_line(f, f.rho->line, [&] { return parse_expression(f.rho->text, a); });
  Point p(n, Coeff(0));
  if (f.point) p = at_line(f, f.point->line, [&] { return parse_point(f.point->text, n); });
  return at_line(f, f.rho->line, [&] { return validate(rho, p, f.display_name()); });
}

std::vector<Polynomial> build_relations(const Fixture& f, const ArenaPtr& arena) {
  std::vector<Polynomial> out;
  for (const auto& aux : f.aux) {
    out.push_back(at_line(f, aux.relation.line, [&] { return parse_expression(aux.relation.text, arena); }));
  }
  return out;
}

std::vector<HoloCurve> build_curves(const Fixture& f, std::size_t n) {
  std::vector<HoloCurve> out;
  for (const auto& c : f.curves) {
    HoloCurve gamma;
    gamma.components = at_line(f, c.line, [&] { return parse_expression_list(c.text, curve_arena()); });
    if (gamma.components.size() != n) {
      throw InputError(f.source, c.line, "curve needs " + std::to_string(n) + " components");
    }
    out.push_back(std::move(gamma));
  }
  return out;
}

std::optional<PolyMap> build_map(const Fixture& f, const HypersurfaceSpec& m) {
  if (!f.map) return std::nullopt;
  PolyMap h;
  h.components = at_line(f, f.map->line, [&] { return parse_expression_list(f.map->text, m.arena); });
  h.relations = build_relations(f, m.arena);
  return h;
}

HypersurfaceSpec build_target(const Fixture& f, const PolyMap& h) {
  if (!f.target) return sphere_target(h.target_dimension());
  const std::size_t n = f.target_n ? parse_dimension(f, *f.target_n) : h.target_dimension();
  const ArenaPtr a = VariableArena::make(n);
  const Polynomial rho = at_line(f, f.target->line, [&] { return parse_expression(f.target->text, a); });
  Point p(n, Coeff(0));
  if (f.target_point) p = at_line(f, f.target_point->line, [&] { return parse_point(f.target_point->text, n); });
  return at_line(f, f.target->line, [&] { return validate(rho, p, f.display_name() + " target"); });
}

std::optional<Polynomial> build_implicit(const Fixture& f, const ArenaPtr& arena) {
  if (!f.implicit) return std::nullopt;
  return at_line(f, f.implicit->line, [&] { return parse_expression(f.implicit->text, arena); });
}

}  // namespace crlab
