#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crlab/contact.hpp"
#include "crlab/errors.hpp"
#include "crlab/hypersurface.hpp"
#include "crlab/map_checker.hpp"

namespace crlab {

// Malformed fixture or input text. `line` is 1-based, 0 when not tied to a line.
class InputError : public Error {
 public:
  InputError(const std::string& source, std::size_t line, const std::string& message)
      : Error(ErrorCode::invalid_argument,
              source + (line ? ":" + std::to_string(line) : std::string()) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct FixtureValue {
  std::string text;
  std::size_t line = 0;
};

struct AuxDeclaration {
  std::string name;
  FixtureValue relation;
};

// Raw .crh content. Lines are `key = value` or `aux NAME: relation`; `#`
// starts a comment. Keys: name, N, rho, point, curve (repeatable), map,
// target, target_N, target_point, implicit, expect, note (repeatable).
struct Fixture {
  std::string source;  // file path or "<text>"
  std::string contents;
  std::optional<FixtureValue> name, n, rho, point, map, target, target_n, target_point, implicit,
      expect;
  std::vector<FixtureValue> curves;
  std::vector<FixtureValue> notes;
  std::vector<AuxDeclaration> aux;

  std::string display_name() const;
  bool expects_rejection() const;
};

Fixture parse_fixture(std::string_view text, std::string source = "<text>");
// Throws InputError when the file cannot be read.
Fixture load_fixture(const std::string& path);

// Fixture arena: make(N) plus a paired slot for every aux name not already present.
ArenaPtr fixture_arena(const Fixture& f);

// Errors from parsing or validation are rethrown as InputError citing the
// offending line; ValidationError kinds are kept in the message.
HypersurfaceSpec build_hypersurface(const Fixture& f);
std::vector<Polynomial> build_relations(const Fixture& f, const ArenaPtr& arena);
std::vector<HoloCurve> build_curves(const Fixture& f, std::size_t n);
std::optional<PolyMap> build_map(const Fixture& f, const HypersurfaceSpec& m);
// The `target` hypersurface, or the sphere sized to the map when absent.
HypersurfaceSpec build_target(const Fixture& f, const PolyMap& h);
std::optional<Polynomial> build_implicit(const Fixture& f, const ArenaPtr& arena);

// "re,im,re,im,..." with exact rationals.
Point parse_point(std::string_view text, std::size_t n);

}  // namespace crlab
