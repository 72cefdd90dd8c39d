#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "crlab/fixture.hpp"
#include "crlab/invariants.hpp"
#include "json.hpp"

namespace crlab {

inline constexpr const char* kToolVersion = "0.1.0";

struct RunOptions {
  InvariantOptions invariants;
  unsigned jet_degree = 3;
  unsigned order_cap = 12;
  unsigned m_bound = 4;
  std::size_t steps = 1000;
  std::optional<std::string> field;  // flow: comma separated components
  std::optional<std::string> h;      // flow: reparametrization function
  std::string t_end = "1";
  bool timings = false;  // wall times make reports nondeterministic, so opt-in
};

// Matches the CLI exit codes.
enum class RunStatus { ok = 0, internal = 1, input = 2, resource = 3 };

struct Report {
  std::string input;  // digest of the input bytes
  nlohmann::json entries = nlohmann::json::array();
  RunStatus status = RunStatus::ok;

  nlohmann::json to_json() const;
};

std::string fnv1a_hex(std::string_view bytes);

// Sorted keys, no whitespace, floats with 17 significant digits.
std::string emit_json(const nlohmann::json& doc);
std::string emit_text(const Report& report);

// Each runner throws InputError for malformed input; resource-limited stages
// are recorded in their entry and set status = resource.
Report run_analyze(const Fixture& f, const RunOptions& opt);
Report run_map_check(const Fixture& f, const RunOptions& opt);
Report run_contact(const Fixture& f, const RunOptions& opt);
Report run_artin(std::string_view expression, const RunOptions& opt);
Report run_flow(const Fixture& f, const RunOptions& opt);

// Fixtures with a map line go through map-check, the rest through analyze.
// Results are ordered as `paths` regardless of `jobs`.
Report run_corpus(const std::vector<std::string>& paths, const RunOptions& opt, unsigned jobs);

}  // namespace crlab
