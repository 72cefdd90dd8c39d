// Command-line front end. Uses only the C API in crlab.h.
#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "crlab.h"

namespace {

struct Flags {
  long spair_budget = 50000;
  long ell_max = 0;
  long codim_degree_max = 12;
  long bracket_max = 8;
  long witness_degree = 3;
  long jet_degree = 3;
  long order_cap = 12;
  long m_bound = 4;
  long steps = 1000;
  std::string field, h, t_end = "1";
  std::string format = "json";
  bool timings = false;
  unsigned jobs = 1;
};

int error_exit(int code, const std::string& what) {
  std::fprintf(stderr, "crlab: error: %s\n", what.c_str());
  return code;
}

// Owns the option handle and fills it from the parsed flags.
class Options {
 public:
  Options() : opt_(crlab_options_new()) {}
  ~Options() { crlab_options_free(opt_); }
  Options(const Options&) = delete;
  Options& operator=(const Options&) = delete;

  crlab_status load(const Flags& f) {
    const std::pair<const char*, long> ints[] = {
        {"spair_budget", f.spair_budget}, {"ell_max", f.ell_max},         {"codim_degree_max", f.codim_degree_max},
        {"bracket_max", f.bracket_max},   {"witness_degree", f.witness_degree}, {"jet_degree", f.jet_degree},
        {"order_cap", f.order_cap},       {"m_bound", f.m_bound},         {"steps", f.steps},
        {"timings", f.timings ? 1 : 0}};
    for (const auto& [key, value] : ints) {
      if (auto s = crlab_options_set_int(opt_, key, value); s != CRLAB_OK) return s;
    }
    if (!f.field.empty()) {
      if (auto s = crlab_options_set_string(opt_, "field", f.field.c_str()); s != CRLAB_OK) return s;
    }
    if (!f.h.empty()) {
      if (auto s = crlab_options_set_string(opt_, "h", f.h.c_str()); s != CRLAB_OK) return s;
    }
    return crlab_options_set_string(opt_, "t_end", f.t_end.c_str());
  }

  const crlab_options* get() const { return opt_; }

 private:
  crlab_options* opt_;
};

int emit(crlab_status s, crlab_report* report, const Flags& f) {
  if (report == nullptr) return error_exit(s == CRLAB_OK ? CRLAB_INTERNAL : s, crlab_last_error());
  const crlab_format fmt = f.format == "text" ? CRLAB_FORMAT_TEXT : CRLAB_FORMAT_JSON;
  std::fputs(crlab_report_render(report, fmt), stdout);
  const int code = crlab_report_status(report);
  crlab_report_free(report);
  return code;
}

std::vector<std::string> expand_corpus(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::error_code ec;
    if (std::filesystem::is_directory(a, ec)) {
      std::vector<std::string> found;
      for (const auto& e : std::filesystem::directory_iterator(a)) {
        if (e.path().extension() == ".crh") found.push_back(e.path().string());
      }
      std::sort(found.begin(), found.end());
      out.insert(out.end(), found.begin(), found.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of real algebraic hypersurfaces and CR maps"};
  app.set_version_flag("--version", crlab_version());
  app.require_subcommand(1);
  Flags f;
  app.add_option("--spair-budget", f.spair_budget, "S-pair budget for Groebner bases")->check(CLI::PositiveNumber);
  app.add_option("--ell-max", f.ell_max, "Essential finiteness ladder bound (0 = N-1)")->check(CLI::NonNegativeNumber);
  app.add_option("--codim-degree-max", f.codim_degree_max, "Degree bound for codimension certificates")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--bracket-max", f.bracket_max, "Bracket length bound for finite type")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--witness-degree", f.witness_degree, "Degree bound of the tangent field search")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--jet-degree", f.jet_degree, "Curve template degree for m_p")->check(CLI::NonNegativeNumber);
  app.add_option("--order-cap", f.order_cap, "Vanishing order cap for m_p")->check(CLI::PositiveNumber);
  app.add_option("--m-bound", f.m_bound, "Multi-index bound for the reflection system")->check(CLI::PositiveNumber);
  app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timings", f.timings, "Record wall times (output is then not reproducible)");

  std::string path, expression;
  std::vector<std::string> corpus_args;
  auto* analyze = app.add_subcommand("analyze", "Invariants of a hypersurface fixture");
  analyze->add_option("fixture", path, ".crh file")->required();
  auto* map_check = app.add_subcommand("map-check", "Check a map fixture");
  map_check->add_option("fixture", path, ".crh file")->required();
  auto* contact = app.add_subcommand("contact", "Contact orders of curves and a bound for m_p");
  contact->add_option("fixture", path, ".crh file")->required();
  auto* artin = app.add_subcommand("artin", "Arithmetic of an annihilating polynomial");
  artin->add_option("expression", expression, "Polynomial in Y (or X)")->required();
  auto* flow = app.add_subcommand("flow", "Integrate a holomorphic field from the base point");
  flow->set_help_flag("--help", "Print this help message and exit");  // frees -h style names for --h
  flow->add_option("fixture", path, ".crh file")->required();
  flow->add_option("--field", f.field, "Field components, comma separated (default: degeneracy witness)");
  flow->add_option("--h", f.h, "Reparametrization function h(Z)");
  flow->add_option("--t-end", f.t_end, "Final complex time, e.g. 0.5+1i");
  flow->add_option("--steps", f.steps, "RK4 steps")->check(CLI::PositiveNumber);
  auto* corpus = app.add_subcommand("corpus", "Analyze every fixture of a directory");
  corpus->add_option("paths", corpus_args, "Directories or .crh files")->required();
  corpus->add_option("--jobs", f.jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : CRLAB_INPUT_ERROR;
  }

  Options opt;
  if (opt.load(f) != CRLAB_OK) return error_exit(CRLAB_INPUT_ERROR, crlab_last_error());
  crlab_report* report = nullptr;
  crlab_status s = CRLAB_OK;
  if (*analyze) {
    s = crlab_analyze_file(path.c_str(), opt.get(), &report);
  } else if (*map_check) {
    s = crlab_map_check_file(path.c_str(), opt.get(), &report);
  } else if (*contact) {
    s = crlab_contact_file(path.c_str(), opt.get(), &report);
  } else if (*artin) {
    s = crlab_artin(expression.c_str(), opt.get(), &report);
  } else if (*flow) {
    s = crlab_flow_file(path.c_str(), opt.get(), &report);
  } else if (*corpus) {
    const auto files = expand_corpus(corpus_args);
    std::vector<const char*> ptrs;
    for (const auto& p : files) ptrs.push_back(p.c_str());
    s = crlab_corpus(ptrs.data(), ptrs.size(), f.jobs, opt.get(), &report);
  }
  return emit(s, report, f);
}
