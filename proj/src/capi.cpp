#include "crlab.h"

#include <new>
#include <string>

#include "crlab/parser.hpp"
#include "crlab/report.hpp"

using namespace crlab;

struct crlab_options {
  RunOptions run;
};

struct crlab_report {
  Report report;
  std::string json;
  std::string text;
};

struct crlab_hypersurface {
  HypersurfaceSpec spec;
};

namespace {

thread_local std::string last_error;

crlab_status fail(crlab_status s, const std::string& message) {
  last_error = message;
  return s;
}

// Runs f, mapping exceptions to status codes and recording the message.
template <class F>
crlab_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const InputError& e) {
    return fail(CRLAB_INPUT_ERROR, e.what());
  } catch (const ResourceLimitError& e) {
    return fail(CRLAB_RESOURCE_LIMIT, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::internal) return fail(CRLAB_INTERNAL, e.what());
    return fail(CRLAB_INPUT_ERROR, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CRLAB_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(CRLAB_INTERNAL, e.what());
  }
}

const RunOptions& options_of(const crlab_options* opt) {
  static const RunOptions defaults;
  return opt ? opt->run : defaults;
}

crlab_status deliver(Report r, crlab_report** out) {
  if (!out) return fail(CRLAB_INPUT_ERROR, "null output pointer");
  auto* h = new crlab_report{std::move(r), {}, {}};
  *out = h;
  return static_cast<crlab_status>(h->report.status);
}

template <class Run>
crlab_status run_file(const char* path, const crlab_options* opt, crlab_report** out, Run run) {
  return guarded([&] {
    if (!path) return fail(CRLAB_INPUT_ERROR, "null path");
    return deliver(run(load_fixture(path), options_of(opt)), out);
  });
}

}  // namespace

extern "C" {

const char* crlab_version(void) { return kToolVersion; }

const char* crlab_last_error(void) { return last_error.c_str(); }

crlab_options* crlab_options_new(void) { return new (std::nothrow) crlab_options(); }

void crlab_options_free(crlab_options* opt) { delete opt; }

crlab_status crlab_options_set_int(crlab_options* opt, const char* key, long value) {
  return guarded([&] {
    if (!opt || !key) return fail(CRLAB_INPUT_ERROR, "null argument");
    if (value < 0) return fail(CRLAB_INPUT_ERROR, std::string("negative value for ") + key);
    const std::string k(key);
    RunOptions& r = opt->run;
    const auto u = static_cast<unsigned>(value);
    if (k == "spair_budget") r.invariants.groebner.spair_budget = static_cast<std::size_t>(value);
    else if (k == "ell_max") r.invariants.ell_max = u;
    else if (k == "codim_degree_max") r.invariants.codim_degree_max = u;
    else if (k == "bracket_max") r.invariants.bracket_max = u;
    else if (k == "witness_degree") r.invariants.witness_degree = u;
    else if (k == "jet_degree") r.jet_degree = u;
    else if (k == "order_cap") r.order_cap = u;
    else if (k == "m_bound") r.m_bound = u;
    else if (k == "steps") r.steps = static_cast<std::size_t>(value);
    else if (k == "timings") r.timings = value != 0;
    else return fail(CRLAB_INPUT_ERROR, "unknown option '" + k + "'");
    return CRLAB_OK;
  });
}

crlab_status crlab_options_set_string(crlab_options* opt, const char* key, const char* value) {
  return guarded([&] {
    if (!opt || !key || !value) return fail(CRLAB_INPUT_ERROR, "null argument");
    const std::string k(key);
    if (k == "field") opt->run.field = value;
    else if (k == "h") opt->run.h = value;
    else if (k == "t_end") opt->run.t_end = value;
    else return fail(CRLAB_INPUT_ERROR, "unknown option '" + k + "'");
    return CRLAB_OK;
  });
}

crlab_status crlab_analyze_file(const char* path, const crlab_options* opt, crlab_report** out) {
  return run_file(path, opt, out, run_analyze);
}

crlab_status crlab_map_check_file(const char* path, const crlab_options* opt, crlab_report** out) {
  return run_file(path, opt, out, run_map_check);
}

crlab_status crlab_contact_file(const char* path, const crlab_options* opt, crlab_report** out) {
  return run_file(path, opt, out, run_contact);
}

crlab_status crlab_flow_file(const char* path, const crlab_options* opt, crlab_report** out) {
  return run_file(path, opt, out, run_flow);
}

crlab_status crlab_artin(const char* expression, const crlab_options* opt, crlab_report** out) {
  return guarded([&] {
    if (!expression) return fail(CRLAB_INPUT_ERROR, "null expression");
    return deliver(run_artin(expression, options_of(opt)), out);
  });
}

crlab_status crlab_corpus(const char* const* paths, size_t count, unsigned jobs, const crlab_options* opt,
                          crlab_report** out) {
  return guarded([&] {
    if (!paths && count) return fail(CRLAB_INPUT_ERROR, "null path list");
    std::vector<std::string> list(paths, paths + count);
    return deliver(run_corpus(list, options_of(opt), jobs), out);
  });
}

crlab_status crlab_report_status(const crlab_report* report) {
  return report ? static_cast<crlab_status>(report->report.status) : CRLAB_INPUT_ERROR;
}

const char* crlab_report_render(crlab_report* report, crlab_format format) {
  if (!report) return "";
  if (format == CRLAB_FORMAT_TEXT) {
    if (report->text.empty()) report->text = emit_text(report->report);
    return report->text.c_str();
  }
  if (report->json.empty()) report->json = emit_json(report->report.to_json());
  return report->json.c_str();
}

void crlab_report_free(crlab_report* report) { delete report; }

crlab_status crlab_hypersurface_new(size_t n, const char* rho, const char* point, crlab_hypersurface** out) {
  return guarded([&] {
    if (!rho || !out) return fail(CRLAB_INPUT_ERROR, "null argument");
    if (n < 1 || n > 16) return fail(CRLAB_INPUT_ERROR, "dimension must be in 1..16");
    const ArenaPtr a = VariableArena::make(n);
    Point p(n, Coeff(0));
    if (point) p = parse_point(point, n);
    *out = new crlab_hypersurface{validate(parse_expression(rho, a), p)};
    return CRLAB_OK;
  });
}

void crlab_hypersurface_free(crlab_hypersurface* m) { delete m; }

crlab_status crlab_hypersurface_levi_type(const crlab_hypersurface* m, unsigned* ell) {
  return guarded([&] {
    if (!m || !ell) return fail(CRLAB_INPUT_ERROR, "null argument");
    const auto lt = levi_type(m->spec);
    *ell = lt.ell.value_or(0);
    return CRLAB_OK;
  });
}

crlab_status crlab_hypersurface_contains(const crlab_hypersurface* m, const char* point, int* inside) {
  return guarded([&] {
    if (!m || !point || !inside) return fail(CRLAB_INPUT_ERROR, "null argument");
    *inside = point_membership(m->spec, parse_point(point, m->spec.n)) ? 1 : 0;
    return CRLAB_OK;
  });
}

}  // extern "C"
