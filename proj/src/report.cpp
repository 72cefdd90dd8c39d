#include "crlab/report.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <regex>
#include <thread>

#include "crlab/artin.hpp"
#include "crlab/contact.hpp"
#include "crlab/flow.hpp"
#include "crlab/map_checker.hpp"
#include "crlab/parser.hpp"
#include "crlab/resultant.hpp"

namespace crlab {

using nlohmann::json;

namespace {

std::string str(const Polynomial& p) { return p.to_string(); }

json strs(const std::vector<Polynomial>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(str(p));
  return out;
}

json point_json(const Point& p) {
  json out = json::array();
  for (const auto& c : p) out.push_back(c.to_string());
  return out;
}

std::string multi_index(const MultiIndex& a) {
  std::string s = "(";
  for (std::size_t k = 0; k < a.size(); ++k) s += (k ? "," : "") + std::to_string(a[k]);
  return s + ")";
}

json float_value(double x) {
  if (std::isfinite(x)) return x;
  return x > 0 ? "inf" : (x < 0 ? "-inf" : "nan");
}

json complex_json(Complex z) { return json::array({float_value(z.real()), float_value(z.imag())}); }

// Runs one pipeline stage; resource exhaustion becomes an "unknown" verdict.
template <class F>
void stage(Report& r, const RunOptions& opt, const std::string& name, json bounds, F&& body) {
  json e;
  e["name"] = name;
  e["bounds"] = std::move(bounds);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(e);
  } catch (const ResourceLimitError& err) {
    e["verdict"] = "unknown";
    e["reason"] = err.what();
    r.status = RunStatus::resource;
  }
  if (opt.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    e["wall_time_ms"] = ms;
  }
  r.entries.push_back(std::move(e));
}

json groebner_bounds(const RunOptions& opt) { return {{"spair_budget", opt.invariants.groebner.spair_budget}}; }

void dump(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        dump(j[k], out);
      }
      out += ']';
      break;
    }
    case json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    default:
      out += j.dump();
  }
}

std::string text_value(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  std::string s;
  dump(j, s);
  return s;
}

Report start_report(std::string_view input) {
  Report r;
  r.input = fnv1a_hex(input);
  return r;
}

void add_validation(Report& r, const RunOptions& opt, const HypersurfaceSpec& m) {
  stage(r, opt, "validate", json::object(), [&](json& e) {
    e["verdict"] = "valid";
    e["N"] = m.n;
    e["degree"] = m.degree;
    e["rho"] = str(m.rho);
    e["base_point"] = point_json(m.base_point);
    const auto rf = recognize_rigid_form(m);
    if (const auto* form = std::get_if<RigidNormalForm>(&rf)) {
      e["rigid_phi"] = str(form->phi);
      e["rigid_rotated"] = form->rotated;
    } else {
      e["rigid_phi"] = nullptr;
    }
  });
}

}  // namespace

json Report::to_json() const {
  json j;
  j["entries"] = entries;
  j["input"] = input;
  j["version"] = kToolVersion;
  return j;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string emit_json(const json& doc) {
  std::string out;
  dump(doc, out);
  out += '\n';
  return out;
}

std::string emit_text(const Report& report) {
  std::string out = std::string("crlab ") + kToolVersion + "  input " + report.input + "\n";
  for (const auto& e : report.entries) {
    out += "  " + e.value("name", std::string("?"));
    if (e.contains("fixture")) out += " " + e["fixture"].get<std::string>();
    out += ": " + (e.contains("verdict") ? text_value(e["verdict"]) : std::string("-"));
    if (e.contains("bounds") && !e["bounds"].empty()) {
      out += "  [";
      bool first = true;
      for (auto it = e["bounds"].begin(); it != e["bounds"].end(); ++it) {
        out += (first ? "" : ", ") + it.key() + "=" + text_value(it.value());
        first = false;
      }
      out += "]";
    }
    out += "\n";
    if (e.contains("report")) {
      for (const auto& sub : e["report"]["entries"]) {
        out += "      " + sub.value("name", std::string("?")) + ": " +
               (sub.contains("verdict") ? text_value(sub["verdict"]) : std::string("-")) + "\n";
      }
    }
  }
  return out;
}

Report run_analyze(const Fixture& f, const RunOptions& opt) {
  Report r = start_report(f.contents);
  const HypersurfaceSpec m = build_hypersurface(f);
  const InvariantOptions& io = opt.invariants;
  const unsigned alpha_max = m.n > 1 ? static_cast<unsigned>(m.n - 1) : 1u;
  add_validation(r, opt, m);

  if (const auto implicit = build_implicit(f, m.arena)) {
    // rho should be the eliminant of the implicit equation and the first relation.
    stage(r, opt, "eliminant", json::object(), [&](json& e) {
      if (f.aux.empty()) throw InputError(f.source, f.implicit->line, "implicit needs an aux relation");
      const std::size_t slot = m.arena->index_of(f.aux.front().name);
      const Polynomial rel = build_relations(f, m.arena).front();
      const Polynomial res = resultant(*implicit, rel, slot);
      e["resultant"] = str(res);
      e["verdict"] = (res == m.rho || res == -m.rho) ? "matches rho" : "differs from rho";
    });
  }

  stage(r, opt, "levi_type", {{"alpha_max", alpha_max}, {"spair_budget", io.groebner.spair_budget}},
        [&](json& e) {
          const auto lt = levi_type(m, io);
          if (lt.ell) {
            e["verdict"] = *lt.ell;
            json rows = json::array();
            for (const auto& a : lt.certificate->rows) rows.push_back(multi_index(a));
            e["certificate"] = {{"k", lt.certificate->k}, {"rows", rows}, {"minor", str(lt.certificate->minor)}};
          } else {
            e["verdict"] = "not attained";
          }
        });

  stage(r, opt, "holomorphic_nondegeneracy",
        {{"alpha_max", alpha_max}, {"witness_degree", io.witness_degree}, {"spair_budget", io.groebner.spair_budget}},
        [&](json& e) {
          const auto v = holomorphic_nondegeneracy(m, io);
          e["verdict"] = v.nondegenerate ? "nondegenerate" : "degenerate";
          if (v.certificate) e["certificate"] = str(v.certificate->minor);
          if (v.witness) {
            if (v.witness->field) {
              e["witness"] = {{"field", strs(v.witness->field->a)},
                              {"multiplier", str(*v.witness->multiplier)},
                              {"degree", v.witness->degree_bound}};
            } else {
              e["witness"] = "not found within degree " + std::to_string(v.witness->degree_bound);
            }
          }
        });

  stage(r, opt, "pointwise_order", {{"alpha_max", alpha_max}}, [&](json& e) {
    const auto k = pointwise_nondegeneracy_order(m, m.base_point);
    e["point"] = point_json(m.base_point);
    if (k.k) e["verdict"] = *k.k;
    else e["verdict"] = "exceeds bound " + std::to_string(k.bound);
  });

  stage(r, opt, "ess_finite",
        {{"ell_max", io.effective_ell_max(m.n)}, {"d_max", io.codim_degree_max}}, [&](json& e) {
          const auto ef = essential_finiteness_at(m, m.base_point, io);
          e["point"] = point_json(m.base_point);
          e["generators"] = strs(ef.generators);
          if (ef.finite) {
            e["verdict"] = "finite";
            e["ell"] = ef.ell;
            e["codimension"] = ef.codimension;
            e["certifying_degree"] = ef.certifying_degree;
          } else {
            e["verdict"] = "not detected";
          }
        });

  stage(r, opt, "finite_type", {{"length_bound", io.bracket_max}}, [&](json& e) {
    const auto t = bloom_graham_type_at(m, m.base_point, io.bracket_max);
    e["point"] = point_json(m.base_point);
    e["fields_kept"] = t.fields_kept;
    if (t.type) e["verdict"] = *t.type;
    else e["verdict"] = "exceeds bound " + std::to_string(t.bound);
  });
  return r;
}

Report run_map_check(const Fixture& f, const RunOptions& opt) {
  Report r = start_report(f.contents);
  const HypersurfaceSpec m = build_hypersurface(f);
  const auto h = build_map(f, m);
  if (!h) throw InputError(f.source, 0, "map-check needs a 'map' line");
  const HypersurfaceSpec target = build_target(f, *h);
  add_validation(r, opt, m);

  stage(r, opt, "maps_into", groebner_bounds(opt), [&](json& e) {
    e["map"] = strs(h->components);
    e["relations"] = strs(h->relations);
    e["target"] = str(target.rho);
    e["pullback"] = str(pullback(target, *h));
    e["verdict"] = maps_into(m, target, *h, opt.invariants.groebner);
  });

  if (h->target_dimension() == m.n && h->relations.empty()) {
    stage(r, opt, "jacobian", groebner_bounds(opt), [&](json& e) {
      const auto j = jacobian_determinant(m, *h);
      e["determinant"] = str(j.determinant);
      e["verdict"] = j.nonvanishing_on_m ? "nonvanishing on M" : "vanishes on M";
    });
  }

  if (!f.target) {
    json bounds = groebner_bounds(opt);
    bounds["m_bound"] = opt.m_bound;
    stage(r, opt, "reflection_system", bounds, [&](json& e) {
      try {
        const auto sys = reflection_system(m, *h, m.base_point, opt.m_bound);
        json betas = json::array();
        for (const auto& b : sys.betas) betas.push_back(multi_index(b));
        json rot = json::array();
        for (const auto& row : sys.rotation) {
          json jr = json::array();
          for (const auto& c : row) jr.push_back(c.to_string());
          rot.push_back(jr);
        }
        json v = json::array();
        for (const auto& row : sys.v) v.push_back(strs(row));
        e["betas"] = betas;
        e["rotation"] = rot;
        e["v"] = v;
        e["delta"] = str(sys.delta);
        e["xi_numerator"] = strs(sys.xi_numerator);
        e["eta_numerator"] = strs(sys.eta_numerator);
        e["f_identity"] = sys.f_identity;
        e["sphere_identity"] = sys.sphere_identity;
        e["rearranged_identity"] = sys.rearranged_identity;
        const bool all = sys.f_identity && sys.sphere_identity && sys.rearranged_identity;
        e["verdict"] = all ? "identities hold" : "identity failed";
      } catch (const ValidationError& err) {
        e["verdict"] = err.kind();
        e["reason"] = err.what();
      }
    });
  }
  return r;
}

Report run_contact(const Fixture& f, const RunOptions& opt) {
  Report r = start_report(f.contents);
  const HypersurfaceSpec m = build_hypersurface(f);
  const auto curves = build_curves(f, m.n);
  add_validation(r, opt, m);
  for (std::size_t k = 0; k < curves.size(); ++k) {
    stage(r, opt, "contact_ratio", json::object(), [&](json& e) {
      e["curve"] = strs(curves[k].components);
      const auto c = [&] {
        try {
          return contact_ratio(m, curves[k]);
        } catch (const ValidationError& err) {
          throw InputError(f.source, f.curves[k].line, err.what());
        }
      }();
      if (c.inside) {
        e["verdict"] = "inside M";
      } else {
        e["verdict"] = c.ratio.get_str();
        e["ord_rho"] = c.ord_rho;
        e["ord_gamma"] = c.ord_gamma;
      }
    });
  }
  stage(r, opt, "m_p", {{"jet_degree", opt.jet_degree}, {"order_cap", opt.order_cap}}, [&](json& e) {
    const auto est = estimate_mp(m, m.base_point, opt.jet_degree, opt.order_cap);
    e["point"] = point_json(m.base_point);
    e["templates_tried"] = est.templates_tried;
    if (est.witness) e["witness"] = strs(est.witness->components);
    if (est.infinite) {
      e["verdict"] = "infinite contact";
    } else {
      e["verdict"] = "lower bound " + std::to_string(est.lower_bound);
      e["lower_bound"] = est.lower_bound;
      e["best_ratio"] = est.best_ratio.get_str();
    }
  });
  return r;
}

Report run_artin(std::string_view expression, const RunOptions& opt) {
  Report r = start_report(expression);
  // Enough holomorphic coordinates for every z<k> mentioned.
  std::size_t n = 1;
  static const std::regex zk("z([0-9]+)");
  const std::string text(expression);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), zk); it != std::sregex_iterator(); ++it) {
    n = std::max<std::size_t>(n, std::stoul((*it)[1].str()));
  }
  if (n > 16) throw InputError("<expression>", 0, "too many coordinates");
  const ArenaPtr a = VariableArena::make(n);
  const auto p = [&] {
    try {
      return make_annihilating(parse_expression(text, a));
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::internal) throw;
      throw InputError("<expression>", 0, e.what());
    }
  }();

  stage(r, opt, "annihilating_polynomial", json::object(), [&](json& e) {
    e["verdict"] = str(p.p);
    e["variable"] = a->name(p.variable);
    e["J"] = p.degree;
    e["leading"] = str(p.leading);
    e["constant"] = str(p.constant);
    e["total_degree"] = total_degree(p);
  });
  stage(r, opt, "monicize", json::object(), [&](json& e) { e["verdict"] = str(monicize(p)); });
  try {
    const auto check = scaling_discriminant_check(p);
    stage(r, opt, "scaling_discriminant_check", json::object(), [&](json& e) {
      e["verdict"] = check.holds;
      e["discriminant"] = str(check.discriminant);
      e["monic_discriminant"] = str(check.monic_discriminant);
      e["form"] = "disc(q) * a_J^(2J-2) = a_J^(J(J-1)) * disc(p)";
    });
    const auto g = gap_bound_r(p);
    stage(r, opt, "gap_bound_r", json::object(), [&](json& e) {
      e["verdict"] = g.r;
      e["d1"] = g.d1;
      e["d2"] = g.d2;
      e["J"] = g.j;
      e["interpretation"] = g.rounded ? "ceiling of a half-integer" : "exact";
    });
  } catch (const ValidationError& err) {
    throw InputError("<expression>", 0, err.what());
  }
  return r;
}

Report run_flow(const Fixture& f, const RunOptions& opt) {
  std::string input = f.contents + "\nfield=" + opt.field.value_or("") + "\nh=" + opt.h.value_or("") +
                      "\nt_end=" + opt.t_end + "\nsteps=" + std::to_string(opt.steps);
  Report r = start_report(input);
  const HypersurfaceSpec m = build_hypersurface(f);
  const Complex t_end = [&] {
    try {
      return parse_complex_literal(opt.t_end);
    } catch (const Error& e) {
      throw InputError("--t-end", 0, e.what());
    }
  }();
  if (opt.steps == 0) throw InputError("--steps", 0, "steps must be at least 1");
  add_validation(r, opt, m);

  HoloField field;
  std::string origin = "--field";
  if (opt.field) {
    try {
      field.a = parse_expression_list(*opt.field, m.arena);
      NumericField check(field);
      if (check.dimension() != m.n) throw InputError("--field", 0, "field needs N components");
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError("--field", 0, e.what());
    }
  } else {
    const auto w = degeneracy_witness(m, opt.invariants.witness_degree);
    if (!w.field) {
      throw InputError(f.source, 0, "no --field given and no tangent holomorphic field of degree <= " +
                                        std::to_string(opt.invariants.witness_degree));
    }
    field = *w.field;
    origin = "degeneracy witness";
  }
  ComplexPoint z0;
  for (const auto& c : m.base_point) z0.push_back(c.to_complex());
  const json bounds = {{"steps", opt.steps}, {"t_end", opt.t_end}};

  stage(r, opt, "flow", bounds, [&](json& e) {
    const auto traj = integrate_flow(field, z0, t_end, opt.steps);
    e["field"] = strs(field.a);
    e["field_source"] = origin;
    e["integrator"] = traj.integrator;
    e["overflow"] = traj.overflow;
    json fin = json::array();
    for (const auto& z : traj.samples.back().z) fin.push_back(complex_json(z));
    e["final"] = fin;
    e["rho_max"] = float_value(rho_residual(m, traj));
    e["ode_defect_max"] = float_value(ode_defect(field, traj));
    e["verdict"] = traj.overflow ? "overflow" : "completed";
  });

  if (opt.h) {
    Polynomial h;
    try {
      h = parse_expression(*opt.h, m.arena);
      NumericPolynomial check(h);
      for (std::size_t v = m.n; v < m.arena->size(); ++v) {
        if (h.depends_on(v)) throw InputError("--h", 0, "h must be a holomorphic polynomial");
      }
    } catch (const InputError&) {
      throw;
    } catch (const Error& e) {
      throw InputError("--h", 0, e.what());
    }
    stage(r, opt, "reparam", bounds, [&](json& e) {
      const auto run = integrate_reparam(h, field, m, z0, t_end, opt.steps);
      e["h"] = str(h);
      e["final_k"] = complex_json(run.k.back());
      json fin = json::array();
      for (const auto& z : run.psi.samples.back().z) fin.push_back(complex_json(z));
      e["final_psi"] = fin;
      e["rho_max"] = float_value(run.residuals.rho_max);
      e["k_defect_max"] = float_value(run.residuals.ode_defect_max);
      e["reparam_defect_max"] = float_value(*run.residuals.reparam_defect_max);
      e["verdict"] = run.psi.overflow ? "overflow" : "completed";
    });
  }
  return r;
}

Report run_corpus(const std::vector<std::string>& paths, const RunOptions& opt, unsigned jobs) {
  struct Item {
    json entry;
    RunStatus status = RunStatus::ok;
  };
  std::vector<Item> items(paths.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < paths.size(); k = next++) {
      json e;
      e["name"] = "fixture";
      Item& it = items[k];
      std::optional<Fixture> fx;
      try {
        fx = load_fixture(paths[k]);
        e["fixture"] = fx->display_name();
        const bool map = fx->map.has_value();
        e["command"] = map ? "map-check" : "analyze";
        const Report sub = map ? run_map_check(*fx, opt) : run_analyze(*fx, opt);
        e["report"] = sub.to_json();
        it.status = sub.status;
        if (fx->expects_rejection()) {
          e["verdict"] = "accepted, expected rejection";
          it.status = RunStatus::input;
        } else {
          e["verdict"] = sub.status == RunStatus::ok ? "completed" : "resource limit";
        }
      } catch (const InputError& err) {
        if (!e.contains("fixture")) e["fixture"] = paths[k];
        e["error"] = err.what();
        const bool expected = fx && fx->expects_rejection();
        e["verdict"] = expected ? "rejected as expected" : "input error";
        it.status = expected ? RunStatus::ok : RunStatus::input;
      } catch (const ResourceLimitError& err) {
        e["error"] = err.what();
        e["verdict"] = "resource limit";
        it.status = RunStatus::resource;
      } catch (const std::exception& err) {
        e["error"] = err.what();
        e["verdict"] = "internal error";
        it.status = RunStatus::internal;
      }
      it.entry = std::move(e);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string digests;
  Report r;
  for (std::size_t k = 0; k < items.size(); ++k) {
    const auto& e = items[k].entry;
    digests += e.contains("report") ? e["report"]["input"].get<std::string>() : paths[k];
    r.entries.push_back(e);
    // Worst status wins: internal over input over resource.
    auto rank = [](RunStatus s) {
      switch (s) {
        case RunStatus::ok: return 0;
        case RunStatus::resource: return 1;
        case RunStatus::input: return 2;
        case RunStatus::internal: return 3;
      }
      return 3;
    };
    if (rank(items[k].status) > rank(r.status)) r.status = items[k].status;
  }
  r.input = fnv1a_hex(digests);
  return r;
}

}  // namespace crlab
