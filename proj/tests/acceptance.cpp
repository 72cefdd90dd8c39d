// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "crlab/artin.hpp"
#include "crlab/contact.hpp"
#include "crlab/fixture.hpp"
#include "crlab/flow.hpp"
#include "crlab/invariants.hpp"
#include "crlab/map_checker.hpp"
#include "crlab/report.hpp"
#include "test_support.hpp"

using namespace crlab;

namespace {

// Pinned limits.
constexpr double kLeviLimitS = 60;
constexpr double kWitnessLimitS = 120;
constexpr double kArtinLimitS = 30;
constexpr double kReflectionLimitS = 60;
constexpr double kTangencyTol = 1e-8;
constexpr double kConvergenceLow = 12;
constexpr double kConvergenceHigh = 20;
constexpr double kReparamTol = 1e-6;
constexpr std::size_t kFlowSteps = 1000;
constexpr unsigned kWitnessDegree = 3;
constexpr int kArtinInstances = 100;
constexpr int kRootTransportInstances = 50;
constexpr int kMonomialIdeals = 50;
constexpr int kPrincipalInstances = 20;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<Outcome()>& run) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && s > limit_s) {
    o.pass = false;
    if (o.detail.empty()) o.detail = "over time limit";
  }
  if (!o.pass) ++failures;
  std::printf("%s [%d] %s (%.2f s%s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, s,
              limit_s > 0 ? (", limit " + std::to_string(static_cast<int>(limit_s)) + " s").c_str() : "",
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<std::string> corpus_paths() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(CRLAB_CORPUS_DIR)) {
    if (e.path().extension() == ".crh") out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fixture fixture(const std::string& file) { return load_fixture(std::string(CRLAB_CORPUS_DIR) + "/" + file); }

// Every valid hypersurface in the corpus, including map sources and targets.
std::vector<HypersurfaceSpec> corpus_hypersurfaces() {
  std::vector<HypersurfaceSpec> out;
  std::set<std::string> seen;
  auto add = [&](HypersurfaceSpec m) {
    if (seen.insert(std::to_string(m.n) + ":" + m.rho.to_string()).second) out.push_back(std::move(m));
  };
  for (const auto& path : corpus_paths()) {
    const Fixture f = load_fixture(path);
    if (f.expects_rejection()) continue;
    const HypersurfaceSpec m = build_hypersurface(f);
    add(m);
    if (auto h = build_map(f, m); h && f.target) add(build_target(f, *h));
  }
  return out;
}

}  // namespace

int main() {
  const auto hypersurfaces = corpus_hypersurfaces();

  criterion(1, "levi type 1 iff the levi determinant lies outside rad(rho), whole corpus", kLeviLimitS, [&] {
    Outcome o;
    o.require(hypersurfaces.size() >= 10, "corpus has fewer than 10 hypersurfaces");
    for (const auto& m : hypersurfaces) {
      const bool generic = !radical_membership(levi_determinant(m), m.ideal());
      o.require((levi_type(m).ell == 1u) == generic, m.name);
    }
    o.detail = o.pass ? std::to_string(hypersurfaces.size()) + " hypersurfaces" : o.detail;
    return o;
  });

  criterion(2, "bounded witness search agrees with the V_alpha rank verdict, whole corpus", kWitnessLimitS, [&] {
    Outcome o;
    int degenerate = 0;
    for (const auto& m : hypersurfaces) {
      const auto v = holomorphic_nondegeneracy(m);
      const auto w = degeneracy_witness(m, kWitnessDegree);
      if (w.field) o.require(is_tangent_holomorphic_field(m, *w.field), m.name + ": witness not tangent");
      o.require(w.field.has_value() == !v.nondegenerate, m.name);
      degenerate += v.nondegenerate ? 0 : 1;
    }
    if (o.pass) {
      o.detail = std::to_string(degenerate) + " degenerate with witnesses; nondegenerate entries have none up to degree " +
                 std::to_string(kWitnessDegree) + " (bounded search)";
    }
    return o;
  });

  criterion(3, "stated example facts", 0, [&] {
    Outcome o;
    const auto cubic = build_hypersurface(fixture("example_3_3_M.crh"));
    o.require(levi_type(cubic).ell == 1u, "cubic rigid surface: levi type");
    const auto linear = build_hypersurface(fixture("example_2_10_Mprime.crh"));
    const auto bg = bloom_graham_type_at(linear, linear.base_point, 8);
    o.require(!bg.type && bg.bound == 8, "linear rigid surface: finite type should exceed 8");
    o.require(!essential_finiteness_at(linear, linear.base_point).finite, "linear rigid surface: ess finite");
    const auto sphere = build_hypersurface(fixture("sphere2.crh"));
    o.require(levi_type(sphere).ell == 1u, "sphere: levi type");
    const auto ef = essential_finiteness_at(sphere, sphere.base_point);
    o.require(ef.finite && ef.codimension == 1, "sphere: ess finite codim 1");
    o.require(bloom_graham_type_at(sphere, sphere.base_point, 8).type == 2u, "sphere: finite type 2");
    const auto mp = estimate_mp(sphere, sphere.base_point, 3, 12);
    o.require(!mp.infinite && mp.lower_bound == 2, "sphere: m_p lower bound 2");
    return o;
  });

  criterion(4, "monicize root transport and discriminant scaling, random square-free instances", kArtinLimitS, [&] {
    Outcome o;
    std::mt19937 rng(2024);
    const ArenaPtr a = VariableArena::make(2);
    const std::size_t x = a->index_of("x"), y = a->index_of("Y");
    auto coefficient = [&](unsigned max_degree) {
      std::uniform_int_distribution<int> c(-3, 3);
      Polynomial out(a);
      const unsigned d = rng() % (max_degree + 1);
      for (unsigned k = 0; k <= d; ++k) {
        Exponents e(a->size(), 0);
        e[x] = k;
        out += Polynomial::monomial(a, e, Coeff(c(rng)));
      }
      return out;
    };
    int checked = 0;
    while (checked < kArtinInstances) {
      const int j = 1 + static_cast<int>(rng() % 4);
      std::vector<Polynomial> coeffs;
      for (int k = 0; k <= j; ++k) coeffs.push_back(coefficient(3));
      if (coeffs.back().is_zero()) continue;
      const auto p = make_annihilating(Polynomial::from_coefficients(coeffs, y), y);
      const Polynomial d = standard_discriminant(p);
      if (d.is_zero()) continue;
      // Oracle: a cofactor expansion of the Sylvester matrix, independent of Bareiss.
      const unsigned jj = static_cast<unsigned>(j);
      Polynomial oracle = j == 1 ? Polynomial::constant(a, Coeff(1))
                                 : testsupport::sylvester_oracle(p.p, p.p.derivative(y), y);
      if (j > 1) {
        oracle = *oracle.divide_exact(p.leading);
        if ((jj * (jj - 1) / 2) % 2 == 1) oracle = -oracle;
      }
      o.require(oracle == d, "discriminant differs from the oracle");
      o.require(scaling_discriminant_check(p).holds, "scaling identity failed for " + p.p.to_string());
      ++checked;
    }
    for (int trial = 0; trial < kRootTransportInstances; ++trial) {
      Polynomial u = coefficient(2);
      while (u.is_zero()) u = coefficient(2);
      const Polynomial v = coefficient(2);
      std::vector<Polynomial> rest;
      const int extra = static_cast<int>(rng() % 3);
      for (int k = 0; k <= extra; ++k) rest.push_back(coefficient(3));
      while (rest.back().is_zero()) rest.back() = coefficient(3);
      const Polynomial r = Polynomial::from_coefficients(rest, y);
      const auto p = make_annihilating((u * Polynomial::variable(a, y) - v) * r, y);
      const Polynomial scaled_root = rest.back() * v;  // a_J * (v / u)
      o.require(monicize(p).substitute(y, scaled_root).is_zero(), "root transport failed");
    }
    if (o.pass) o.detail = std::to_string(checked) + " + " + std::to_string(kRootTransportInstances) + " instances";
    return o;
  });

  criterion(5, "reflection identities on three sphere maps, NoIndexFound on the zero map", kReflectionLimitS, [&] {
    Outcome o;
    std::mt19937 rng(7);
    std::size_t samples = 0;
    for (const char* file : {"reflection_linear.crh", "reflection_scaled.crh", "reflection_quadratic.crh"}) {
      const Fixture f = fixture(file);
      const auto m = build_hypersurface(f);
      const auto h = *build_map(f, m);
      const auto sys = reflection_system(m, h, m.base_point);
      o.require(sys.f_identity && sys.sphere_identity && sys.rearranged_identity, std::string(file) + ": identity");
      // Sampling oracle: the residuals vanish at rational points of M.
      const auto& hv = sys.rotated.components;
      const std::size_t n = m.n - 1;
      const auto sphere = sphere_target(m.n + 1);
      const auto points = testsupport::on_surface_points(m, 10, rng);
      o.require(points.size() == 10, std::string(file) + ": no sample points");
      samples += points.size();
      for (const auto& p : points) {
        const auto at = complexified_point(m.arena, p);
        for (std::size_t l = 0; l < n; ++l) {
          const Polynomial r = sys.delta * hv[l] + sys.xi_numerator[l] + hv[n] * sys.eta_numerator[l];
          o.require(r.evaluate(at).is_zero(), std::string(file) + ": F residual at a sample");
        }
        o.require(pullback(sphere, sys.rotated).evaluate(at).is_zero(), std::string(file) + ": sphere residual");
      }
    }
    const Fixture z = fixture("reflection_zero.crh");
    const auto mz = build_hypersurface(z);
    try {
      reflection_system(mz, *build_map(z, mz), mz.base_point);
      o.require(false, "zero map: no error");
    } catch (const ValidationError& e) {
      o.require(e.kind() == "NoIndexFound", "zero map: " + e.kind());
    }
    if (o.pass) o.detail = std::to_string(samples) + " on-surface samples";
    return o;
  });

  criterion(6, "flow: witness tangency, rk4 convergence factor, reparametrization defect", 0, [&] {
    Outcome o;
    std::mt19937 rng(17);
    double worst = 0;
    int fields = 0;
    for (const auto& m : hypersurfaces) {
      const auto w = degeneracy_witness(m, kWitnessDegree);
      if (!w.field) continue;
      ++fields;
      const auto points = testsupport::on_surface_points(m, 10, rng);
      o.require(points.size() == 10, m.name + ": no sample points");
      for (const auto& p : points) {
        ComplexPoint z0;
        for (const auto& c : p) z0.push_back(c.to_complex());
        for (Complex t : {Complex(1), Complex(0, 1), Complex(-0.6, 0.8)}) {
          worst = std::max(worst, rho_residual(m, integrate_flow(*w.field, z0, t, kFlowSteps)));
        }
      }
    }
    o.require(fields > 0, "no witness fields");
    o.require(worst <= kTangencyTol, "tangency residual " + std::to_string(worst));

    const auto a1 = VariableArena::make(1);
    const double factor = convergence_factor(HoloField{{parse_expression("z1^2", a1)}}, {Complex(1)}, Complex(0.5), 10);
    o.require(factor >= kConvergenceLow && factor <= kConvergenceHigh, "convergence factor " + std::to_string(factor));

    const auto tube = build_hypersurface(fixture("tube_c3.crh"));
    const HoloField e2{parse_expression_list("0, 1, 0", tube.arena)};
    const auto run = integrate_reparam(parse_expression("z3", tube.arena), e2, tube,
                                       {Complex(1), Complex(1), Complex(0, 1)}, Complex(1), kFlowSteps);
    const double defect = *run.residuals.reparam_defect_max;
    o.require(defect <= kReparamTol, "reparametrization defect " + std::to_string(defect));
    if (o.pass) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%d fields, max |rho| %.2e, factor %.2f, defect %.2e", fields, worst, factor,
                    defect);
      o.detail = buf;
    }
    return o;
  });

  criterion(7, "codimension vs staircase on monomial ideals, radical membership vs point sampling", 0, [&] {
    Outcome o;
    std::mt19937 rng(13);
    const auto a3 = VariableArena::make(3);
    for (int trial = 0; trial < kMonomialIdeals; ++trial) {
      const std::size_t k = 1 + trial % 3;
      std::vector<std::size_t> slots;
      for (std::size_t v = 0; v < k; ++v) slots.push_back(v);
      std::vector<std::vector<unsigned>> gens;
      std::vector<Polynomial> polys;
      const unsigned count = 1 + rng() % 4;
      for (unsigned g = 0; g < count + (trial % 2 == 0 ? k : 0); ++g) {
        std::vector<unsigned> e(k, 0);
        if (g >= count) {
          e[g - count] = 1 + rng() % 5;
        } else {
          unsigned deg = 1 + rng() % 5;
          while (deg-- > 0) e[rng() % k] += 1;
        }
        Exponents full(a3->size(), 0);
        for (std::size_t v = 0; v < k; ++v) full[v] = e[v];
        gens.push_back(e);
        polys.push_back(Polynomial::monomial(a3, full, Coeff(1)));
      }
      const long expected = testsupport::staircase_count(gens, k);
      const auto r = finite_codimension_at_origin(polys, 16, slots);
      if (expected < 0) {
        o.require(r.status == CodimResult::Status::not_detected, "infinite codimension certified");
      } else {
        o.require(r.status == CodimResult::Status::finite_certified &&
                      static_cast<long>(r.codimension) == expected,
                  "codimension mismatch");
      }
    }
    const auto a2 = VariableArena::make(2);
    for (int trial = 0; trial < kPrincipalInstances; ++trial) {
      const auto inst = testsupport::random_linear_principal(a2, rng);
      const auto f = testsupport::membership_candidate(inst, trial % 2 == 0, rng);
      const bool sampled = testsupport::vanishes_on_samples(f, inst, rng);
      o.require(radical_membership(f, principal_ideal(inst.rho, true)) == sampled, "radical membership mismatch");
    }
    return o;
  });

  criterion(8, "byte-identical corpus JSON across runs and job counts", 0, [&] {
    Outcome o;
    const auto paths = corpus_paths();
    const RunOptions opt;
    const std::string first = emit_json(run_corpus(paths, opt, 1).to_json());
    o.require(emit_json(run_corpus(paths, opt, 1).to_json()) == first, "repeat run differs");
    for (unsigned jobs : {2u, 4u, 8u}) {
      o.require(emit_json(run_corpus(paths, opt, jobs).to_json()) == first, "jobs " + std::to_string(jobs));
    }
    if (o.pass) o.detail = std::to_string(paths.size()) + " fixtures, " + std::to_string(first.size()) + " bytes";
    return o;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures == 0 ? 0 : 1;
}
