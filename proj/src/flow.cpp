#include "crlab/flow.hpp"

#include <cmath>
#include <limits>

#include "crlab/errors.hpp"

namespace crlab {

namespace {

bool finite(const ComplexPoint& z) {
  for (const auto& c : z) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
  }
  return true;
}

double norm(const ComplexPoint& z) {
  double s = 0;
  for (const auto& c : z) s += std::norm(c);
  return std::sqrt(s);
}

ComplexPoint axpy(const ComplexPoint& z, Complex h, const ComplexPoint& k) {
  ComplexPoint out(z);
  for (std::size_t j = 0; j < z.size(); ++j) out[j] += h * k[j];
  return out;
}

template <class F>
ComplexPoint rk4_step(const F& f, const ComplexPoint& z, Complex h) {
  const auto k1 = f(z);
  const auto k2 = f(axpy(z, h / 2.0, k1));
  const auto k3 = f(axpy(z, h / 2.0, k2));
  const auto k4 = f(axpy(z, h, k3));
  ComplexPoint out(z);
  for (std::size_t j = 0; j < z.size(); ++j) out[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
  return out;
}

template <class F>
FlowTrajectory rk4(const F& f, const ComplexPoint& z0, Complex t_end, std::size_t steps) {
  if (steps == 0) throw ValidationError("BadSteps", "steps must be at least 1");
  FlowTrajectory traj;
  traj.step = t_end / static_cast<double>(steps);
  traj.samples.push_back({Complex(0), z0});
  ComplexPoint z = z0;
  for (std::size_t s = 1; s <= steps; ++s) {
    z = rk4_step(f, z, traj.step);
    if (!finite(z)) {
      traj.overflow = true;
      break;
    }
    traj.samples.push_back({traj.step * static_cast<double>(s), z});
  }
  return traj;
}

// d/dt at interior sample i from the five-point stencil.
ComplexPoint stencil_derivative(const FlowTrajectory& traj, std::size_t i) {
  const auto& s = traj.samples;
  ComplexPoint d(s[i].z.size());
  for (std::size_t j = 0; j < d.size(); ++j) {
    d[j] = (s[i - 2].z[j] - 8.0 * s[i - 1].z[j] + 8.0 * s[i + 1].z[j] - s[i + 2].z[j]) / (12.0 * traj.step);
  }
  return d;
}

}  // namespace

NumericPolynomial::NumericPolynomial(const Polynomial& p) {
  const ArenaPtr& a = p.arena();
  for (const auto& t : p.terms()) {
    Term nt;
    nt.coeff = t.coeff.to_complex();
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v] == 0) continue;
      if (v < a->dimension()) {
        nt.holo.emplace_back(v, t.exps[v]);
      } else if (v < 2 * a->dimension()) {
        nt.anti.emplace_back(v - a->dimension(), t.exps[v]);
      } else {
        throw ValidationError("NotHolomorphic", "numeric evaluation does not accept auxiliary variables");
      }
    }
    terms_.push_back(std::move(nt));
  }
}

Complex NumericPolynomial::operator()(const ComplexPoint& z) const {
  Complex s(0);
  for (const auto& t : terms_) {
    Complex m = t.coeff;
    for (auto [k, e] : t.holo) m *= std::pow(z[k], static_cast<int>(e));
    for (auto [k, e] : t.anti) m *= std::pow(std::conj(z[k]), static_cast<int>(e));
    s += m;
  }
  return s;
}

NumericField::NumericField(const HoloField& a) {
  for (const auto& p : a.a) {
    const ArenaPtr& arena = p.arena();
    for (std::size_t v = arena->dimension(); v < arena->size(); ++v) {
      if (p.depends_on(v)) throw ValidationError("NotHolomorphic", "field component involves zeta or an auxiliary");
    }
    c_.emplace_back(p);
  }
}

ComplexPoint NumericField::operator()(const ComplexPoint& z) const {
  ComplexPoint out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c(z));
  return out;
}

FlowTrajectory integrate_flow(const HoloField& a, const ComplexPoint& z0, Complex t_end,
                              std::size_t steps) {
  const NumericField f(a);
  if (z0.size() != f.dimension()) throw ValidationError("BadPoint", "initial point has the wrong dimension");
  return rk4(f, z0, t_end, steps);
}

double rho_residual(const HypersurfaceSpec& m, const FlowTrajectory& traj) {
  if (traj.overflow) return std::numeric_limits<double>::infinity();
  const NumericPolynomial rho(m.rho);
  double worst = 0;
  for (const auto& s : traj.samples) worst = std::max(worst, std::abs(rho(s.z)));
  return worst;
}

double ode_defect(const HoloField& a, const FlowTrajectory& traj) {
  if (traj.overflow) return std::numeric_limits<double>::infinity();
  const NumericField f(a);
  double worst = 0;
  for (std::size_t i = 2; i + 2 < traj.samples.size(); ++i) {
    const auto d = stencil_derivative(traj, i);
    const auto v = f(traj.samples[i].z);
    worst = std::max(worst, norm(axpy(d, -1.0, v)));
  }
  return worst;
}

ReparamRun integrate_reparam(const Polynomial& h, const HoloField& a, const HypersurfaceSpec& m,
                             const ComplexPoint& z0, Complex t_end, std::size_t steps,
                             std::size_t sub_steps) {
  const NumericField f(a);
  const NumericPolynomial hn(h);
  if (z0.size() != f.dimension()) throw ValidationError("BadPoint", "initial point has the wrong dimension");
  if (sub_steps == 0) throw ValidationError("BadSteps", "sub_steps must be at least 1");
  auto phi = [&](Complex k) {
    ComplexPoint z = z0;
    const Complex dt = k / static_cast<double>(sub_steps);
    if (dt == Complex(0)) return z;
    for (std::size_t s = 0; s < sub_steps && finite(z); ++s) z = rk4_step(f, z, dt);
    return z;
  };
  auto kdot = [&](const ComplexPoint& k) { return ComplexPoint{hn(phi(k[0]))}; };

  ReparamRun run;
  const FlowTrajectory kt = rk4(kdot, ComplexPoint{Complex(0)}, t_end, steps);
  run.psi.step = kt.step;
  run.psi.overflow = kt.overflow;
  for (const auto& s : kt.samples) {
    run.k.push_back(s.z[0]);
    run.psi.samples.push_back({s.t, phi(s.z[0])});
    if (!finite(run.psi.samples.back().z)) run.psi.overflow = true;
  }
  run.residuals.rho_max = rho_residual(m, run.psi);
  if (run.psi.overflow) {
    run.residuals.ode_defect_max = std::numeric_limits<double>::infinity();
    run.residuals.reparam_defect_max = std::numeric_limits<double>::infinity();
    return run;
  }
  double worst_k = 0, worst_psi = 0;
  for (std::size_t i = 2; i + 2 < run.psi.samples.size(); ++i) {
    const Complex hv = hn(run.psi.samples[i].z);
    const Complex dk = (run.k[i - 2] - 8.0 * run.k[i - 1] + 8.0 * run.k[i + 1] - run.k[i + 2]) / (12.0 * kt.step);
    worst_k = std::max(worst_k, std::abs(dk - hv));
    auto rhs = f(run.psi.samples[i].z);
    for (auto& c : rhs) c *= hv;
    worst_psi = std::max(worst_psi, norm(axpy(stencil_derivative(run.psi, i), -1.0, rhs)));
  }
  run.residuals.ode_defect_max = worst_k;
  run.residuals.reparam_defect_max = worst_psi;
  return run;
}

double convergence_factor(const HoloField& a, const ComplexPoint& z0, Complex t_end,
                          std::size_t steps) {
  const auto z1 = integrate_flow(a, z0, t_end, steps).samples.back().z;
  const auto z2 = integrate_flow(a, z0, t_end, 2 * steps).samples.back().z;
  const auto z4 = integrate_flow(a, z0, t_end, 4 * steps).samples.back().z;
  return norm(axpy(z1, -1.0, z2)) / norm(axpy(z2, -1.0, z4));
}

}  // namespace crlab
