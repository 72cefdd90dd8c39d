#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "crlab/hypersurface.hpp"
#include "crlab/invariants.hpp"

namespace crlab {

using Complex = std::complex<double>;
using ComplexPoint = std::vector<Complex>;

// A polynomial compiled for binary64 evaluation at (Z, conj Z).
class NumericPolynomial {
 public:
  NumericPolynomial() = default;
  explicit NumericPolynomial(const Polynomial& p);

  // Auxiliary slots must not occur; zeta slots receive conj(z).
  Complex operator()(const ComplexPoint& z) const;

 private:
  struct Term {
    Complex coeff;
    std::vector<std::pair<std::size_t, unsigned>> holo;  // (coordinate, power)
    std::vector<std::pair<std::size_t, unsigned>> anti;
  };
  std::vector<Term> terms_;
};

// Holomorphic vector field sum a_j d/dZ_j ready for numerics. Throws
// ValidationError NotHolomorphic when a component involves zeta or auxiliaries.
class NumericField {
 public:
  explicit NumericField(const HoloField& a);
  std::size_t dimension() const { return c_.size(); }
  ComplexPoint operator()(const ComplexPoint& z) const;

 private:
  std::vector<NumericPolynomial> c_;
};

struct FlowSample {
  Complex t;
  ComplexPoint z;
};

struct FlowTrajectory {
  std::vector<FlowSample> samples;  // samples[0] = (0, Z0)
  Complex step;
  std::string integrator = "rk4";
  bool overflow = false;  // a non-finite value stopped the run
};

struct FlowResiduals {
  double rho_max = 0;         // max |rho(Z, conj Z)| along the run
  double ode_defect_max = 0;  // max |dZ/dt - A(Z)| from a five-point stencil
  std::optional<double> reparam_defect_max;  // max |d psi/dt - h(psi) A(psi)|
};

// Classical RK4 along the segment [0, t_end]; throws ValidationError BadSteps
// when steps == 0 and BadPoint on a dimension mismatch.
FlowTrajectory integrate_flow(const HoloField& a, const ComplexPoint& z0, Complex t_end,
                              std::size_t steps);

// Infinity when the trajectory overflowed.
double rho_residual(const HypersurfaceSpec& m, const FlowTrajectory& traj);
// Interior samples only; 0 for fewer than five samples.
double ode_defect(const HoloField& a, const FlowTrajectory& traj);

struct ReparamRun {
  std::vector<Complex> k;  // K(t_i, Z0)
  FlowTrajectory psi;      // psi(t_i, Z0) = phi(K(t_i, Z0), Z0)
  FlowResiduals residuals;
};

// Integrates dK/dt = h(phi(K, Z0)), K(0) = 0 with RK4, evaluating phi(K, Z0)
// by an independent RK4 run of `sub_steps` steps from Z0 each time. The
// stencil defect of psi is then measured against h(psi) A(psi).
ReparamRun integrate_reparam(const Polynomial& h, const HoloField& a, const HypersurfaceSpec& m,
                             const ComplexPoint& z0, Complex t_end, std::size_t steps,
                             std::size_t sub_steps = 200);

// |Z_n - Z_2n| / |Z_2n - Z_4n| at t_end; about 16 for a fourth order method.
double convergence_factor(const HoloField& a, const ComplexPoint& z0, Complex t_end,
                          std::size_t steps);

}  // namespace crlab
