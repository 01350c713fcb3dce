#include "nikitin/rabi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "nikitin/errors.hpp"

namespace nikitin::rabi {

Matrix2 rabi_hamiltonian(double epsilon, double Delta) {
  const Complex d = 0.5 * Complex(epsilon, Delta);
  return {0.5 * epsilon, d, d, -0.5 * epsilon};
}

ClosedFormValue rabi_survival_closed_form(const RabiParams& r) {
  const Complex q(r.epsilon, r.Delta);
  const double e2 = r.epsilon * r.epsilon;
  const Complex den = e2 + q * q;
  if (den == 0.0) throw DegeneracyError("Rabi frequency vanishes: epsilon^2 + (i Delta + epsilon)^2 = 0");
  const Complex coefficient = (4.0 * e2 + 3.0 * q * q) / (4.0 * den);
  const Complex s = std::sin(0.5 * std::sqrt(den) * r.t);
  const Complex v = coefficient * s * s;
  return {v, v.real(), std::abs(v)};
}

RabiPopulations rabi_survival_oracle(const RabiParams& r) {
  const PropagatorMatrix u = oracle::constant_h_propagator(rabi_hamiltonian(r.epsilon, r.Delta), r.t);
  RabiPopulations out;
  out.survival_reim = u.u11.real() + u.u11.imag();
  out.transition_reim = u.u21.real() + u.u21.imag();
  out.survival_mod2 = std::norm(u.u11);
  out.transition_mod2 = std::norm(u.u21);
  out.norm = out.survival_mod2 + out.transition_mod2;
  return out;
}

double exponential_magnitude(const model::ModelParams& p, double t_probe, double window) {
  if (p.A == 0.0) return 0.0;
  const double e = std::max(model::exponent(p, t_probe), model::exponent(p, t_probe + window));
  const double term = std::abs(p.A) * std::exp(e);
  if (p.epsilon == 0.0) return std::numeric_limits<double>::infinity();
  return term / std::abs(p.epsilon);
}

double rabi_limit_convergence(const model::ModelParams& p, double t_probe, double window,
                              std::size_t samples) {
  const double m = exponential_magnitude(p, t_probe, window);
  if (!(m <= kRabiLimitThreshold)) {
    std::ostringstream os;
    os << "Rabi limit not reached: A e^{alpha t + beta} / |epsilon| = " << m << " exceeds "
       << kRabiLimitThreshold;
    throw DomainError(os.str());
  }
  if (samples < 2) throw ConfigError("rabi_limit_convergence needs at least two samples");
  std::vector<double> ts(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    ts[i] = t_probe + window * static_cast<double>(i) / static_cast<double>(samples - 1);
  }
  oracle::IntegratorConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.abs_tol = 1e-14;
  const auto traj = oracle::integrate_tdse(p, {1.0, 0.0, t_probe}, ts.back(), cfg, ts);
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const RabiPopulations ref = rabi_survival_oracle({p.epsilon, p.Delta, ts[i] - t_probe});
    const AmplitudePair& c = traj.samples[i];
    worst = std::max({worst, std::abs(std::norm(c.c1) - ref.survival_mod2),
                      std::abs(std::norm(c.c2) - ref.transition_mod2)});
  }
  return worst;
}

InterferogramGrid interferogram(double Delta, const AxisSpec& t_axis, const AxisSpec& eps_axis,
                                std::size_t workers) {
  if (t_axis.samples < 1 || eps_axis.samples < 1) throw ConfigError("interferogram axes need samples");
  InterferogramGrid g{t_axis, eps_axis, Delta,
                      std::vector<InterferogramPoint>(t_axis.samples * eps_axis.samples)};
  parallel_for(g.grid.size(), workers, [&](std::size_t k) {
    const RabiParams r{eps_axis.value(k % eps_axis.samples), Delta, t_axis.value(k / eps_axis.samples)};
    InterferogramPoint pt;
    try {
      const ClosedFormValue v = rabi_survival_closed_form(r);
      pt.p_closed_re = v.real;
      pt.p_closed_im = v.value.imag();
      pt.p_modulus = v.modulus;
    } catch (const DegeneracyError&) {
      pt.p_closed_re = pt.p_closed_im = pt.p_modulus = std::numeric_limits<double>::quiet_NaN();
    }
    pt.p_mod2_oracle = rabi_survival_oracle(r).survival_mod2;
    g.grid[k] = pt;
  });
  return g;
}

}  // namespace nikitin::rabi
