#include "nikitin/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "nikitin/errors.hpp"

namespace nikitin::spectrum {

std::pair<Complex, Complex> eigenvalues_direct(const ModelParams& p, double t) {
  const double w = model::detuning(p, t);
  const Complex d = model::coupling(p);
  const Complex e = std::sqrt(w * w + d * d);
  return {e, -e};
}

std::pair<Complex, Complex> eigenvalues_closed_form(const ModelParams& p, double t) {
  const double w = 2.0 * model::detuning(p, t);
  if (w == 0.0) {
    throw DomainError("closed-form energies undefined where the detuning vanishes; use eigenvalues_direct");
  }
  const Complex q(p.epsilon, p.Delta);
  // branch of 2 theta with cos = w/r, sin = -q/r, continuous in t through both signs of w
  const Complex r = std::sqrt(w * w + q * q);
  if (r == 0.0 || q == 0.0) throw DomainError("closed-form energies undefined: sin(2 theta) = 0");
  const Complex s = -q / r;
  const Complex e = q / s;
  return {e, -e};
}

EnergyDecomposition energy_decomposition(const ModelParams& p, double t) {
  EnergyDecomposition r;
  std::tie(r.e_plus, r.e_minus) = eigenvalues_direct(p, t);
  r.re_plus = r.e_plus.real();
  r.im_plus = r.e_plus.imag();
  r.re_minus = r.e_minus.real();
  r.im_minus = r.e_minus.imag();
  const double w = 2.0 * model::detuning(p, t);
  const double num = 2.0 * p.epsilon * p.Delta;
  const double den = w * w + p.epsilon * p.epsilon - p.Delta * p.Delta;
  r.phi_limit = den == 0.0;
  r.phi = 0.5 * std::atan2(num, den);
  r.z_mag = 2.0 * std::abs(r.e_plus);
  const double scale = std::max(std::abs(r.e_plus), 1e-300);
  r.phase_consistent = std::abs(0.5 * r.z_mag * std::cos(r.phi) - r.re_plus) <= 1e-10 * scale;
  return r;
}

void set_parameter(ModelParams& p, double& t, const std::string& name, double value) {
  if (name == "A") p.A = value;
  else if (name == "alpha") p.alpha = value;
  else if (name == "beta") p.beta = value;
  else if (name == "epsilon") p.epsilon = value;
  else if (name == "Delta") p.Delta = value;
  else if (name == "t") t = value;
  else throw ConfigError("unknown parameter axis '" + name + "'");
}

EnergyMap energy_map(const ModelParams& p, double t, const AxisSpec& axis1, const AxisSpec& axis2,
                     std::size_t workers) {
  for (const AxisSpec* a : {&axis1, &axis2}) {
    if (a->name != "Delta" && a->name != "epsilon" && a->name != "beta" && a->name != "t") {
      throw ConfigError("energy map axes must be Delta, epsilon, beta or t; got '" + a->name + "'");
    }
    if (a->samples < 1) throw ConfigError("axis '" + a->name + "' needs at least one sample");
  }
  if (axis1.name == axis2.name) throw ConfigError("energy map axes must differ");
  EnergyMap m{axis1, axis2, std::vector<EnergyDecomposition>(axis1.samples * axis2.samples)};
  parallel_for(m.grid.size(), workers, [&](std::size_t k) {
    ModelParams q = p;
    double tk = t;
    set_parameter(q, tk, axis1.name, axis1.value(k / axis2.samples));
    set_parameter(q, tk, axis2.name, axis2.value(k % axis2.samples));
    m.grid[k] = energy_decomposition(q, tk);
  });
  return m;
}

}  // namespace nikitin::spectrum
