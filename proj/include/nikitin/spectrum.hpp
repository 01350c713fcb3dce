#pragma once

// Instantaneous eigenvalues of H(t) = Omega sz + delta sx.
//
// Direct:      E = +-sqrt(Omega^2 + delta^2), principal root, plus branch first.
// Closed form: E = +-q csc(2 theta), tan(2 theta) = -q / W with q = i Delta + epsilon and
//              W = A e^{alpha t + beta} + epsilon = 2 Omega (the full detuning bracket).
//              2 theta is taken on the branch cos = W/r, sin = -q/r with r = sqrt(W^2 + q^2),
//              so the ratio to the direct value is -2 at every t.
// Phase:       tan(2 phi) = 2 epsilon Delta / (W^2 + epsilon^2 - Delta^2), evaluated with atan2,
//              so that 2 phi = arg(W^2 + q^2) and Re E+ = (|2 E+| / 2) cos(phi).

#include <cstddef>
#include <utility>
#include <vector>

#include "nikitin/grid.hpp"
#include "nikitin/model.hpp"

namespace nikitin::spectrum {

using model::ModelParams;

struct EnergyDecomposition {
  Complex e_plus, e_minus;
  double re_plus = 0.0, im_plus = 0.0, re_minus = 0.0, im_minus = 0.0;
  double phi = 0.0;
  double z_mag = 0.0;  // |2 E+|
  bool phi_limit = false;         // atan2 denominator was zero
  bool phase_consistent = false;  // (z_mag/2) cos(phi) reproduces re_plus
};

std::pair<Complex, Complex> eigenvalues_direct(const ModelParams& p, double t);
/// Throws DomainError when Omega(t) = 0 or sin(2 theta) = 0.
std::pair<Complex, Complex> eigenvalues_closed_form(const ModelParams& p, double t);
EnergyDecomposition energy_decomposition(const ModelParams& p, double t);

/// Sets a named parameter ("A", "alpha", "beta", "epsilon", "Delta") or the
/// evaluation time ("t"). Throws ConfigError on other names.
void set_parameter(ModelParams& p, double& t, const std::string& name, double value);

struct EnergyMap {
  AxisSpec axis1, axis2;
  std::vector<EnergyDecomposition> grid;  // row-major, axis1 outer

  const EnergyDecomposition& at(std::size_t i1, std::size_t i2) const {
    return grid[i1 * axis2.samples + i2];
  }
};

/// Axes over {Delta, epsilon, beta, t}; t from `t` unless an axis is t.
EnergyMap energy_map(const ModelParams& p, double t, const AxisSpec& axis1, const AxisSpec& axis2,
                     std::size_t workers = 1);

}  // namespace nikitin::spectrum
