#pragma once

// Constant-Hamiltonian limit of the exponential model (alpha t + beta -> -inf):
//   H = (epsilon/2) sz + ((i Delta + epsilon)/2) sx,
// started in |1>. The closed form is
//   P(t) = (4 e^2 + 3 q^2) / (4 (e^2 + q^2)) sin^2(sqrt(e^2 + q^2) t / 2),  q = i Delta + e,
// evaluated literally with complex arithmetic.

#include <cstddef>
#include <vector>

#include "nikitin/grid.hpp"
#include "nikitin/model.hpp"
#include "nikitin/oracle.hpp"

namespace nikitin::rabi {

struct RabiParams {
  double epsilon = 0.0;
  double Delta = 0.0;
  double t = 0.0;
};

struct ClosedFormValue {
  Complex value;
  double real = 0.0;
  double modulus = 0.0;
};

struct RabiPopulations {
  double survival_reim = 0.0;  // Re + Im of U11
  double transition_reim = 0.0;
  double survival_mod2 = 0.0;  // |U11|^2
  double transition_mod2 = 0.0;
  double norm = 0.0;
};

Matrix2 rabi_hamiltonian(double epsilon, double Delta);

/// Throws DegeneracyError when e^2 + q^2 = 0.
ClosedFormValue rabi_survival_closed_form(const RabiParams& r);

/// Populations from the exact 2x2 exponential acting on (1, 0).
RabiPopulations rabi_survival_oracle(const RabiParams& r);

/// Largest ratio A e^{alpha t + beta} / |epsilon| accepted by rabi_limit_convergence.
inline constexpr double kRabiLimitThreshold = 1e-2;
inline constexpr double kRabiWindow = 2.0;

/// Relative size A e^{alpha t + beta} / |epsilon| of the exponential term,
/// maximised over [t_probe, t_probe + window].
double exponential_magnitude(const model::ModelParams& p, double t_probe, double window = kRabiWindow);

/// Max |P_model - P_rabi| (squared moduli, survival and transition) over
/// [t_probe, t_probe + window], both started in |1> at t_probe.
/// Throws DomainError when exponential_magnitude exceeds kRabiLimitThreshold.
double rabi_limit_convergence(const model::ModelParams& p, double t_probe,
                              double window = kRabiWindow, std::size_t samples = 41);

struct InterferogramPoint {
  double p_closed_re = 0.0;
  double p_closed_im = 0.0;
  double p_modulus = 0.0;
  double p_mod2_oracle = 0.0;  // survival |U11|^2
};

struct InterferogramGrid {
  AxisSpec t_axis, eps_axis;
  double Delta = 0.0;
  std::vector<InterferogramPoint> grid;  // row-major, t outer

  const InterferogramPoint& at(std::size_t it, std::size_t ie) const {
    return grid[it * eps_axis.samples + ie];
  }
};

InterferogramGrid interferogram(double Delta, const AxisSpec& t_axis, const AxisSpec& eps_axis,
                                std::size_t workers = 1);

}  // namespace nikitin::rabi
