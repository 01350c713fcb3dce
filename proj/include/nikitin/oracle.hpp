#pragma once

// Reference solutions by direct numerical integration (Dormand-Prince 8(5,3)).

#include <array>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "nikitin/model.hpp"
#include "nikitin/types.hpp"

namespace nikitin::oracle {

using State = std::array<Complex, 2>;
using Rhs = std::function<State(double, const State&)>;

/// rel_tol and abs_tol bound the error per unit step, so they approximate the
/// global error over the whole interval.
struct IntegratorConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  double max_step = 0.0;  // 0: 0.1/|alpha| for the Schroedinger equation, |span|/10 otherwise
  long max_steps = 2'000'000;
  double fixed_step = 0.0;  // > 0 disables adaptivity (order studies)

  /// Throws ConfigError on non-positive tolerances or max_steps.
  void validate() const;
};

struct IntegrationStats {
  long steps = 0;
  long accepted = 0;
  long rejected = 0;
  long rhs_evaluations = 0;
};

/// Integrates y' = f(t, y) from t0 to t1 (either direction) and returns y at
/// each requested sample time, using the 7th order dense output.
/// Samples must lie in the closed interval and be ordered in the direction of
/// integration. on_step, if set, sees (t, y) after every accepted step.
std::vector<State> integrate(const Rhs& f, double t0, const State& y0, double t1,
                             const std::vector<double>& samples, const IntegratorConfig& cfg,
                             IntegrationStats* stats = nullptr,
                             const std::function<void(double, const State&)>& on_step = {});

struct TrajectoryResult {
  AmplitudePair final;
  std::vector<AmplitudePair> samples;
  std::vector<std::pair<double, double>> norm_trace;  // (t, |C1|^2 + |C2|^2) per accepted step
  long steps_taken = 0;
  long accepted = 0;
  long rejected = 0;
};

/// i dC/dt = H(t) C from init.t to t_end, sampled at sample_times.
TrajectoryResult integrate_tdse(const model::ModelParams& p, const AmplitudePair& init,
                                double t_end, const IntegratorConfig& cfg,
                                const std::vector<double>& sample_times = {});

/// Same with t_end = p.t1.
TrajectoryResult integrate_tdse(const model::ModelParams& p, const AmplitudePair& init,
                                const IntegratorConfig& cfg);

/// Propagator by integrating both unit initial states.
PropagatorMatrix numerical_propagator(const model::ModelParams& p, double t0, double t,
                                      const IntegratorConfig& cfg);

/// exp(-i H dt) = e^{-i tr(H) dt / 2} (cos(rho dt) I - i sin(rho dt)/rho K),
/// K = H - tr(H)/2 I, rho^2 = -det K.
PropagatorMatrix constant_h_propagator(const Matrix2& h, double dt);

/// Integrates x^2 psi'' + x (a - b x) psi' + c^2 psi = 0 in x as the system
/// (psi, x psi') and compares with the Schroedinger solution from init = |2>
/// mapped by psi = C2 e^{-i I}, x psi' = -i c C1 e^{-i I} (I = omega_integral
/// from t(x0)). Returns the largest deviation over `samples` points in [x0, x1].
double transformed_ode_check(const model::ModelParams& p, double x0, double x1,
                             const IntegratorConfig& cfg = {}, std::size_t samples = 201);

}  // namespace nikitin::oracle
