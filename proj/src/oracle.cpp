#include "nikitin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dop853_tableau.hpp"
#include "nikitin/errors.hpp"

namespace nikitin::oracle {

namespace {

using namespace dop853;

// y + h * sum_j w[j] k[j] over the first n stages
State combine(const State& y, double h, const double* w, const std::array<State, kStagesExtended>& k,
              int n) {
  State out = y;
  for (std::size_t i = 0; i < out.size(); ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < n; ++j) {
      if (w[j] != 0.0) acc += w[j] * k[j][i];
    }
    out[i] += h * acc;
  }
  return out;
}

double scale_of(const State& y0, const State& y1, std::size_t i, const IntegratorConfig& cfg) {
  return cfg.abs_tol + cfg.rel_tol * std::max(std::abs(y0[i]), std::abs(y1[i]));
}

// Combined 5th/3rd-order estimate of the local error, divided by |h|.
double error_rate(const std::array<State, kStagesExtended>& k, const State& y0, const State& y1,
                  const IntegratorConfig& cfg) {
  double e5 = 0.0, e3 = 0.0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    Complex a5 = 0.0, a3 = 0.0;
    for (int j = 0; j <= kStages; ++j) {
      a5 += E5[j] * k[j][i];
      a3 += E3[j] * k[j][i];
    }
    const double sc = scale_of(y0, y1, i, cfg);
    e5 += std::norm(a5) / (sc * sc);
    e3 += std::norm(a3) / (sc * sc);
  }
  if (e5 == 0.0 && e3 == 0.0) return 0.0;
  return e5 / std::sqrt((e5 + 0.01 * e3) * static_cast<double>(y0.size()));
}

double initial_step(const Rhs& f, double t0, const State& y0, const State& f0, double dir,
                    double max_step, const IntegratorConfig& cfg) {
  double d0 = 0.0, d1 = 0.0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y0[i]);
    d0 += std::norm(y0[i]) / (sc * sc);
    d1 += std::norm(f0[i]) / (sc * sc);
  }
  d0 = std::sqrt(d0 / 2.0);
  d1 = std::sqrt(d1 / 2.0);
  double h0 = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
  h0 = std::min(h0, max_step);
  State y1 = y0;
  for (std::size_t i = 0; i < y0.size(); ++i) y1[i] += dir * h0 * f0[i];
  const State f1 = f(t0 + dir * h0, y1);
  double d2 = 0.0;
  for (std::size_t i = 0; i < y0.size(); ++i) {
    const double sc = cfg.abs_tol + cfg.rel_tol * std::abs(y0[i]);
    d2 += std::norm(f1[i] - f0[i]) / (sc * sc);
  }
  d2 = std::sqrt(d2 / 2.0) / h0;
  const double dmax = std::max(d1, d2);
  const double h1 = dmax <= 1e-15 ? std::max(1e-6, h0 * 1e-3) : std::pow(0.01 / dmax, 1.0 / 8.0);
  return std::min({100.0 * h0, h1, max_step});
}

// Coefficients of the 7th-order interpolant on [t, t + h].
std::array<State, kInterpolatorPower> dense_coefficients(const Rhs& f, double t, double h,
                                                         const State& y0, const State& y1,
                                                         std::array<State, kStagesExtended>& k) {
  for (int s = kStages + 1; s < kStagesExtended; ++s) {
    k[s] = f(t + C[s] * h, combine(y0, h, A[s].data(), k, s));
  }
  std::array<State, kInterpolatorPower> F{};
  for (std::size_t i = 0; i < y0.size(); ++i) {
    const Complex dy = y1[i] - y0[i];
    F[0][i] = dy;
    F[1][i] = h * k[0][i] - dy;
    F[2][i] = 2.0 * dy - h * (k[kStages][i] + k[0][i]);
    for (int r = 0; r < 4; ++r) {
      Complex acc = 0.0;
      for (int j = 0; j < kStagesExtended; ++j) acc += D[r][j] * k[j][i];
      F[3 + r][i] = h * acc;
    }
  }
  return F;
}

State interpolate(const std::array<State, kInterpolatorPower>& F, const State& y0, double x) {
  State y{};
  for (int r = kInterpolatorPower - 1, n = 0; r >= 0; --r, ++n) {
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] += F[r][i];
      y[i] *= n % 2 == 0 ? x : 1.0 - x;
    }
  }
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += y0[i];
  return y;
}

}  // namespace

void IntegratorConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw ConfigError("tolerances must be positive");
  if (max_steps <= 0) throw ConfigError("max_steps must be positive");
  if (max_step < 0.0 || fixed_step < 0.0) throw ConfigError("step sizes must be non-negative");
}

std::vector<State> integrate(const Rhs& f, double t0, const State& y0, double t1,
                             const std::vector<double>& samples, const IntegratorConfig& cfg,
                             IntegrationStats* stats,
                             const std::function<void(double, const State&)>& on_step) {
  cfg.validate();
  IntegrationStats local;
  IntegrationStats& st = stats ? *stats : local;
  st = {};
  const double dir = t1 >= t0 ? 1.0 : -1.0;
  const double span = std::abs(t1 - t0);
  std::vector<State> out;
  out.reserve(samples.size());
  std::size_t next = 0;
  const auto in_range = [&](double ts) { return dir * (ts - t0) >= -1e-14 * (1.0 + span) && dir * (t1 - ts) >= -1e-14 * (1.0 + span); };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!in_range(samples[i]) || (i > 0 && dir * (samples[i] - samples[i - 1]) < 0.0)) {
      throw ConfigError("sample times must lie in the integration interval and be ordered");
    }
  }
  while (next < samples.size() && samples[next] == t0) {
    out.push_back(y0);
    ++next;
  }
  if (span == 0.0) {
    while (next < samples.size()) out.push_back(y0), ++next;
    return out;
  }

  const double max_step = cfg.max_step > 0.0 ? cfg.max_step : span / 10.0;
  double t = t0;
  State y = y0;
  std::array<State, kStagesExtended> k{};
  k[0] = f(t, y);
  ++st.rhs_evaluations;
  double h;
  if (cfg.fixed_step > 0.0) {
    const double n = std::ceil(span / cfg.fixed_step - 1e-12);
    h = span / n;
  } else {
    h = initial_step(f, t0, y0, k[0], dir, max_step, cfg);
    ++st.rhs_evaluations;
  }

  while (dir * (t1 - t) > 0.0) {
    if (st.steps >= cfg.max_steps) {
      std::ostringstream os;
      os << "integrator exhausted " << cfg.max_steps << " steps at t = " << t;
      throw AccuracyError(os.str(), std::abs(t1 - t));
    }
    const bool last = h >= dir * (t1 - t) * (1.0 - 1e-12);
    const double hs = last ? t1 - t : dir * h;
    ++st.steps;

    for (int s = 1; s < kStages; ++s) k[s] = f(t + C[s] * hs, combine(y, hs, A[s].data(), k, s));
    const State y1 = combine(y, hs, B.data(), k, kStages);
    k[kStages] = f(t + hs, y1);
    st.rhs_evaluations += kStages;

    double err = 0.0;
    if (cfg.fixed_step <= 0.0) {
      // error per unit step: the local tolerance shrinks with |h| / span
      err = error_rate(k, y, y1, cfg) * span;
      if (!std::isfinite(err)) err = 1e10;
      if (err > 1.0) {
        ++st.rejected;
        h *= std::max(0.2, 0.9 * std::pow(err, -1.0 / 7.0));
        if (h < 1e-14 * (1.0 + std::abs(t))) {
          throw AccuracyError("step size underflow in integrator", err);
        }
        continue;
      }
    }
    ++st.accepted;
    const double t_new = last ? t1 : t + hs;

    if (next < samples.size() && dir * (samples[next] - t_new) <= 0.0) {
      const auto F = dense_coefficients(f, t, hs, y, y1, k);
      st.rhs_evaluations += kStagesExtended - kStages - 1;
      while (next < samples.size() && dir * (samples[next] - t_new) <= 0.0) {
        out.push_back(samples[next] == t_new ? y1 : interpolate(F, y, (samples[next] - t) / hs));
        ++next;
      }
    }

    t = t_new;
    y = y1;
    k[0] = k[kStages];
    if (on_step) on_step(t, y);
    if (cfg.fixed_step <= 0.0) {
      const double fac = err == 0.0 ? 5.0 : std::clamp(0.9 * std::pow(err, -1.0 / 7.0), 0.2, 5.0);
      h = std::min(h * fac, max_step);
    }
  }
  while (next < samples.size()) out.push_back(y), ++next;
  return out;
}

TrajectoryResult integrate_tdse(const model::ModelParams& p, const AmplitudePair& init,
                                double t_end, const IntegratorConfig& cfg,
                                const std::vector<double>& sample_times) {
  if (!std::isfinite(std::abs(init.c1)) || !std::isfinite(std::abs(init.c2))) {
    throw DomainError("initial amplitudes must be finite");
  }
  model::exponent(p, init.t);
  model::exponent(p, t_end);
  IntegratorConfig c = cfg;
  if (c.max_step <= 0.0) c.max_step = 0.1 / std::abs(p.alpha);
  const double half_eps = 0.5 * p.epsilon;
  const double half_a = 0.5 * p.A;
  const Complex delta = model::coupling(p);
  const Rhs rhs = [&](double t, const State& y) -> State {
    const double w = half_a * std::exp(p.alpha * t + p.beta) + half_eps;
    return {-kI * (w * y[0] + delta * y[1]), -kI * (delta * y[0] - w * y[1])};
  };

  TrajectoryResult r;
  r.norm_trace.emplace_back(init.t, init.norm());
  std::vector<double> samples = sample_times;
  if (samples.empty() || samples.back() != t_end) samples.push_back(t_end);
  IntegrationStats st;
  const auto ys = integrate(rhs, init.t, {init.c1, init.c2}, t_end, samples, c, &st,
                            [&](double t, const State& y) {
                              r.norm_trace.emplace_back(t, std::norm(y[0]) + std::norm(y[1]));
                            });
  for (std::size_t i = 0; i < sample_times.size(); ++i) {
    r.samples.push_back({ys[i][0], ys[i][1], sample_times[i]});
  }
  r.final = {ys.back()[0], ys.back()[1], t_end};
  r.steps_taken = st.steps;
  r.accepted = st.accepted;
  r.rejected = st.rejected;
  return r;
}

TrajectoryResult integrate_tdse(const model::ModelParams& p, const AmplitudePair& init,
                                const IntegratorConfig& cfg) {
  return integrate_tdse(p, init, p.t1, cfg);
}

PropagatorMatrix numerical_propagator(const model::ModelParams& p, double t0, double t,
                                      const IntegratorConfig& cfg) {
  const AmplitudePair c1 = integrate_tdse(p, {1.0, 0.0, t0}, t, cfg).final;
  const AmplitudePair c2 = integrate_tdse(p, {0.0, 1.0, t0}, t, cfg).final;
  return {c1.c1, c2.c1, c1.c2, c2.c2, t0, t};
}

PropagatorMatrix constant_h_propagator(const Matrix2& h, double dt) {
  const Complex half_trace = 0.5 * h.trace();
  const Matrix2 k = h - half_trace * Matrix2::identity();
  const Complex rho = std::sqrt(-k.det());
  const Complex arg = rho * dt;
  Complex cos_part, sinc_dt;  // cos(rho dt), sin(rho dt)/rho
  if (std::abs(arg) < 1e-4) {
    const Complex a2 = arg * arg;
    cos_part = 1.0 - a2 / 2.0 + a2 * a2 / 24.0;
    sinc_dt = dt * (1.0 - a2 / 6.0 + a2 * a2 / 120.0);
  } else {
    cos_part = std::cos(arg);
    sinc_dt = std::sin(arg) / rho;
  }
  const Complex phase = half_trace == 0.0 ? Complex(1.0) : std::exp(-kI * half_trace * dt);
  const Matrix2 u = cos_part * Matrix2::identity() - (kI * sinc_dt) * k;
  return PropagatorMatrix::from(phase * u, 0.0, dt);
}

double transformed_ode_check(const model::ModelParams& p, double x0, double x1,
                             const IntegratorConfig& cfg, std::size_t samples) {
  if (!(x0 > 0.0) || !(x1 > 0.0)) throw DomainError("transformed_ode_check requires x0, x1 > 0");
  if (samples < 2) throw ConfigError("transformed_ode_check needs at least two samples");
  const model::DerivedParams d = model::derived_params(p);
  const double ta = model::t_of_x(p, x0);
  const double tb = model::t_of_x(p, x1);

  std::vector<double> xs(samples), ts(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(samples - 1);
    ts[i] = ta + f * (tb - ta);
    xs[i] = model::x_of_t(p, ts[i]);
  }
  xs.front() = x0;
  xs.back() = x1;
  ts.front() = ta;
  ts.back() = tb;

  const TrajectoryResult tdse = integrate_tdse(p, {0.0, 1.0, ta}, tb, cfg, ts);

  const Complex one_minus_a = 1.0 - d.a;
  const Complex c_sq = d.c * d.c;
  const Rhs rhs = [&](double x, const State& y) -> State {
    // y = (psi, w = x psi')
    return {y[1] / x, ((one_minus_a + d.b * x) * y[1] - c_sq * y[0]) / x};
  };
  IntegratorConfig xc = cfg;
  xc.max_step = std::abs(x1 - x0) / 50.0;
  if (d.b != 0.0) xc.max_step = std::min(xc.max_step, 0.1 / std::abs(d.b));
  const State start{1.0, 0.0};
  const auto ys = integrate(rhs, x0, start, x1, xs, xc);

  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Complex g = std::exp(-kI * model::omega_integral(p, ta, ts[i]));
    const Complex psi = tdse.samples[i].c2 * g;
    const Complex w = -kI * d.c * tdse.samples[i].c1 * g;
    worst = std::max({worst, std::abs(psi - ys[i][0]), std::abs(w - ys[i][1])});
  }
  return worst;
}

}  // namespace nikitin::oracle
