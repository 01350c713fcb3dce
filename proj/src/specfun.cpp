#include "nikitin/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "nikitin/errors.hpp"

namespace nikitin::specfun {
namespace {

constexpr double kPi = std::numbers::pi;

// B_2k / (2k (2k - 1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,          -1.0 / 360.0,       1.0 / 1260.0,
    -1.0 / 1680.0,       1.0 / 1188.0,       -691.0 / 360360.0,
    1.0 / 156.0,         -3617.0 / 122400.0, 43867.0 / 244188.0,
    -174611.0 / 125400.0};

std::string describe(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ", " << z.imag() << ')';
  return os.str();
}

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(const HypergeometricParams& p, const char* who) {
  if (!finite(p.mu) || !finite(p.gamma) || !finite(p.z)) {
    throw DomainError(std::string(who) + ": non-finite input");
  }
}

// Moves z off the negative real axis onto its upper lip (arg z = +pi).
Complex upper_lip(Complex z, bool* on_cut = nullptr) {
  if (z.imag() == 0.0 && z.real() < 0.0) {
    if (on_cut) *on_cut = true;
    return {z.real(), +0.0};
  }
  return z;
}

Complex gamma_fn(Complex z) { return std::exp(ln_gamma(z)); }

// Direct power series of M and of its derivative.
ValueAndDerivative kummer_series(Complex mu, Complex gamma, Complex z) {
  Complex ratio = 1.0;  // (mu)_n / (gamma)_n
  Complex power = 1.0;  // z^n / n!
  Complex value = 0.0;
  Complex deriv = 0.0;
  int small = 0;
  for (int n = 0; n < kRegions.max_terms; ++n) {
    const Complex next = ratio * (mu + double(n)) / (gamma + double(n));
    const Complex t = ratio * power;
    const Complex d = next * power;
    value += t;
    deriv += d;
    if (next == 0.0) return {value, deriv};
    const bool tiny = std::abs(t) <= kRegions.tolerance * std::abs(value) &&
                      std::abs(d) <= kRegions.tolerance * std::abs(deriv);
    small = tiny ? small + 1 : 0;
    if (small >= 2) return {value, deriv};
    power *= z / double(n + 1);
    ratio = next;
  }
  throw AccuracyError("kummer_m: power series did not converge at z = " + describe(z),
                      std::abs(ratio * power) / std::abs(value));
}

// One local re-expansion of z w'' + (gamma - z) w' - mu w = 0 about zc,
// advancing (w, w') to zc + h. Works on d_k = c_k h^k.
void taylor_step(Complex mu, Complex gamma, Complex zc, Complex h, Complex& w, Complex& dw) {
  Complex d0 = w;
  Complex d1 = dw * h;
  Complex sum = d0 + d1;
  Complex dsum = d1;
  const Complex gz = gamma - zc;
  const Complex ratio = h / zc;
  int small = 0;
  int k = 0;
  for (; k < kRegions.max_terms; ++k) {
    const double kk = k;
    const Complex d2 =
        ratio * (-(kk + gz) * d1 / (kk + 2.0) + (kk + mu) * d0 * h / ((kk + 2.0) * (kk + 1.0)));
    sum += d2;
    dsum += (kk + 2.0) * d2;
    const double scale = std::abs(sum) + std::abs(dsum);
    small = ((kk + 3.0) * std::abs(d2) <= kRegions.tolerance * scale) ? small + 1 : 0;
    if (small >= 3) break;
    d0 = d1;
    d1 = d2;
  }
  if (k == kRegions.max_terms) {
    throw AccuracyError("confluent ODE continuation did not converge near z = " + describe(zc),
                        std::abs(d1) / (std::abs(sum) + std::abs(dsum)));
  }
  w = sum;
  dw = dsum / h;
}

double step_limit(double radius) {
  return std::min(kRegions.taylor_step, kRegions.step_fraction * radius);
}

// Straight segment from `from` to `to`, neither containing the origin.
void advance_line(Complex mu, Complex gamma, Complex from, Complex to, Complex& w, Complex& dw) {
  Complex zc = from;
  while (zc != to) {
    const Complex rem = to - zc;
    const double limit = step_limit(std::abs(zc));
    if (std::abs(rem) <= limit) {
      taylor_step(mu, gamma, zc, rem, w, dw);
      zc = to;
    } else {
      const Complex h = rem * (limit / std::abs(rem));
      taylor_step(mu, gamma, zc, h, w, dw);
      zc += h;
    }
  }
}

// Arc of |z| = |to| from angle `from_angle` to arg(to); lands exactly on `to`.
void advance_arc(Complex mu, Complex gamma, double from_angle, Complex to, Complex& w,
                 Complex& dw) {
  const double r = std::abs(to);
  const double to_angle = std::arg(to);
  const double limit = step_limit(r);
  const double dth = 2.0 * std::asin(std::min(1.0, limit / (2.0 * r)));
  const int n = std::max(1, int(std::ceil(std::abs(to_angle - from_angle) / dth)));
  Complex zc = std::polar(r, from_angle);
  for (int i = 1; i <= n; ++i) {
    const Complex next =
        i == n ? to : std::polar(r, from_angle + (to_angle - from_angle) * double(i) / n);
    taylor_step(mu, gamma, zc, next - zc, w, dw);
    zc = next;
  }
}

// z^-a sum_n (a)_n (a-b+1)_n / n! (-z)^-n; false if the series stalls above tolerance.
bool asymptotic_u(Complex a, Complex b, Complex z, Complex& out) {
  const Complex c = a - b + 1.0;
  const Complex mz = -z;
  Complex term = 1.0;
  Complex sum = 1.0;
  double prev = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int n = 0; n < kRegions.max_terms; ++n) {
    term *= (a + double(n)) * (c + double(n)) / (double(n + 1) * mz);
    const double at = std::abs(term);
    if (at == 0.0) {
      converged = true;
      break;
    }
    if (at > prev) return false;
    sum += term;
    if (at <= kRegions.tolerance * std::abs(sum)) {
      converged = true;
      break;
    }
    prev = at;
  }
  if (!converged) return false;
  out = std::exp(-a * std::log(z)) * sum;
  return true;
}

bool asymptotic_u_pair(Complex a, Complex b, Complex z, ValueAndDerivative& out) {
  Complex u0;
  Complex u1;
  if (!asymptotic_u(a, b, z, u0) || !asymptotic_u(a + 1.0, b + 1.0, z, u1)) return false;
  out = {u0, -a * u1};
  return true;
}

// U(-m, b, z) = sum_s C(m, s) (b+s)_{m-s} (-z)^s, with derivative.
ValueAndDerivative tricomi_polynomial(int m, Complex b, Complex z) {
  Complex value = 0.0;
  Complex deriv = 0.0;
  double binom = 1.0;
  for (int s = 0; s <= m; ++s) {
    Complex poch = 1.0;
    for (int j = 0; j < m - s; ++j) poch *= b + double(s + j);
    const double sign = (s % 2 == 0) ? 1.0 : -1.0;
    const Complex coeff = binom * poch * sign;
    value += coeff * std::pow(z, s);
    if (s > 0) deriv += coeff * double(s) * std::pow(z, s - 1);
    binom = binom * double(m - s) / double(s + 1);
  }
  return {value, deriv};
}

ValueAndDerivative tricomi_path(Complex mu, Complex gamma, Complex z) {
  const double r = std::abs(z);
  const double angle = std::arg(z);
  const double start_angle = std::clamp(angle, -kPi / 2.0, kPi / 2.0);
  double radius = std::max(kRegions.asymptotic_radius, r);
  ValueAndDerivative start{};
  while (!asymptotic_u_pair(mu, gamma, std::polar(radius, start_angle), start)) {
    radius *= 1.25;
    if (radius > kRegions.max_asymptotic_radius) {
      throw AccuracyError("tricomi_u: no convergent asymptotic start for mu = " + describe(mu) +
                              ", gamma = " + describe(gamma),
                          1.0);
    }
  }
  Complex w = start.value;
  Complex dw = start.derivative;
  const Complex start_z = std::polar(radius, start_angle);
  if (start_angle == angle) {
    advance_line(mu, gamma, start_z, z, w, dw);
  } else {
    advance_line(mu, gamma, start_z, std::polar(r, start_angle), w, dw);
    advance_arc(mu, gamma, start_angle, z, w, dw);
  }
  return {w, dw};
}

// U = Gamma(1-g)/Gamma(a-g+1) M(a,g,z) + Gamma(g-1)/Gamma(a) z^{1-g} M(a-g+1,2-g,z)
ValueAndDerivative tricomi_connection(Complex mu, Complex gamma, Complex z) {
  const ValueAndDerivative m1 = kummer_series(mu, gamma, z);
  const ValueAndDerivative m2 = kummer_series(mu - gamma + 1.0, 2.0 - gamma, z);
  const Complex c1 = gamma_fn(1.0 - gamma) * reciprocal_gamma(mu - gamma + 1.0);
  const Complex c2 = gamma_fn(gamma - 1.0) * reciprocal_gamma(mu);
  const Complex zpow = std::exp((1.0 - gamma) * std::log(z));
  return {c1 * m1.value + c2 * zpow * m2.value,
          c1 * m1.derivative + c2 * zpow * ((1.0 - gamma) / z * m2.value + m2.derivative)};
}

}  // namespace

Complex ln_gamma(Complex z) {
  if (!finite(z)) throw DomainError("ln_gamma: non-finite argument " + describe(z));
  if (is_nonpositive_integer(z)) {
    throw DomainError("ln_gamma: pole of Gamma at z = " + describe(z));
  }
  if (z.real() < -1000.0) {
    throw DomainError("ln_gamma: Re z < -1000 is outside the supported range, z = " +
                      describe(z));
  }
  // Shift to Re w >= 10 with the recurrence; summing principal logs of the
  // factors keeps the result analytic off the negative real axis.
  Complex shift = 0.0;
  Complex w = z;
  while (w.real() < 10.0) {
    shift += std::log(w);
    w += 1.0;
  }
  const Complex inv = 1.0 / w;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double c : kStirling) {
    series += c * power;
    power *= inv2;
  }
  return (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi) + series - shift;
}

Complex reciprocal_gamma(Complex z) {
  if (is_nonpositive_integer(z)) return 0.0;
  return std::exp(-ln_gamma(z));
}

ValueAndDerivative kummer_m_with_derivative(const HypergeometricParams& p) {
  require_finite(p, "kummer_m");
  const Complex mu = p.mu;
  const Complex gamma = p.gamma;
  const Complex z = p.z;
  if (is_nonpositive_integer(gamma)) {
    throw DomainError("kummer_m: gamma = " + describe(gamma) + " is a pole of the series");
  }
  if (z == 0.0) return {1.0, mu / gamma};
  if (is_nonpositive_integer(mu)) return kummer_series(mu, gamma, z);

  if (z.real() < 0.0) {
    const ValueAndDerivative inner = kummer_m_with_derivative({gamma - mu, gamma, -z});
    const Complex ez = std::exp(z);
    return {ez * inner.value, ez * (inner.value - inner.derivative)};
  }

  const double r = std::abs(z);
  if (r <= kRegions.series_radius) return kummer_series(mu, gamma, z);

  if (r >= kRegions.asymptotic_radius) {
    // M/Gamma(gamma) = e^{s i pi mu} U(mu,gamma,z)/Gamma(gamma-mu)
    //                + e^{-s i pi (gamma-mu)} e^z U(gamma-mu,gamma,-z)/Gamma(mu),
    // s = +1 for Im z > 0 (so that -z = e^{-i pi} z), s = -1 otherwise.
    const double s = z.imag() > 0.0 ? 1.0 : -1.0;
    const Complex mz = upper_lip(-z);
    ValueAndDerivative u1{};
    ValueAndDerivative u2{};
    if (asymptotic_u_pair(mu, gamma, z, u1) && asymptotic_u_pair(gamma - mu, gamma, mz, u2)) {
      const Complex g = gamma_fn(gamma);
      const Complex c1 = std::exp(s * kI * kPi * mu) * reciprocal_gamma(gamma - mu);
      const Complex c2 = std::exp(-s * kI * kPi * (gamma - mu)) * reciprocal_gamma(mu) * std::exp(z);
      return {g * (c1 * u1.value + c2 * u2.value),
              g * (c1 * u1.derivative + c2 * (u2.value - u2.derivative))};
    }
  }
  if (r > kRegions.max_asymptotic_radius) {
    throw AccuracyError("kummer_m: |z| too large for ODE continuation, z = " + describe(z), 1.0);
  }
  const Complex start = z * (kRegions.series_radius / r);
  const ValueAndDerivative s0 = kummer_series(mu, gamma, start);
  Complex w = s0.value;
  Complex dw = s0.derivative;
  advance_line(mu, gamma, start, z, w, dw);
  return {w, dw};
}

Complex kummer_m(const HypergeometricParams& p) { return kummer_m_with_derivative(p).value; }

Complex kummer_m_derivative(const HypergeometricParams& p) {
  require_finite(p, "kummer_m_derivative");
  if (is_nonpositive_integer(p.gamma)) {
    throw DomainError("kummer_m_derivative: gamma = " + describe(p.gamma) + " is a pole");
  }
  return p.mu / p.gamma * kummer_m({p.mu + 1.0, p.gamma + 1.0, p.z});
}

ValueAndDerivative tricomi_u_with_derivative(const HypergeometricParams& p) {
  require_finite(p, "tricomi_u");
  const Complex mu = p.mu;
  const Complex gamma = p.gamma;
  const Complex z = upper_lip(p.z);
  if (z == 0.0) {
    throw DomainError("tricomi_u: derivative is singular at z = 0");
  }
  if (is_nonpositive_integer(mu)) {
    return tricomi_polynomial(int(-mu.real()), gamma, z);
  }
  const Complex shifted = mu - gamma + 1.0;
  if (is_nonpositive_integer(shifted)) {
    // U(a,b,z) = z^{1-b} U(a-b+1, 2-b, z)
    const ValueAndDerivative poly = tricomi_polynomial(int(-shifted.real()), 2.0 - gamma, z);
    const Complex zpow = std::exp((1.0 - gamma) * std::log(z));
    return {zpow * poly.value, zpow * ((1.0 - gamma) / z * poly.value + poly.derivative)};
  }
  ValueAndDerivative out{};
  if (asymptotic_u_pair(mu, gamma, z, out)) return out;
  if (std::abs(z) <= kRegions.series_radius &&
      std::abs(gamma - std::round(gamma.real())) >= kRegions.integer_gamma_margin) {
    return tricomi_connection(mu, gamma, z);
  }
  return tricomi_path(mu, gamma, z);
}

TricomiValue tricomi_u_eval(const HypergeometricParams& p) {
  require_finite(p, "tricomi_u");
  bool on_cut = false;
  const Complex z = upper_lip(p.z, &on_cut);
  if (z == 0.0) {
    if (p.gamma.real() < 1.0) {
      return {gamma_fn(1.0 - p.gamma) * reciprocal_gamma(p.mu - p.gamma + 1.0), false};
    }
    throw DomainError("tricomi_u: U is infinite at z = 0 for Re gamma >= 1, gamma = " +
                      describe(p.gamma));
  }
  return {tricomi_u_with_derivative({p.mu, p.gamma, z}).value, on_cut};
}

Complex tricomi_u(const HypergeometricParams& p) { return tricomi_u_eval(p).value; }

Complex tricomi_u_derivative(const HypergeometricParams& p) {
  return -p.mu * tricomi_u({p.mu + 1.0, p.gamma + 1.0, p.z});
}

Complex wronskian_closed_form(const HypergeometricParams& p) {
  require_finite(p, "wronskian");
  if (is_nonpositive_integer(p.mu)) {
    throw DomainError("wronskian: Gamma(mu) has a pole at mu = " + describe(p.mu));
  }
  if (is_nonpositive_integer(p.gamma)) {
    throw DomainError("wronskian: Gamma(gamma) has a pole at gamma = " + describe(p.gamma));
  }
  const Complex z = upper_lip(p.z);
  return kWronskianSign *
         std::exp(ln_gamma(p.gamma) - ln_gamma(p.mu) - p.gamma * std::log(z) + z);
}

double wronskian_residual(const HypergeometricParams& p) {
  const Complex closed = wronskian_closed_form(p);
  const ValueAndDerivative m = kummer_m_with_derivative(p);
  const ValueAndDerivative u = tricomi_u_with_derivative(p);
  const Complex computed = m.value * u.derivative - u.value * m.derivative;
  return std::abs(computed - closed) / std::abs(closed);
}

}  // namespace nikitin::specfun
