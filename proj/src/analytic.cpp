#include "nikitin/analytic.hpp"

#include <cmath>
#include <sstream>

#include "nikitin/errors.hpp"
#include "nikitin/specfun.hpp"

namespace nikitin::analytic {

namespace {

Complex real_power(double x, Complex e) { return std::exp(e * std::log(x)); }

void require_positive(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << "basis requires finite x > 0, got " << x;
    throw DomainError(os.str());
  }
}


Matrix2 transfer(const DerivedParams& d, double x0, double x) {
  const BasisSolutions s0 = basis_solutions(d, x0);
  const BasisSolutions s = basis_solutions(d, x);
  const Complex det = s0.u2 * s0.v1 - s0.u1 * s0.v2;
  if (det == 0.0 || !std::isfinite(std::abs(det))) {
    throw DegeneracyError("basis solutions are linearly dependent at x0");
  }
  const auto omega = [&](const Complex& uk0, const Complex& vk0, const Complex& ukp,
                         const Complex& vkp) { return vk0 * ukp - uk0 * vkp; };
  // row k of the result: C_k component, column: initial component
  const Complex w12 = omega(s0.u1, s0.v1, s.u2, s.v2);
  const Complex w11 = omega(s0.u1, s0.v1, s.u1, s.v1);
  const Complex w22 = omega(s0.u2, s0.v2, s.u2, s.v2);
  const Complex w21 = omega(s0.u2, s0.v2, s.u1, s.v1);
  return {w12 / det, -w22 / det, w11 / det, -w21 / det};
}

}  // namespace

BasisSolutions basis_solutions(const DerivedParams& d, double x) {
  require_positive(x);
  const Complex mu = d.mu2;
  if (d.c == 0.0) {
    if (mu != 0.0) throw DegeneracyError("c = 0 requires mu = 0");
    return {1.0, 0.0, 0.0, std::exp(-2.0 * d.lambda * std::log(x) + d.b * x)};
  }
  const Complex i_over_c = kI / d.c;
  if (d.b == 0.0) {
    if (d.mu1 == d.mu2) throw DegeneracyError("coalescing exponents for A = 0");
    const Complex p2 = real_power(x, d.mu2);
    const Complex p1 = real_power(x, d.mu1);
    return {p2, p1, i_over_c * d.mu2 * p2, i_over_c * d.mu1 * p1};
  }
  const specfun::HypergeometricParams hp{mu, d.gamma, d.b * x};
  const specfun::ValueAndDerivative m = specfun::kummer_m_with_derivative(hp);
  const specfun::ValueAndDerivative u = specfun::tricomi_u_with_derivative(hp);
  const Complex xm = real_power(x, mu);
  const Complex z = hp.z;
  return {xm * m.value, xm * u.value, i_over_c * xm * (mu * m.value + z * m.derivative),
          i_over_c * xm * (mu * u.value + z * u.derivative)};
}

Complex transition_parameter_omega12(const DerivedParams& d, double x0) {
  require_positive(x0);
  if (d.c == 0.0) {
    throw DomainError("omega12 undefined for c = 0; the propagator is diagonal");
  }
  if (d.b == 0.0) throw DomainError("omega12 closed form requires A != 0");
  const Complex mu = d.mu2;
  const Complex ln_ratio = specfun::ln_gamma(d.gamma) - specfun::ln_gamma(mu);
  const Complex z0 = d.b * x0;
  return kI / d.c *
         std::exp(ln_ratio + (1.0 - d.gamma) * std::log(d.b) +
                  (2.0 * mu - d.gamma + 1.0) * std::log(x0) + z0);
}

PropagatorMatrix propagator(const ModelParams& p, double t0, double t, Frame frame) {
  const DerivedParams d = model::derived_params(p);
  Matrix2 m = transfer(d, model::x_of_t(p, t0), model::x_of_t(p, t));
  if (frame == Frame::original) {
    m = std::exp(kI * model::omega_integral(p, t0, t)) * m;
  }
  return PropagatorMatrix::from(m, t0, t);
}

AmplitudePair amplitudes(const ModelParams& p, const AmplitudePair& init, double t,
                         Frame frame) {
  if (!std::isfinite(std::abs(init.c1)) || !std::isfinite(std::abs(init.c2))) {
    throw DomainError("initial amplitudes must be finite");
  }
  const DerivedParams d = model::derived_params(p);
  const BasisSolutions s0 = basis_solutions(d, model::x_of_t(p, init.t));
  const Complex det = s0.u2 * s0.v1 - s0.u1 * s0.v2;
  if (det == 0.0 || !std::isfinite(std::abs(det))) {
    throw DegeneracyError("cannot fit constants: basis Wronskian vanishes at t0");
  }
  // (C1, C2)/g at t0 = [[u2, v2], [u1, v1]] (a+, a-)
  const Complex a_plus = (s0.v1 * init.c1 - s0.v2 * init.c2) / det;
  const Complex a_minus = (s0.u2 * init.c2 - s0.u1 * init.c1) / det;
  const BasisSolutions s = basis_solutions(d, model::x_of_t(p, t));
  Complex phase = 1.0;
  if (frame == Frame::original) phase = std::exp(kI * model::omega_integral(p, init.t, t));
  return {phase * (a_plus * s.u2 + a_minus * s.v2), phase * (a_plus * s.u1 + a_minus * s.v1), t};
}

PopulationRecord populations_from(const PropagatorMatrix& u) {
  PopulationRecord r;
  r.p12_reim = u.u12.real() + u.u12.imag();
  r.p22_reim = u.u22.real() + u.u22.imag();
  r.p12_mod2 = std::norm(u.u12);
  r.p22_mod2 = std::norm(u.u22);
  r.norm = r.p12_mod2 + r.p22_mod2;
  return r;
}

PopulationRecord populations(const ModelParams& p, double t0, double t, Frame frame) {
  return populations_from(propagator(p, t0, t, frame));
}

}  // namespace nikitin::analytic
