#pragma once

// Confluent hypergeometric functions of complex parameters and argument.
//
// Evaluation regions (all constants live in `Regions`):
//
//   Kummer M(mu, gamma, z)
//     * z == 0, or mu a non-positive integer: exact (terminating) series.
//     * Re z < 0: Kummer transformation M(mu,gamma,z) = e^z M(gamma-mu,gamma,-z),
//       so the remaining regions only see Re z >= 0.
//     * |z| <= series_radius: direct power series.
//     * both Tricomi functions in the connection formula asymptotic at |z|:
//       M from two asymptotic U values (large-|z| connection).
//     * otherwise: start from the series at radius series_radius on the ray
//       through z and continue outward by local Taylor re-expansion of
//       Kummer's equation (steps <= taylor_step and <= step_fraction * |z_c|).
//
//   Tricomi U(mu, gamma, z), principal branch, cut along z < 0
//     * mu or mu-gamma+1 a non-positive integer: exact polynomial forms.
//     * asymptotic series converged at z (|z| >~ 40 for moderate parameters).
//     * |z| <= series_radius and gamma at least integer_gamma_margin away from
//       an integer: connection formula over two Kummer series.
//     * otherwise: asymptotic value at radius R >= asymptotic_radius on the ray
//       with angle clamp(arg z, -pi/2, pi/2), continued inward radially and then
//       along the circle |z| = const to arg z. The path never crosses the cut
//       and needs no special treatment for integer gamma.
//
// Wronskian sign: W{M, U}(z) = M U' - U M' = -Gamma(gamma)/Gamma(mu) z^-gamma e^z.

#include "nikitin/types.hpp"

namespace nikitin::specfun {

struct HypergeometricParams {
  Complex mu;
  Complex gamma;
  Complex z;
};

struct Regions {
  double series_radius = 2.0;
  double taylor_step = 1.0;
  double step_fraction = 0.25;
  double asymptotic_radius = 40.0;
  double max_asymptotic_radius = 1.0e5;
  double integer_gamma_margin = 0.1;
  double tolerance = 1.0e-16;
  int max_terms = 800;
};

inline constexpr Regions kRegions{};

/// Sign relating M U' - U M' to Gamma(gamma)/Gamma(mu) z^-gamma e^z.
inline constexpr double kWronskianSign = -1.0;

struct ValueAndDerivative {
  Complex value;
  Complex derivative;  // d/dz
};

struct TricomiValue {
  Complex value;
  // z lay on the negative real axis; the value is the limit from Im z > 0.
  bool on_branch_cut = false;
};

/// log Gamma(z), analytic continuation from the positive real axis with the
/// cut along z <= 0 (same convention as scipy.special.loggamma).
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// 1/Gamma(z); entire, exactly zero at the poles of Gamma.
Complex reciprocal_gamma(Complex z);

Complex kummer_m(const HypergeometricParams& p);
ValueAndDerivative kummer_m_with_derivative(const HypergeometricParams& p);
/// (mu/gamma) M(mu+1, gamma+1, z)
Complex kummer_m_derivative(const HypergeometricParams& p);

Complex tricomi_u(const HypergeometricParams& p);
TricomiValue tricomi_u_eval(const HypergeometricParams& p);
ValueAndDerivative tricomi_u_with_derivative(const HypergeometricParams& p);
/// -mu U(mu+1, gamma+1, z)
Complex tricomi_u_derivative(const HypergeometricParams& p);

/// kWronskianSign * Gamma(gamma)/Gamma(mu) z^-gamma e^z
Complex wronskian_closed_form(const HypergeometricParams& p);

/// |W_computed - W_closed| / |W_closed| with W_computed = M U' - U M'.
/// For Re z << 0 the Wronskian is exponentially smaller than either product,
/// so the residual is only meaningful for Re z >~ -10 in double precision.
double wronskian_residual(const HypergeometricParams& p);

}  // namespace nikitin::specfun
