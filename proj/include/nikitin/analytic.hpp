#pragma once

// Exact amplitudes of the exponential model in terms of Kummer/Tricomi functions.
//
// With x = e^{alpha t + beta} and z = b x the lower amplitude is
//   C2 = g(x) psi(x),  g(x) = x^lambda e^{-b x / 2} = e^{i int Omega dt} (up to a constant),
// where psi solves x^2 psi'' + x (a - b x) psi' + c^2 psi = 0, and C1 = g (i/c) x psi'.
// Basis (mu = mu2, gamma = 2 mu + a):
//   u1 = x^mu M(mu, gamma, z)      v1 = x^mu U(mu, gamma, z)
//   u2 = (i/c) x d(u1)/dx          v2 = (i/c) x d(v1)/dx
// so that (C1, C2) = g (a+ u2 + a- v2, a+ u1 + a- v1).

#include "nikitin/model.hpp"
#include "nikitin/types.hpp"

namespace nikitin::analytic {

using model::DerivedParams;
using model::ModelParams;

struct BasisSolutions {
  Complex u1, v1, u2, v2;

  /// [[u2, v2], [u1, v1]]: columns map the constants (a+, a-) to (C1, C2)/g.
  Matrix2 fundamental() const { return {u2, v2, u1, v1}; }
};

/// Basis at x > 0. Decoupled case (c = 0): u1 = 1, v1 = 0, u2 = 0, v2 = x^{-2 lambda} e^{b x}.
/// A = 0 (b = 0): Euler solutions x^{mu2}, x^{mu1}.
BasisSolutions basis_solutions(const DerivedParams& d, double x);

/// u2 v1 - u1 v2 at x0 from the Wronskian of {M, U}:
///   (i/c) Gamma(gamma)/Gamma(mu) b^{1-gamma} x0^{2 mu - gamma + 1} e^{b x0}.
Complex transition_parameter_omega12(const DerivedParams& d, double x0);

enum class Frame {
  original,  // amplitudes of the Hamiltonian as written
  gauge,     // dynamical phase e^{i int Omega} removed
};

/// Amplitudes at time t starting from init (taken at init.t).
AmplitudePair amplitudes(const ModelParams& p, const AmplitudePair& init, double t,
                         Frame frame = Frame::original);

/// U(t, t0) built from the ratios omega_kk'(x, x0) / omega_12(x0, x0) with
/// omega_kk'(x, x0) = V_k(x0) U_k'(x) - U_k(x0) V_k'(x).
PropagatorMatrix propagator(const ModelParams& p, double t0, double t,
                            Frame frame = Frame::original);

/// Populations for the initial state |2>.
/// *_reim: Re + Im of the propagator element; *_mod2: squared modulus.
struct PopulationRecord {
  double p12_reim = 0.0;
  double p22_reim = 0.0;
  double p12_mod2 = 0.0;
  double p22_mod2 = 0.0;
  double norm = 0.0;
};

PopulationRecord populations_from(const PropagatorMatrix& u);
PopulationRecord populations(const ModelParams& p, double t0, double t,
                             Frame frame = Frame::original);

}  // namespace nikitin::analytic
