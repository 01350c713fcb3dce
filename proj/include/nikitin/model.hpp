#pragma once

// Exponential two-level model
//   H(t) = Omega(t) sz + delta sx,  Omega(t) = (A e^{alpha t + beta} + epsilon)/2,
//   delta = (i Delta + epsilon)/2.
// Component 1 of every amplitude vector is the upper diabatic state |1>.

#include <string>

#include "nikitin/types.hpp"

namespace nikitin::model {

/// exp() arguments beyond this magnitude are rejected with OverflowError.
inline constexpr double kMaxExponent = 700.0;

struct ModelParams {
  double A = 0.0;
  double alpha = 1.0;
  double beta = 0.0;
  double epsilon = 0.0;
  double Delta = 0.0;
  double t0 = 0.0;
  double t1 = 1.0;

  /// Throws ConfigError unless alpha != 0, t0 < t1 and every field is finite.
  void validate() const;
};

/// Parameters of the confluent hypergeometric reduction.
/// mu1/mu2 are the minus/plus roots of mu^2 - (1-a) mu + c^2 = 0.
/// gamma = 2 mu2 + a belongs to the root used by the basis (mu2).
struct DerivedParams {
  Complex a, b, c;
  Complex mu1, mu2;
  Complex gamma;
  Complex lambda;
};

double exponent(const ModelParams& p, double t);
double detuning(const ModelParams& p, double t);
Complex coupling(const ModelParams& p);
Matrix2 hamiltonian(const ModelParams& p, double t);

double x_of_t(const ModelParams& p, double t);
double t_of_x(const ModelParams& p, double x);

DerivedParams derived_params(const ModelParams& p);

/// Integral of detuning over [ta, tb].
double omega_integral(const ModelParams& p, double ta, double tb);

std::string to_json(const ModelParams& p);
ModelParams from_json(const std::string& text);

}  // namespace nikitin::model
