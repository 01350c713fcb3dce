#include "nikitin/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <string>

#include "nikitin/analytic.hpp"
#include "nikitin/oracle.hpp"
#include "nikitin/specfun.hpp"

namespace nikitin {

namespace {

using specfun::HypergeometricParams;

double rel(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

bool selftest(std::ostream& os) {
  bool all = true;
  const auto check = [&](const std::string& name, double tol, const std::function<double()>& f) {
    double v;
    bool ok;
    try {
      v = f();
      ok = v < tol;
    } catch (const std::exception& e) {
      os << "FAIL " << name << " threw: " << e.what() << '\n';
      all = false;
      return;
    }
    os << (ok ? "PASS " : "FAIL ") << name << " value=" << v << " tol=" << tol << '\n';
    all = all && ok;
  };

  check("ln_gamma(5) = ln 24", 1e-13, [] { return std::abs(specfun::ln_gamma(5.0) - std::log(24.0)); });
  check("M(1,2,1) = e - 1", 1e-12, [] { return rel(specfun::kummer_m({1.0, 2.0, 1.0}), std::exp(1.0) - 1.0); });
  check("U(1,2,2) = 1/2", 1e-12, [] { return rel(specfun::tricomi_u({1.0, 2.0, 2.0}), 0.5); });
  check("U(1,1,1) = e E1(1)", 1e-12,
        [] { return rel(specfun::tricomi_u({1.0, 1.0, 1.0}), 0.59634736232319407434); });
  check("Wronskian residual", 1e-10, [] {
    double worst = 0.0;
    for (const HypergeometricParams& p :
         {HypergeometricParams{1.0, 2.0, 1.0}, HypergeometricParams{0.5, 1.5, 3.0},
          HypergeometricParams{{0.3, 0.2}, 1.1, {0.5, -0.4}}, HypergeometricParams{{0.7, -0.4}, {1.6, 0.3}, {0.0, -30.0}}}) {
      worst = std::max(worst, specfun::wronskian_residual(p));
    }
    return worst;
  });
  check("dM/dz vs central difference", 1e-6, [] {
    const Complex mu(0.3, 0.2), z(0.5, 0.0);
    const double h = 1e-6;
    const Complex fd = (specfun::kummer_m({mu, 1.1, z + h}) - specfun::kummer_m({mu, 1.1, z - h})) / (2.0 * h);
    return rel(specfun::kummer_m_derivative({mu, 1.1, z}), fd);
  });
  check("analytic vs oracle propagator", 1e-6, [] {
    const model::ModelParams p{2.0, 1.0, 1.5, 0.5, 0.5, -5.0, 5.0};
    oracle::IntegratorConfig cfg;
    cfg.rel_tol = 1e-11;
    cfg.abs_tol = 1e-13;
    double worst = 0.0;
    for (double t : {-2.0, 0.0, 2.0}) {
      const Matrix2 a = analytic::propagator(p, -5.0, t).matrix();
      const Matrix2 n = oracle::numerical_propagator(p, -5.0, t, cfg).matrix();
      worst = std::max(worst, (a - n).max_abs());
    }
    return worst;
  });
  check("unitarity at Delta = 0", 1e-8, [] {
    const model::ModelParams p{2.0, 1.0, 1.5, 0.7, 0.0, -5.0, 5.0};
    const Matrix2 u = analytic::propagator(p, -5.0, 3.0).matrix();
    return (u * u.adjoint() - Matrix2::identity()).max_abs();
  });
  os << (all ? "selftest passed" : "selftest FAILED") << '\n';
  return all;
}

}  // namespace nikitin
