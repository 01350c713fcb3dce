#include <doctest.h>

#include <cmath>

#include "nikitin/errors.hpp"
#include "nikitin/oracle.hpp"

using namespace nikitin;
using model::ModelParams;
using oracle::IntegratorConfig;

namespace {

const ModelParams kFig2{2.0, 1.0, 1.5, 0.5, 0.5, -5.0, 5.0};

IntegratorConfig tight() {
  IntegratorConfig c;
  c.rel_tol = 1e-12;
  c.abs_tol = 1e-14;
  return c;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("pure phase evolution") {
    const IntegratorConfig cfg;
    const auto r = oracle::integrate_tdse({2.0, 1.0, 1.5, 0.0, 0.0, -5, 3}, {1.0, 0.0, -5.0}, cfg);
    CHECK(std::abs(std::abs(r.final.c1) - 1.0) < cfg.rel_tol);
    CHECK(std::abs(r.final.c2) == 0.0);
    CHECK(r.final.t == 3.0);
  }

  TEST_CASE("constant Hamiltonian matches the matrix exponential") {
    const ModelParams p{0.0, 1.0, 0.0, 0.8, 0.3, 0.0, 6.0};
    const auto r = oracle::integrate_tdse(p, {0.6, {0.0, 0.8}, 0.0}, tight());
    const AmplitudePair want = oracle::constant_h_propagator(model::hamiltonian(p, 0.0), 6.0).apply({0.6, {0.0, 0.8}, 0.0});
    CHECK(std::abs(r.final.c1 - want.c1) < 1e-10);
    CHECK(std::abs(r.final.c2 - want.c2) < 1e-10);
  }

  TEST_CASE("halving the tolerance moves the answer by less than the coarse tolerance") {
    const ModelParams p{2.0, 1.0, 0.0, 0.5, 0.3, -3.0, 1.0};
    IntegratorConfig coarse;
    coarse.rel_tol = 1e-8;
    coarse.abs_tol = 1e-10;
    IntegratorConfig fine = coarse;
    fine.rel_tol /= 2;
    fine.abs_tol /= 2;
    const auto a = oracle::integrate_tdse(p, {0.0, 1.0, -3.0}, coarse).final;
    const auto b = oracle::integrate_tdse(p, {0.0, 1.0, -3.0}, fine).final;
    CHECK(std::max(std::abs(a.c1 - b.c1), std::abs(a.c2 - b.c2)) < coarse.rel_tol);
  }

  TEST_CASE("norm conservation, trace and counters for a Hermitian Hamiltonian") {
    IntegratorConfig cfg;
    cfg.rel_tol = 1e-9;
    cfg.abs_tol = 1e-12;
    const auto r = oracle::integrate_tdse({2.0, 1.0, 1.5, 0.7, 0.0, -5, 5}, {0.0, 1.0, -5.0}, cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < r.norm_trace.size(); ++i) {
      worst = std::max(worst, std::abs(r.norm_trace[i].second - 1.0));
      if (i > 0) CHECK(r.norm_trace[i].first > r.norm_trace[i - 1].first);
    }
    CHECK(worst < 10 * cfg.rel_tol);
    CHECK(r.steps_taken == r.accepted + r.rejected);
    CHECK(r.steps_taken <= cfg.max_steps);
    CHECK(r.accepted + 1 == static_cast<long>(r.norm_trace.size()));
  }

  TEST_CASE("linearity") {
    const IntegratorConfig cfg;
    const AmplitudePair a{{0.3, 0.1}, {-0.2, 0.5}, -5.0}, b{{0.7, -0.4}, {0.1, 0.2}, -5.0};
    const Complex ka(1.5, -0.5), kb(-0.25, 2.0);
    const AmplitudePair mix{ka * a.c1 + kb * b.c1, ka * a.c2 + kb * b.c2, -5.0};
    const auto ra = oracle::integrate_tdse(kFig2, a, 2.0, cfg).final;
    const auto rb = oracle::integrate_tdse(kFig2, b, 2.0, cfg).final;
    const auto rm = oracle::integrate_tdse(kFig2, mix, 2.0, cfg).final;
    const double scale = std::max(std::abs(rm.c1), std::abs(rm.c2));
    CHECK(std::abs(rm.c1 - (ka * ra.c1 + kb * rb.c1)) < 10 * cfg.rel_tol * scale);
    CHECK(std::abs(rm.c2 - (ka * ra.c2 + kb * rb.c2)) < 10 * cfg.rel_tol * scale);
  }

  TEST_CASE("time reversal for a Hermitian Hamiltonian") {
    const IntegratorConfig cfg;
    const ModelParams p{2.0, 1.0, 1.5, -0.4, 0.0, -5, 2};
    const auto fwd = oracle::integrate_tdse(p, {0.0, 1.0, -5.0}, 2.0, cfg).final;
    const auto back = oracle::integrate_tdse(p, fwd, -5.0, cfg).final;
    CHECK(std::abs(back.c1) < 100 * cfg.rel_tol);
    CHECK(std::abs(back.c2 - 1.0) < 100 * cfg.rel_tol);
  }

  TEST_CASE("eighth-order convergence with fixed steps") {
    const ModelParams p{1.0, 1.0, 0.0, 0.5, 0.3, -1.0, 1.0};
    const AmplitudePair exact = oracle::integrate_tdse(p, {0.0, 1.0, -1.0}, 1.0, tight()).final;
    double prev = 0.0;
    for (double h : {0.5, 0.25, 0.125}) {
      IntegratorConfig cfg;
      cfg.fixed_step = h;
      const auto r = oracle::integrate_tdse(p, {0.0, 1.0, -1.0}, 1.0, cfg).final;
      const double err = std::max(std::abs(r.c1 - exact.c1), std::abs(r.c2 - exact.c2));
      if (prev > 0.0) {
        const double order = std::log2(prev / err);
        CAPTURE(order);
        CHECK(order > 7.0);
        CHECK(order < 9.0);
      }
      prev = err;
    }
  }

  TEST_CASE("step budget exhaustion") {
    IntegratorConfig cfg;
    cfg.max_steps = 10;
    CHECK_THROWS_AS(oracle::integrate_tdse(kFig2, {0.0, 1.0, -5.0}, 5.0, cfg), AccuracyError);
    cfg.rel_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
  }

  TEST_CASE("bitwise determinism") {
    const IntegratorConfig cfg;
    const auto a = oracle::integrate_tdse(kFig2, {0.0, 1.0, -5.0}, cfg).final;
    const auto b = oracle::integrate_tdse(kFig2, {0.0, 1.0, -5.0}, cfg).final;
    CHECK(a.c1 == b.c1);
    CHECK(a.c2 == b.c2);
  }

  TEST_CASE("dense samples agree with separate integrations") {
    IntegratorConfig cfg = tight();
    const std::vector<double> ts{-4.0, -1.0, 0.5, 3.0};
    const auto dense = oracle::integrate_tdse(kFig2, {0.0, 1.0, -5.0}, 3.0, cfg, ts);
    REQUIRE(dense.samples.size() == ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const auto single = oracle::integrate_tdse(kFig2, {0.0, 1.0, -5.0}, ts[i], cfg).final;
      CHECK(std::abs(dense.samples[i].c1 - single.c1) < 1e-9);
      CHECK(std::abs(dense.samples[i].c2 - single.c2) < 1e-9);
    }
  }

  TEST_CASE("constant-H propagator") {
    const Matrix2 h{0.7, Complex(0.2, 0.3), Complex(0.2, 0.3), -0.7};
    CHECK((oracle::constant_h_propagator(h, 0.0).matrix() - Matrix2::identity()).max_abs() == 0.0);
    const PropagatorMatrix d = oracle::constant_h_propagator({1.3, 0.0, 0.0, -1.3}, 2.0);
    CHECK(std::abs(d.u11 - std::exp(Complex(0.0, -2.6))) < 1e-15);
    CHECK(std::abs(d.u22 - std::exp(Complex(0.0, 2.6))) < 1e-15);
    CHECK(std::abs(d.u12) < 1e-16);
    // exceptional point: w^2 + delta^2 = 0 with delta = i w
    const Matrix2 ep{0.5, Complex(0.0, 0.5), Complex(0.0, 0.5), -0.5};
    const Matrix2 u = oracle::constant_h_propagator(ep, 3.0).matrix();
    const Matrix2 want = Matrix2::identity() - Complex(0.0, 3.0) * ep;
    CHECK((u - want).max_abs() < 1e-15);
  }

  TEST_CASE("transformed equation") {
    IntegratorConfig cfg = tight();
    const ModelParams decoupled{2.0, 1.0, 1.5, 0.0, 0.0, -5, 5};
    CHECK(oracle::transformed_ode_check(decoupled, 0.05, 20.0, cfg) < 1e-9);
    CHECK(oracle::transformed_ode_check(kFig2, model::x_of_t(kFig2, -5.0), model::x_of_t(kFig2, 2.0), cfg) < 1e-7);
    const ModelParams fig5{1.0, -15.0, 0.0, 1.0, 0.8, -0.2, 0.2};
    CHECK(oracle::transformed_ode_check(fig5, model::x_of_t(fig5, -0.2), model::x_of_t(fig5, 0.2), cfg) < 1e-7);
    CHECK_THROWS_AS(oracle::transformed_ode_check(kFig2, -1.0, 2.0, cfg), DomainError);
  }
}
