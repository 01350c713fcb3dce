#include "nikitin/model.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "nikitin/errors.hpp"

namespace nikitin::model {

namespace {

void check_exponent(double e) {
  if (!(std::abs(e) <= kMaxExponent)) {
    std::ostringstream os;
    os << "exponent alpha*t+beta = " << e << " outside [-" << kMaxExponent << ", "
       << kMaxExponent << "]";
    throw OverflowError(os.str());
  }
}

}  // namespace

void ModelParams::validate() const {
  for (double v : {A, alpha, beta, epsilon, Delta, t0, t1}) {
    if (!std::isfinite(v)) throw ConfigError("model parameters must be finite");
  }
  if (alpha == 0.0) throw ConfigError("alpha must be nonzero");
  if (!(t0 < t1)) throw ConfigError("t0 must be smaller than t1");
}

double exponent(const ModelParams& p, double t) {
  const double e = p.alpha * t + p.beta;
  check_exponent(e);
  return e;
}

double detuning(const ModelParams& p, double t) {
  return 0.5 * (p.A * std::exp(exponent(p, t)) + p.epsilon);
}

Complex coupling(const ModelParams& p) { return 0.5 * Complex(p.epsilon, p.Delta); }

Matrix2 hamiltonian(const ModelParams& p, double t) {
  const double w = detuning(p, t);
  const Complex d = coupling(p);
  return {w, d, d, -w};
}

double x_of_t(const ModelParams& p, double t) { return std::exp(exponent(p, t)); }

double t_of_x(const ModelParams& p, double x) {
  if (!(x > 0.0)) {
    std::ostringstream os;
    os << "t_of_x requires x > 0, got " << x;
    throw DomainError(os.str());
  }
  if (p.alpha == 0.0) throw DomainError("t_of_x requires alpha != 0");
  return (std::log(x) - p.beta) / p.alpha;
}

DerivedParams derived_params(const ModelParams& p) {
  if (p.alpha == 0.0) throw DomainError("derived_params requires alpha != 0");
  DerivedParams d;
  d.a = 1.0 + kI * p.epsilon / p.alpha;
  d.b = -kI * p.A / p.alpha;
  d.c = Complex(p.epsilon, p.Delta) / (2.0 * p.alpha);
  d.lambda = kI * p.epsilon / (2.0 * p.alpha);
  const Complex one_minus_a = 1.0 - d.a;
  const Complex s = std::sqrt(one_minus_a * one_minus_a - 4.0 * d.c * d.c);
  d.mu1 = 0.5 * (one_minus_a - s);
  d.mu2 = 0.5 * (one_minus_a + s);
  d.gamma = 2.0 * d.mu2 + d.a;
  return d;
}

double omega_integral(const ModelParams& p, double ta, double tb) {
  const double ea = exponent(p, ta);
  const double eb = exponent(p, tb);
  // e^eb - e^ea = e^ea * expm1(eb - ea), well conditioned for tb close to ta
  const double diff = std::exp(ea) * std::expm1(eb - ea);
  return 0.5 * p.A / p.alpha * diff + 0.5 * p.epsilon * (tb - ta);
}

std::string to_json(const ModelParams& p) {
  nlohmann::json j{{"A", p.A},       {"alpha", p.alpha}, {"beta", p.beta}, {"epsilon", p.epsilon},
                   {"Delta", p.Delta}, {"t0", p.t0},       {"t1", p.t1}};
  return j.dump();
}

ModelParams from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed model JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("model JSON must be an object");
  ModelParams p;
  const auto read = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    if (!j[key].is_number()) throw ConfigError(std::string("field '") + key + "' must be a number");
    out = j[key].get<double>();
  };
  for (const auto& [key, value] : j.items()) {
    static const char* known[] = {"A", "alpha", "beta", "epsilon", "Delta", "t0", "t1"};
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw ConfigError("unknown model field '" + key + "'");
    (void)value;
  }
  read("A", p.A);
  read("alpha", p.alpha);
  read("beta", p.beta);
  read("epsilon", p.epsilon);
  read("Delta", p.Delta);
  read("t0", p.t0);
  read("t1", p.t1);
  p.validate();
  return p;
}

}  // namespace nikitin::model
