#include "nikitin/figures.hpp"

#include <string>

#include "nikitin/errors.hpp"

namespace nikitin::figures {

namespace {

sweep::SweepConfig base_config(sweep::Quantity q, std::size_t workers) {
  sweep::SweepConfig c;
  c.quantity = q;
  c.workers = workers;
  c.convention = sweep::Convention::both;
  return c;
}

model::ModelParams params(double A, double alpha, double beta, double epsilon, double Delta,
                          double t0, double t1) {
  return {A, alpha, beta, epsilon, Delta, t0, t1};
}

}  // namespace

std::vector<sweep::SweepConfig> figure_panels(int figure, std::size_t workers) {
  std::vector<sweep::SweepConfig> panels;
  switch (figure) {
    case 2:
      for (auto [Delta, eps] : {std::pair{0.5, 0.5}, std::pair{-0.5, -0.5}, std::pair{0.0, 0.5}}) {
        auto c = base_config(sweep::Quantity::populations, workers);
        c.base = params(2.0, 1.0, 1.5, eps, Delta, -5.0, 5.0);
        c.axes = {{"t", -5.0, 5.0, 201}};
        c.oracle = true;
        panels.push_back(c);
      }
      break;
    case 3:
      for (auto [beta, eps] : {std::pair{1.5, 0.2}, std::pair{1.5, 1.0}, std::pair{1.0, 1.0}}) {
        auto c = base_config(sweep::Quantity::populations, workers);
        c.base = params(2.0, 1.0, beta, eps, 0.0, -5.0, 5.0);
        c.axes = {{"Delta", -1.0, 1.0, 201}};
        c.oracle = true;
        panels.push_back(c);
      }
      break;
    case 4:
      for (double beta : {0.5, 1.0, 1.5}) {
        auto c = base_config(sweep::Quantity::populations, workers);
        c.base = params(2.0, 1.0, beta, 0.0, 0.5, -5.0, 5.0);
        c.axes = {{"epsilon", -2.0, 2.0, 201}};
        c.oracle = true;
        panels.push_back(c);
      }
      break;
    case 5: {
      auto c = base_config(sweep::Quantity::spectrum, workers);
      c.base = params(1.0, -15.0, 0.0, 0.0, 0.0, 0.0, 7.0);
      c.axes = {{"Delta", -3.0, 3.0, 121}, {"epsilon", 0.0, 4.0, 81}};
      c.oracle = true;
      panels.push_back(c);
      break;
    }
    case 6: {
      auto c = base_config(sweep::Quantity::spectrum, workers);
      c.base = params(20.0, 0.5, 0.0, 1.0, 0.0, 0.0, 15.0);
      c.axes = {{"Delta", -3.0, 3.0, 121}, {"beta", -40.0, 0.0, 81}};
      c.oracle = true;
      panels.push_back(c);
      break;
    }
    case 7: {
      auto c = base_config(sweep::Quantity::interferogram, workers);
      c.base = params(0.0, 1.0, 0.0, 0.0, 0.2, 0.0, 20.0);
      c.axes = {{"t", 0.0, 20.0, 121}, {"epsilon", -2.0, 2.0, 81}};
      c.oracle = true;
      panels.push_back(c);
      c.axes = {{"t", 0.0, 20.0, 201}, {"epsilon", 0.5, 0.5, 1}};
      panels.push_back(c);
      break;
    }
    default:
      throw ConfigError("no built-in data for figure " + std::to_string(figure) + "; expected 2..7");
  }
  return panels;
}

sweep::Dataset figure_dataset(int figure, std::size_t workers) {
  std::vector<sweep::Dataset> parts;
  for (const auto& c : figure_panels(figure, workers)) parts.push_back(sweep::run_sweep(c));
  sweep::Dataset ds = sweep::stack_panels(parts);
  ds.provenance["figure"] = figure;
  return ds;
}

}  // namespace nikitin::figures
