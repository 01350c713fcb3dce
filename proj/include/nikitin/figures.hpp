#pragma once

// Built-in parameter sets for figures 2-7. Scaled parameters such as A = 2/alpha
// are fixed with alpha = 1 (figures 2-4), A = 1 (figure 5) and epsilon = 1 (figure 6).
//
//   2  populations vs t in [-5, 5], A = 2, alpha = 1, beta = 1.5;
//      panels (Delta, epsilon) = (0.5, 0.5), (-0.5, -0.5), (0, 0.5)
//   3  populations vs Delta in [-1, 1] at t = 5 (from t0 = -5), A = 2, alpha = 1;
//      panels (beta, epsilon) = (1.5, 0.2), (1.5, 1), (1, 1)
//   4  populations vs epsilon in [-2, 2] at t = 5, A = 2, alpha = 1, Delta = 0.5;
//      panels beta = 0.5, 1, 1.5
//   5  spectrum over Delta in [-3, 3] x epsilon in [0, 4], A = 1, alpha = -15, beta = 0, t = 7
//   6  spectrum over Delta in [-3, 3] x beta in [-40, 0], A = 20, alpha = 0.5, epsilon = 1, t = 15
//   7  interferogram over t in [0, 20] x epsilon in [-2, 2] at Delta = 0.2 (panel 0) and
//      the slice epsilon = 0.5 over t with 201 samples (panel 1)

#include <cstddef>
#include <vector>

#include "nikitin/sweep.hpp"

namespace nikitin::figures {

inline constexpr int kFirstFigure = 2;
inline constexpr int kLastFigure = 7;

/// One sweep per panel; throws ConfigError for unknown figure numbers.
std::vector<sweep::SweepConfig> figure_panels(int figure, std::size_t workers = 0);

/// Runs all panels and stacks them under a "panel" column.
sweep::Dataset figure_dataset(int figure, std::size_t workers = 0);

}  // namespace nikitin::figures
