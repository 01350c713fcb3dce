#pragma once

#include <cstddef>
#include <functional>
#include <string>

namespace nikitin {

/// Uniform axis: n samples from lo to hi inclusive (n = 1 gives lo).
struct AxisSpec {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t samples = 1;

  double value(std::size_t i) const;

  /// "name:lo:hi:n"; throws ConfigError.
  static AxisSpec parse(const std::string& text);
  std::string str() const;
};

/// Worker count from NIKITIN_WORKERS, else hardware concurrency (at least 1).
std::size_t default_workers();

/// Calls fn(i) for i in [0, n) on up to `workers` threads. fn must only write
/// to slots owned by i. The first exception thrown is rethrown after all
/// workers stop.
void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn);

}  // namespace nikitin
