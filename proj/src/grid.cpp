#include "nikitin/grid.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "nikitin/errors.hpp"

namespace nikitin {

double AxisSpec::value(std::size_t i) const {
  if (samples <= 1) return lo;
  if (i + 1 == samples) return hi;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
}

AxisSpec AxisSpec::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 4 || parts[0].empty()) {
    throw ConfigError("axis must look like name:lo:hi:n, got '" + text + "'");
  }
  AxisSpec a;
  a.name = parts[0];
  try {
    std::size_t pos = 0;
    a.lo = std::stod(parts[1], &pos);
    if (pos != parts[1].size()) throw std::invalid_argument(parts[1]);
    a.hi = std::stod(parts[2], &pos);
    if (pos != parts[2].size()) throw std::invalid_argument(parts[2]);
    const long n = std::stol(parts[3], &pos);
    if (pos != parts[3].size() || n < 1) throw std::invalid_argument(parts[3]);
    a.samples = static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw ConfigError("bad number in axis '" + text + "'");
  }
  if (!std::isfinite(a.lo) || !std::isfinite(a.hi)) throw ConfigError("axis bounds must be finite");
  return a;
}

std::string AxisSpec::str() const {
  std::ostringstream os;
  os.precision(17);
  os << name << ':' << lo << ':' << hi << ':' << samples;
  return os.str();
}

std::size_t default_workers() {
  if (const char* env = std::getenv("NIKITIN_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<std::size_t>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t n, std::size_t workers, const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  const auto run = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = n;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t count = std::min(workers, n);
  for (std::size_t w = 1; w < count; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace nikitin
