#pragma once

// Parameter sweeps over the model and their serialization.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "nikitin/grid.hpp"
#include "nikitin/model.hpp"
#include "nikitin/oracle.hpp"

namespace nikitin::sweep {

enum class Quantity { populations, amplitudes, spectrum, rabi, interferogram };
enum class Convention { reim, mod2, both };
enum class Format { csv, json };

Quantity parse_quantity(const std::string& s);
Convention parse_convention(const std::string& s);
Format parse_format(const std::string& s);
std::string to_string(Quantity q);
std::string to_string(Convention c);
std::string to_string(Format f);

/// Point-level failure codes written to the error_code column.
enum ErrorCode : int {
  kOk = 0,
  kDomain = 1,
  kAccuracy = 2,
  kOverflow = 3,
  kDegeneracy = 4,
  kOther = 9,
};

/// Propagation starts at base.t0. The evaluation time is the "t" axis when
/// swept, base.t1 otherwise (for rabi/interferogram it is the elapsed time).
struct SweepConfig {
  model::ModelParams base;
  std::vector<AxisSpec> axes;  // 1 or 2 (interferogram: t and epsilon, defaults if empty)
  Quantity quantity = Quantity::populations;
  Convention convention = Convention::both;
  bool oracle = false;
  Format format = Format::csv;
  std::string output;       // empty: stdout
  std::size_t workers = 0;  // 0: default_workers()
  oracle::IntegratorConfig integrator;

  /// Throws ConfigError.
  void validate() const;
  nlohmann::json to_json() const;
  static SweepConfig from_json(const nlohmann::json& j);
};

struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json provenance = nlohmann::json::object();

  std::size_t column(const std::string& name) const;
  /// Columns, rows and provenance equal, ignoring provenance["timestamp"].
  bool same_content(const Dataset& other) const;
};

Dataset run_sweep(const SweepConfig& cfg);

/// Stacks datasets with equal columns under a leading "panel" column.
Dataset stack_panels(const std::vector<Dataset>& panels);

void write_csv(const Dataset& ds, std::ostream& os);
void write_json(const Dataset& ds, std::ostream& os);
/// Writes to `path`, or to `fallback` when path is empty. Throws std::runtime_error
/// naming the path on I/O failure.
void emit(const Dataset& ds, Format format, const std::string& path, std::ostream& fallback);
Dataset read_json(std::istream& is);

}  // namespace nikitin::sweep
