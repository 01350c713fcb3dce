#include "nikitin/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <ctime>
#include <exception>
#include <fstream>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "nikitin/analytic.hpp"
#include "nikitin/errors.hpp"
#include "nikitin/rabi.hpp"
#include "nikitin/spectrum.hpp"
#include "nikitin/specfun.hpp"
#include "nikitin/version.hpp"

namespace nikitin::sweep {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

const AxisSpec kDefaultTimeAxis{"t", 0.0, 20.0, 121};
const AxisSpec kDefaultEpsAxis{"epsilon", -2.0, 2.0, 81};

int classify(const std::exception_ptr& e) {
  try {
    std::rethrow_exception(e);
  } catch (const DomainError&) {
    return kDomain;
  } catch (const AccuracyError&) {
    return kAccuracy;
  } catch (const OverflowError&) {
    return kOverflow;
  } catch (const DegeneracyError&) {
    return kDegeneracy;
  } catch (...) {
    return kOther;
  }
}

std::string timestamp_utc() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool wants_reim(Convention c) { return c != Convention::mod2; }
bool wants_mod2(Convention c) { return c != Convention::reim; }

std::vector<AxisSpec> effective_axes(const SweepConfig& cfg) {
  if (cfg.quantity == Quantity::interferogram && cfg.axes.empty()) {
    return {kDefaultTimeAxis, kDefaultEpsAxis};
  }
  return cfg.axes;
}

std::vector<std::string> value_columns(const SweepConfig& cfg) {
  std::vector<std::string> c;
  switch (cfg.quantity) {
    case Quantity::populations:
      if (wants_reim(cfg.convention)) c.insert(c.end(), {"p12_reim", "p22_reim"});
      if (wants_mod2(cfg.convention)) c.insert(c.end(), {"p12_mod2", "p22_mod2", "norm"});
      if (cfg.oracle) {
        if (wants_reim(cfg.convention)) c.insert(c.end(), {"p12_reim_oracle", "p22_reim_oracle"});
        if (wants_mod2(cfg.convention)) c.insert(c.end(), {"p12_mod2_oracle", "p22_mod2_oracle"});
        c.push_back("deviation");
      }
      break;
    case Quantity::amplitudes:
      c = {"re_c1", "im_c1", "re_c2", "im_c2"};
      if (cfg.oracle) {
        c.insert(c.end(), {"re_c1_oracle", "im_c1_oracle", "re_c2_oracle", "im_c2_oracle", "deviation"});
      }
      break;
    case Quantity::spectrum:
      c = {"reE+", "imE+", "reE-", "imE-", "phi", "z_mag"};
      if (cfg.oracle) c.insert(c.end(), {"ratio_re", "ratio_im"});
      break;
    case Quantity::rabi:
      c = {"P_closed_re", "P_closed_im", "P_modulus", "survival_mod2_oracle", "transition_mod2_oracle"};
      break;
    case Quantity::interferogram:
      c = {"P_closed_re", "P_modulus", "P_mod2_oracle"};
      break;
  }
  return c;
}

struct Point {
  model::ModelParams p;
  double t;
};

// Values for the analytic part of a population/amplitude row, from the |2> column.
void analytic_values(const SweepConfig& cfg, const Point& pt, std::vector<double>& v,
                     Complex& c1, Complex& c2) {
  if (cfg.quantity == Quantity::amplitudes) {
    const AmplitudePair a = analytic::amplitudes(pt.p, {0.0, 1.0, cfg.base.t0}, pt.t);
    c1 = a.c1;
    c2 = a.c2;
    v.insert(v.end(), {c1.real(), c1.imag(), c2.real(), c2.imag()});
    return;
  }
  const PropagatorMatrix u = analytic::propagator(pt.p, cfg.base.t0, pt.t);
  c1 = u.u12;
  c2 = u.u22;
  const analytic::PopulationRecord r = analytic::populations_from(u);
  if (wants_reim(cfg.convention)) v.insert(v.end(), {r.p12_reim, r.p22_reim});
  if (wants_mod2(cfg.convention)) v.insert(v.end(), {r.p12_mod2, r.p22_mod2, r.norm});
}

void oracle_values(const SweepConfig& cfg, Complex c1, Complex c2, Complex o1, Complex o2,
                   std::vector<double>& v) {
  if (cfg.quantity == Quantity::amplitudes) {
    v.insert(v.end(), {o1.real(), o1.imag(), o2.real(), o2.imag()});
  } else {
    if (wants_reim(cfg.convention)) {
      v.insert(v.end(), {o1.real() + o1.imag(), o2.real() + o2.imag()});
    }
    if (wants_mod2(cfg.convention)) v.insert(v.end(), {std::norm(o1), std::norm(o2)});
  }
  v.push_back(std::max(std::abs(c1 - o1), std::abs(c2 - o2)));
}

std::vector<double> pointwise_values(const SweepConfig& cfg, const Point& pt) {
  std::vector<double> v;
  switch (cfg.quantity) {
    case Quantity::spectrum: {
      const spectrum::EnergyDecomposition e = spectrum::energy_decomposition(pt.p, pt.t);
      v = {e.re_plus, e.im_plus, e.re_minus, e.im_minus, e.phi, e.z_mag};
      if (cfg.oracle) {
        Complex ratio(kNaN, kNaN);
        try {
          ratio = spectrum::eigenvalues_closed_form(pt.p, pt.t).first / e.e_plus;
        } catch (const DomainError&) {
        }
        v.insert(v.end(), {ratio.real(), ratio.imag()});
      }
      break;
    }
    case Quantity::rabi: {
      const rabi::RabiParams r{pt.p.epsilon, pt.p.Delta, pt.t};
      const rabi::ClosedFormValue cf = rabi::rabi_survival_closed_form(r);
      const rabi::RabiPopulations o = rabi::rabi_survival_oracle(r);
      v = {cf.real, cf.value.imag(), cf.modulus, o.survival_mod2, o.transition_mod2};
      break;
    }
    default:
      break;
  }
  return v;
}

}  // namespace

Quantity parse_quantity(const std::string& s) {
  if (s == "populations") return Quantity::populations;
  if (s == "amplitudes") return Quantity::amplitudes;
  if (s == "spectrum") return Quantity::spectrum;
  if (s == "rabi") return Quantity::rabi;
  if (s == "interferogram") return Quantity::interferogram;
  throw ConfigError("unknown quantity '" + s + "'");
}

Convention parse_convention(const std::string& s) {
  if (s == "reim") return Convention::reim;
  if (s == "mod2") return Convention::mod2;
  if (s == "both") return Convention::both;
  throw ConfigError("unknown convention '" + s + "'");
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "json") return Format::json;
  throw ConfigError("unknown format '" + s + "'");
}

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::populations: return "populations";
    case Quantity::amplitudes: return "amplitudes";
    case Quantity::spectrum: return "spectrum";
    case Quantity::rabi: return "rabi";
    case Quantity::interferogram: return "interferogram";
  }
  return "?";
}

std::string to_string(Convention c) {
  switch (c) {
    case Convention::reim: return "reim";
    case Convention::mod2: return "mod2";
    case Convention::both: return "both";
  }
  return "?";
}

std::string to_string(Format f) { return f == Format::csv ? "csv" : "json"; }

void SweepConfig::validate() const {
  base.validate();
  integrator.validate();
  const std::vector<AxisSpec> ax = effective_axes(*this);
  if (ax.empty() || ax.size() > 2) throw ConfigError("a sweep needs one or two axes");
  if (ax.size() == 2 && ax[0].name == ax[1].name) throw ConfigError("swept axes must be distinct");
  for (const AxisSpec& a : ax) {
    if (a.samples < 1) throw ConfigError("axis '" + a.name + "' needs at least one sample");
    static const char* names[] = {"A", "alpha", "beta", "epsilon", "Delta", "t"};
    if (std::none_of(std::begin(names), std::end(names), [&](const char* n) { return a.name == n; })) {
      throw ConfigError("unknown axis '" + a.name + "'; expected A, alpha, beta, epsilon, Delta or t");
    }
    if (a.name == "alpha" && (a.lo == 0.0 || a.hi == 0.0 || (a.lo < 0.0) != (a.hi < 0.0))) {
      throw ConfigError("an alpha axis must not reach zero");
    }
  }
  if (quantity == Quantity::rabi || quantity == Quantity::interferogram) {
    for (const AxisSpec& a : ax) {
      if (a.name != "t" && a.name != "epsilon" && a.name != "Delta") {
        throw ConfigError("rabi sweeps run over t, epsilon or Delta only");
      }
    }
  }
  if (quantity == Quantity::interferogram &&
      (ax.size() != 2 || ax[0].name != "t" || ax[1].name != "epsilon")) {
    throw ConfigError("interferogram axes are t (axis1) and epsilon (axis2)");
  }
}

nlohmann::json SweepConfig::to_json() const {
  nlohmann::json axes_json = nlohmann::json::array();
  for (const AxisSpec& a : axes) axes_json.push_back(a.str());
  return {{"model", nlohmann::json::parse(model::to_json(base))},
          {"axes", axes_json},
          {"quantity", to_string(quantity)},
          {"convention", to_string(convention)},
          {"oracle", oracle},
          {"format", to_string(format)},
          {"output", output},
          {"workers", workers},
          {"integrator",
           {{"rel_tol", integrator.rel_tol},
            {"abs_tol", integrator.abs_tol},
            {"max_step", integrator.max_step},
            {"max_steps", integrator.max_steps}}}};
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ConfigError("sweep config must be a JSON object");
  SweepConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "model") {
        c.base = model::from_json(value.dump());
      } else if (key == "axes") {
        for (const auto& a : value) {
          if (a.is_string()) {
            c.axes.push_back(AxisSpec::parse(a.get<std::string>()));
          } else {
            c.axes.push_back({a.at("name").get<std::string>(), a.at("lo").get<double>(),
                              a.at("hi").get<double>(), a.at("samples").get<std::size_t>()});
          }
        }
      } else if (key == "quantity") {
        c.quantity = parse_quantity(value.get<std::string>());
      } else if (key == "convention") {
        c.convention = parse_convention(value.get<std::string>());
      } else if (key == "oracle") {
        c.oracle = value.get<bool>();
      } else if (key == "format") {
        c.format = parse_format(value.get<std::string>());
      } else if (key == "output") {
        c.output = value.get<std::string>();
      } else if (key == "workers") {
        c.workers = value.get<std::size_t>();
      } else if (key == "integrator") {
        c.integrator.rel_tol = value.value("rel_tol", c.integrator.rel_tol);
        c.integrator.abs_tol = value.value("abs_tol", c.integrator.abs_tol);
        c.integrator.max_step = value.value("max_step", c.integrator.max_step);
        c.integrator.max_steps = value.value("max_steps", c.integrator.max_steps);
      } else {
        throw ConfigError("unknown config field '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed sweep config: ") + e.what());
  }
  c.validate();
  return c;
}

std::size_t Dataset::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw std::out_of_range("no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

bool Dataset::same_content(const Dataset& other) const {
  nlohmann::json a = provenance, b = other.provenance;
  a.erase("timestamp");
  b.erase("timestamp");
  if (a != b || columns != other.columns || rows.size() != other.rows.size()) return false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != other.rows[i].size()) return false;
    for (std::size_t k = 0; k < rows[i].size(); ++k) {
      const double x = rows[i][k], y = other.rows[i][k];
      if (std::isnan(x) && std::isnan(y)) continue;
      if (std::memcmp(&x, &y, sizeof x) != 0) return false;
    }
  }
  return true;
}

Dataset run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  const std::vector<AxisSpec> axes = effective_axes(cfg);
  const std::size_t workers = cfg.workers == 0 ? default_workers() : cfg.workers;

  Dataset ds;
  for (const AxisSpec& a : axes) ds.columns.push_back(a.name);
  const std::vector<std::string> values = value_columns(cfg);
  ds.columns.insert(ds.columns.end(), values.begin(), values.end());
  ds.columns.push_back("error_code");
  ds.provenance = {{"version", kVersion},
                   {"timestamp", timestamp_utc()},
                   {"config", cfg.to_json()},
                   {"tolerances",
                    {{"rel_tol", cfg.integrator.rel_tol},
                     {"abs_tol", cfg.integrator.abs_tol},
                     {"specfun_tolerance", specfun::kRegions.tolerance}}}};

  const std::size_t n1 = axes[0].samples;
  const std::size_t n2 = axes.size() > 1 ? axes[1].samples : 1;
  const std::size_t total = n1 * n2;
  const bool is_rabi = cfg.quantity == Quantity::rabi || cfg.quantity == Quantity::interferogram;

  std::vector<Point> points(total);
  for (std::size_t k = 0; k < total; ++k) {
    Point pt{cfg.base, is_rabi ? cfg.base.t1 - cfg.base.t0 : cfg.base.t1};
    spectrum::set_parameter(pt.p, pt.t, axes[0].name, axes[0].value(k / n2));
    if (axes.size() > 1) spectrum::set_parameter(pt.p, pt.t, axes[1].name, axes[1].value(k % n2));
    points[k] = pt;
  }

  const std::size_t width = values.size();
  std::vector<std::vector<double>> vals(total, std::vector<double>(width, kNaN));
  std::vector<int> codes(total, kOk);

  if (cfg.quantity == Quantity::interferogram) {
    const rabi::InterferogramGrid g = rabi::interferogram(cfg.base.Delta, axes[0], axes[1], workers);
    for (std::size_t k = 0; k < total; ++k) {
      const rabi::InterferogramPoint& p = g.grid[k];
      vals[k] = {p.p_closed_re, p.p_modulus, p.p_mod2_oracle};
    }
  } else if (cfg.quantity == Quantity::spectrum || cfg.quantity == Quantity::rabi) {
    parallel_for(total, workers, [&](std::size_t k) {
      try {
        vals[k] = pointwise_values(cfg, points[k]);
      } catch (...) {
        codes[k] = classify(std::current_exception());
      }
    });
  } else {
    // Points differing only in t share one oracle trajectory.
    const int t_axis = axes[0].name == "t" ? 0 : (axes.size() > 1 && axes[1].name == "t" ? 1 : -1);
    std::vector<std::vector<std::size_t>> groups;
    if (cfg.oracle && t_axis >= 0) {
      const std::size_t other = t_axis == 0 ? n2 : n1;
      groups.resize(other);
      for (std::size_t k = 0; k < total; ++k) {
        groups[t_axis == 0 ? k % n2 : k / n2].push_back(k);
      }
    } else {
      groups.resize(total);
      for (std::size_t k = 0; k < total; ++k) groups[k] = {k};
    }
    SweepConfig plain = cfg;
    plain.oracle = false;
    const std::size_t head = value_columns(plain).size();
    parallel_for(groups.size(), workers, [&](std::size_t g) {
      const std::vector<std::size_t>& idx = groups[g];
      std::vector<Complex> c1(idx.size()), c2(idx.size());
      for (std::size_t j = 0; j < idx.size(); ++j) {
        const std::size_t k = idx[j];
        std::vector<double> v;
        v.reserve(width);
        try {
          analytic_values(cfg, points[k], v, c1[j], c2[j]);
          v.resize(width, kNaN);
          vals[k] = std::move(v);
        } catch (...) {
          codes[k] = classify(std::current_exception());
        }
      }
      if (!cfg.oracle) return;
      // forward and backward legs from t0
      for (const bool forward : {true, false}) {
        std::vector<std::size_t> leg;  // positions in idx
        for (std::size_t j = 0; j < idx.size(); ++j) {
          if (forward == (points[idx[j]].t >= cfg.base.t0)) leg.push_back(j);
        }
        if (leg.empty()) continue;
        std::stable_sort(leg.begin(), leg.end(), [&](std::size_t a, std::size_t b) {
          const double ta = points[idx[a]].t, tb = points[idx[b]].t;
          return forward ? ta < tb : ta > tb;
        });
        std::vector<double> ts;
        for (std::size_t j : leg) ts.push_back(points[idx[j]].t);
        try {
          const auto traj = oracle::integrate_tdse(points[idx[leg.front()]].p, {0.0, 1.0, cfg.base.t0},
                                                   ts.back(), cfg.integrator, ts);
          for (std::size_t m = 0; m < leg.size(); ++m) {
            const std::size_t j = leg[m];
            const std::size_t k = idx[j];
            std::vector<double> o;
            oracle_values(cfg, c1[j], c2[j], traj.samples[m].c1, traj.samples[m].c2, o);
            if (codes[k] != kOk) o.back() = kNaN;
            std::copy(o.begin(), o.end(), vals[k].begin() + static_cast<std::ptrdiff_t>(head));
          }
        } catch (...) {
          const int code = classify(std::current_exception());
          for (std::size_t j : leg) {
            if (codes[idx[j]] == kOk) codes[idx[j]] = code;
          }
        }
      }
    });
  }

  ds.rows.resize(total);
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<double>& row = ds.rows[k];
    row.reserve(ds.columns.size());
    row.push_back(axes[0].value(k / n2));
    if (axes.size() > 1) row.push_back(axes[1].value(k % n2));
    vals[k].resize(width, kNaN);
    row.insert(row.end(), vals[k].begin(), vals[k].end());
    row.push_back(static_cast<double>(codes[k]));
  }
  return ds;
}

Dataset stack_panels(const std::vector<Dataset>& panels) {
  Dataset out;
  if (panels.empty()) return out;
  out.columns.push_back("panel");
  out.columns.insert(out.columns.end(), panels[0].columns.begin(), panels[0].columns.end());
  out.provenance = panels[0].provenance;
  nlohmann::json configs = nlohmann::json::array();
  for (std::size_t i = 0; i < panels.size(); ++i) {
    if (panels[i].columns != panels[0].columns) throw ConfigError("panels must share columns");
    configs.push_back(panels[i].provenance.value("config", nlohmann::json()));
    for (const auto& r : panels[i].rows) {
      std::vector<double> row{static_cast<double>(i)};
      row.insert(row.end(), r.begin(), r.end());
      out.rows.push_back(std::move(row));
    }
  }
  out.provenance["config"] = configs;
  return out;
}

void write_csv(const Dataset& ds, std::ostream& os) {
  for (const auto& [key, value] : ds.provenance.items()) {
    os << "# " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  for (std::size_t i = 0; i < ds.columns.size(); ++i) os << (i ? "," : "") << ds.columns[i];
  os << '\n';
  char buf[40];
  for (const auto& row : ds.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", row[i]);
      os << (i ? "," : "") << buf;
    }
    os << '\n';
  }
}

void write_json(const Dataset& ds, std::ostream& os) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : ds.rows) {
    nlohmann::json row = nlohmann::json::array();
    for (double v : r) {
      if (std::isfinite(v)) row.push_back(v);
      else row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  const nlohmann::json j{{"provenance", ds.provenance}, {"columns", ds.columns}, {"rows", rows}};
  os << j.dump() << '\n';
}

void emit(const Dataset& ds, Format format, const std::string& path, std::ostream& fallback) {
  const auto write = [&](std::ostream& os) {
    if (format == Format::csv) write_csv(ds, os);
    else write_json(ds, os);
  };
  if (path.empty() || path == "-") {
    write(fallback);
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open '" + path + "' for writing");
  write(f);
  f.flush();
  if (!f) throw std::runtime_error("write to '" + path + "' failed");
}

Dataset read_json(std::istream& is) {
  const nlohmann::json j = nlohmann::json::parse(is);
  Dataset ds;
  ds.provenance = j.at("provenance");
  ds.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& r : j.at("rows")) {
    std::vector<double> row;
    for (const auto& v : r) row.push_back(v.is_null() ? kNaN : v.get<double>());
    ds.rows.push_back(std::move(row));
  }
  return ds;
}

}  // namespace nikitin::sweep
