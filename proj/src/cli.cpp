#include "nikitin/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nikitin/errors.hpp"
#include "nikitin/figures.hpp"
#include "nikitin/selftest.hpp"
#include "nikitin/sweep.hpp"
#include "nikitin/version.hpp"

namespace nikitin {

namespace {

struct SweepFlags {
  std::optional<double> A, alpha, beta, epsilon, Delta, t0, t1, rtol, atol;
  std::optional<std::string> axis1, axis2, convention, format, config;
  std::string output;
  bool oracle = false;
  std::size_t workers = 0;
};

void add_sweep_options(CLI::App* cmd, SweepFlags& f) {
  cmd->add_option("--A", f.A, "Amplitude of the exponential detuning");
  cmd->add_option("--alpha", f.alpha, "Sweep velocity (nonzero)");
  cmd->add_option("--beta", f.beta, "Phase");
  cmd->add_option("--epsilon", f.epsilon, "Shift");
  cmd->add_option("--Delta", f.Delta, "Imaginary coupling");
  cmd->add_option("--t0", f.t0, "Start time");
  cmd->add_option("--t1", f.t1, "End / evaluation time");
  cmd->add_option("--axis1", f.axis1, "Outer axis name:lo:hi:n");
  cmd->add_option("--axis2", f.axis2, "Inner axis name:lo:hi:n");
  cmd->add_flag("--oracle", f.oracle, "Add numerical reference columns");
  cmd->add_option("--convention", f.convention, "reim | mod2 | both");
  cmd->add_option("--format", f.format, "csv | json");
  cmd->add_option("-o,--output", f.output, "Output path (default stdout)");
  cmd->add_option("--workers", f.workers, "Worker threads (default NIKITIN_WORKERS or core count)");
  cmd->add_option("--config", f.config, "Sweep configuration JSON file");
  cmd->add_option("--rtol", f.rtol, "Integrator relative tolerance");
  cmd->add_option("--atol", f.atol, "Integrator absolute tolerance");
}

sweep::SweepConfig build_config(sweep::Quantity q, const SweepFlags& f) {
  sweep::SweepConfig c;
  if (f.config) {
    std::ifstream in(*f.config);
    if (!in) throw ConfigError("cannot read config '" + *f.config + "'");
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError("malformed config '" + *f.config + "': " + e.what());
    }
    c = sweep::SweepConfig::from_json(j);
  }
  c.quantity = q;
  if (f.A) c.base.A = *f.A;
  if (f.alpha) c.base.alpha = *f.alpha;
  if (f.beta) c.base.beta = *f.beta;
  if (f.epsilon) c.base.epsilon = *f.epsilon;
  if (f.Delta) c.base.Delta = *f.Delta;
  if (f.t0) c.base.t0 = *f.t0;
  if (f.t1) c.base.t1 = *f.t1;
  if (f.rtol) c.integrator.rel_tol = *f.rtol;
  if (f.atol) c.integrator.abs_tol = *f.atol;
  if (f.oracle) c.oracle = true;
  if (f.convention) c.convention = sweep::parse_convention(*f.convention);
  if (f.format) c.format = sweep::parse_format(*f.format);
  if (!f.output.empty()) c.output = f.output;
  if (f.workers) c.workers = f.workers;
  if (f.axis1) {
    c.axes.clear();
    c.axes.push_back(AxisSpec::parse(*f.axis1));
    if (f.axis2) c.axes.push_back(AxisSpec::parse(*f.axis2));
  } else if (f.axis2) {
    throw ConfigError("--axis2 requires --axis1");
  }
  if (c.axes.empty() && q != sweep::Quantity::interferogram) {
    const bool elapsed = q == sweep::Quantity::rabi;
    c.axes.push_back({"t", elapsed ? 0.0 : c.base.t0, elapsed ? c.base.t1 - c.base.t0 : c.base.t1, 201});
  }
  c.validate();
  return c;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exponential two-level model: exact amplitudes, spectra and reference integration"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  struct Command {
    const char* name;
    sweep::Quantity quantity;
    const char* help;
  };
  const Command commands[] = {
      {"populations", sweep::Quantity::populations, "Survival/transition populations from |2>"},
      {"amplitudes", sweep::Quantity::amplitudes, "Amplitudes (C1, C2) from |2>"},
      {"spectrum", sweep::Quantity::spectrum, "Instantaneous complex eigenvalues"},
      {"rabi", sweep::Quantity::rabi, "Constant-Hamiltonian limit started in |1>"},
      {"interferogram", sweep::Quantity::interferogram, "Rabi population over (t, epsilon)"},
  };
  std::vector<SweepFlags> flags(std::size(commands));
  std::vector<CLI::App*> sweep_cmds;
  for (std::size_t i = 0; i < std::size(commands); ++i) {
    CLI::App* cmd = app.add_subcommand(commands[i].name, commands[i].help);
    add_sweep_options(cmd, flags[i]);
    sweep_cmds.push_back(cmd);
  }

  CLI::App* selftest_cmd = app.add_subcommand("selftest", "Identity checks and oracle smoke test");

  int figure = 0;
  std::size_t figure_workers = 0;
  std::string figure_format = "csv";
  std::string figure_output;
  CLI::App* figure_cmd = app.add_subcommand("figure", "Regenerate the data behind a figure");
  figure_cmd->add_option("n", figure, "Figure number (2-7)")->required()->check(CLI::Range(2, 7));
  figure_cmd->add_option("--workers", figure_workers, "Worker threads");
  figure_cmd->add_option("--format", figure_format, "csv | json");
  figure_cmd->add_option("-o,--output", figure_output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (selftest_cmd->parsed()) return selftest(out) ? 0 : 1;
    if (figure_cmd->parsed()) {
      const sweep::Format fmt = sweep::parse_format(figure_format);
      sweep::emit(figures::figure_dataset(figure, figure_workers), fmt, figure_output, out);
      return 0;
    }
    for (std::size_t i = 0; i < sweep_cmds.size(); ++i) {
      if (!sweep_cmds[i]->parsed()) continue;
      const sweep::SweepConfig c = build_config(commands[i].quantity, flags[i]);
      sweep::emit(sweep::run_sweep(c), c.format, c.output, out);
      return 0;
    }
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace nikitin
