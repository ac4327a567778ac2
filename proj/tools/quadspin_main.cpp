// Command-line front end: single-point evaluation, parameter sweeps,
// orientation maximization, critical-temperature search and the
// magnetization witness fit.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quadspin/analysis.hpp"
#include "quadspin/linalg.hpp"
#include "quadspin/material.hpp"
#include "quadspin/sweep_io.hpp"
#include "quadspin/thermal.hpp"
#include "quadspin/version.hpp"

namespace {

using namespace quadspin;

double to_radians(double value, bool degrees) {
  return degrees ? value * std::numbers::pi / 180.0 : value;
}

// ----------------------------------------------------------- config file ---
// Flat "key = value" files with '#' comments. Config entries become flags
// injected right after the subcommand name; keys that already appear on the
// command line are dropped, so explicit flags always win.

std::string trim(const std::string& text) {
  const auto begin = text.find_first_not_of(" \t\r");
  if (begin == std::string::npos) {
    return "";
  }
  const auto end = text.find_last_not_of(" \t\r");
  return text.substr(begin, end - begin + 1);
}

std::vector<std::string> read_config_tokens(const std::string& path,
                                            const std::vector<std::string>& cli_tokens) {
  std::ifstream in(path);
  if (!in) {
    throw OutOfRange("cannot read config file '" + path + "'");
  }
  const auto on_command_line = [&cli_tokens](const std::string& flag) {
    for (const std::string& token : cli_tokens) {
      if (token == flag) {
        return true;
      }
    }
    return false;
  };

  std::vector<std::string> tokens;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto comment = line.find('#');
    if (comment != std::string::npos) {
      line.erase(comment);
    }
    const std::string entry = trim(line);
    if (entry.empty()) {
      continue;
    }
    const auto equals = entry.find('=');
    if (equals == std::string::npos) {
      throw OutOfRange("config '" + path + "' line " + std::to_string(line_number) +
                       ": expected key = value");
    }
    const std::string key = trim(entry.substr(0, equals));
    const std::string value = trim(entry.substr(equals + 1));
    if (key.empty()) {
      throw OutOfRange("config '" + path + "' line " + std::to_string(line_number) +
                       ": empty key");
    }
    const std::string flag = "--" + key;
    if (on_command_line(flag)) {
      continue;  // command line wins
    }
    if (value == "true") {
      tokens.push_back(flag);
    } else if (value == "false") {
      // disabled flag, nothing to inject
    } else {
      tokens.push_back(flag);
      tokens.push_back(value);
    }
  }
  return tokens;
}

// Expands every "--config <path>" into the flags it defines.
std::vector<std::string> expand_config_arguments(int argc, char** argv) {
  std::vector<std::string> raw(argv + 1, argv + argc);

  std::vector<std::string> remaining;
  std::vector<std::string> config_paths;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k] == "--config") {
      if (k + 1 >= raw.size()) {
        throw OutOfRange("--config needs a file path");
      }
      config_paths.push_back(raw[++k]);
    } else {
      remaining.push_back(raw[k]);
    }
  }
  if (config_paths.empty()) {
    return remaining;
  }
  if (remaining.empty() || remaining.front().rfind('-', 0) == 0) {
    throw OutOfRange("--config is only valid after a subcommand");
  }

  std::vector<std::string> expanded{remaining.front()};
  for (const std::string& path : config_paths) {
    for (std::string& token : read_config_tokens(path, remaining)) {
      expanded.push_back(std::move(token));
    }
  }
  expanded.insert(expanded.end(), remaining.begin() + 1, remaining.end());
  return expanded;
}

void print_field(const char* name, const std::string& value) {
  std::printf("%-14s %s\n", name, value.c_str());
}

void print_field(const char* name, double value) {
  print_field(name, format_value(value));
}

// ---------------------------------------------------------------- point ---

struct PointArgs {
  double alpha = 0.0;
  double beta = 0.0;
  double eta = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  bool degrees = false;
};

void run_point(const PointArgs& args) {
  const double theta = to_radians(args.theta, args.degrees);
  const double phi = to_radians(args.phi, args.degrees);
  const HamiltonianParams params(args.alpha, args.beta, args.eta, Orientation(theta, phi));

  const SpinSystem system(1.5);
  const QuadrupoleTensor tensor = build_quadrupole_tensor(system);
  const ComplexMatrix h = build_hamiltonian(params, system, tensor);
  const auto eig = eig_hermitian(h);
  const DensityMatrix rho = thermal_state(h);
  const ConcurrenceResult c = concurrence(rho);
  const double m = magnetization(rho, system);

  print_field("alpha", args.alpha);
  print_field("beta", args.beta);
  print_field("eta", args.eta);
  print_field("theta", theta);
  print_field("phi", phi);
  print_field("concurrence", c.concurrence);
  print_field("magnetization", m);
  std::string nu_line, level_line;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k > 0) {
      nu_line += ' ';
      level_line += ' ';
    }
    nu_line += format_value(c.nu[k]);
    level_line += format_value(eig.eigenvalues[k]);
  }
  print_field("nu", nu_line);
  print_field("levels", level_line);
}

// ---------------------------------------------------------------- sweep ---

struct SweepArgs {
  std::vector<std::string> axis_specs;
  std::optional<double> alpha, beta, eta, theta, phi;
  std::optional<double> ratio;
  std::string output = "-";
  std::string format = "csv";
  bool degrees = false;
};

SweepAxis parse_axis_spec(const std::string& spec, bool degrees) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= spec.size()) {
    const std::size_t colon = spec.find(':', begin);
    if (colon == std::string::npos) {
      parts.push_back(spec.substr(begin));
      break;
    }
    parts.push_back(spec.substr(begin, colon - begin));
    begin = colon + 1;
  }
  if (parts.size() != 4) {
    throw OutOfRange("axis '" + spec + "' must look like name:start:stop:count");
  }
  const auto param = sweep_parameter_from_string(parts[0]);
  if (!param) {
    throw OutOfRange("unknown axis parameter '" + parts[0] +
                     "' (use alpha, beta, eta, theta or phi)");
  }
  try {
    double start = std::stod(parts[1]);
    double stop = std::stod(parts[2]);
    const long count = std::stol(parts[3]);
    if (count < 1) {
      throw OutOfRange("axis '" + spec + "' needs a positive point count");
    }
    const bool angular = *param == SweepParameter::theta || *param == SweepParameter::phi;
    if (angular && degrees) {
      start = to_radians(start, true);
      stop = to_radians(stop, true);
    }
    return SweepAxis{*param, start, stop, static_cast<std::size_t>(count)};
  } catch (const std::invalid_argument&) {
    throw OutOfRange("axis '" + spec + "' has non-numeric fields");
  } catch (const std::out_of_range&) {
    throw OutOfRange("axis '" + spec + "' has out-of-range numeric fields");
  }
}

SweepResult build_and_run_sweep(const SweepArgs& args) {
  std::vector<SweepAxis> axes;
  axes.reserve(args.axis_specs.size());
  for (const std::string& spec : args.axis_specs) {
    axes.push_back(parse_axis_spec(spec, args.degrees));
  }

  const auto has_axis = [&axes](SweepParameter p) {
    for (const SweepAxis& axis : axes) {
      if (axis.param == p) return true;
    }
    return false;
  };

  std::map<SweepParameter, double> fixed;
  const auto place = [&](SweepParameter p, const std::optional<double>& flag, bool angular) {
    if (flag) {
      fixed[p] = angular ? to_radians(*flag, args.degrees) : *flag;  // conflicts caught by SweepGrid
      return;
    }
    const bool ratio_covered = p == SweepParameter::alpha && args.ratio.has_value();
    if (!has_axis(p) && !ratio_covered) {
      fixed[p] = 0.0;
    }
  };
  place(SweepParameter::alpha, args.alpha, false);
  place(SweepParameter::beta, args.beta, false);
  place(SweepParameter::eta, args.eta, false);
  place(SweepParameter::theta, args.theta, true);
  place(SweepParameter::phi, args.phi, true);

  const SweepGrid grid(std::move(axes), std::move(fixed), args.ratio);
  return run_sweep(grid);
}

void run_sweep_command(const SweepArgs& args) {
  const SweepResult result = build_and_run_sweep(args);
  const std::string payload = args.format == "json" ? to_json(result) : to_csv(result);
  if (args.output == "-") {
    std::fwrite(payload.data(), 1, payload.size(), stdout);
  } else {
    write_file(args.output, payload);
  }
}

// ----------------------------------------------------------- max-angles ---

struct MaxAnglesArgs {
  double alpha = 0.0;
  double beta = 0.0;
  double eta = 0.0;
};

void run_max_angles(const MaxAnglesArgs& args) {
  const AngleMaximum best = maximize_concurrence_over_angles(args.alpha, args.beta, args.eta);
  print_field("theta", best.theta);
  print_field("phi", best.phi);
  print_field("cmax", best.cmax);
}

// --------------------------------------------------------- critical-temp ---

struct CriticalTempArgs {
  std::string preset = "cu63-5coord";
  std::optional<double> coupling_mhz;
  std::optional<double> gamma_mhz_per_t;
  std::optional<double> eta;
  double ratio = 1.0;
  double theta = 0.0;
  double phi = 0.0;
  double threshold = 1e-6;
  std::string convention = "eq7";
  bool degrees = false;
};

void run_critical_temp(const CriticalTempArgs& args) {
  MaterialPreset material;
  if (args.coupling_mhz) {
    if (!(*args.coupling_mhz > 0.0)) {
      throw OutOfRange("coupling must be positive, got " + std::to_string(*args.coupling_mhz));
    }
    material = MaterialPreset{"custom", *args.coupling_mhz, args.eta.value_or(0.0),
                              args.gamma_mhz_per_t.value_or(11.289), 0.0};
  } else {
    const auto preset = find_preset(args.preset);
    if (!preset) {
      throw OutOfRange("unknown preset '" + args.preset +
                       "' (built in: cu63-4coord, cu63-5coord)");
    }
    material = *preset;
  }
  const double eta = args.eta.value_or(material.eta);
  const double theta = to_radians(args.theta, args.degrees);
  const double phi = to_radians(args.phi, args.degrees);
  const TemperatureConvention convention = args.convention == "paper-mk"
                                               ? TemperatureConvention::paper_mk
                                               : TemperatureConvention::eq7;

  const double beta_c = critical_beta(args.ratio, eta, theta, phi, args.threshold);
  const double t_eq7 = temperature_from_beta(beta_c, material, 1.5, TemperatureConvention::eq7);
  const double t_mk =
      temperature_from_beta(beta_c, material, 1.5, TemperatureConvention::paper_mk);
  const double t_chosen = convention == TemperatureConvention::eq7 ? t_eq7 : t_mk;

  print_field("preset", material.name);
  print_field("eta", eta);
  print_field("ratio", args.ratio);
  print_field("beta_c", beta_c);
  print_field("T_eq7_mK", t_eq7 * 1e3);
  print_field("T_paper-mk_mK", t_mk * 1e3);
  print_field("convention", std::string(to_string(convention)));
  print_field("T_c_mK", t_chosen * 1e3);
}

// ----------------------------------------------------------- fit-witness ---

struct FitWitnessArgs {
  double beta = 0.0;
  double eta = 0.0;
  double theta = 0.0;
  double phi = 0.0;
  double alpha_max = 1.0;
  std::size_t points = 50;
  std::string output = "witness.csv";
  bool degrees = false;
};

void run_fit_witness(const FitWitnessArgs& args) {
  if (args.points < 1) {
    throw OutOfRange("points must be positive");
  }
  const double theta = to_radians(args.theta, args.degrees);
  const double phi = to_radians(args.phi, args.degrees);
  if (!(args.alpha_max > 0.0)) {
    throw OutOfRange("alpha-max must be positive, got " + std::to_string(args.alpha_max));
  }

  const double n = static_cast<double>(args.points);
  std::vector<SweepAxis> axes{
      SweepAxis{SweepParameter::alpha, args.alpha_max / n, args.alpha_max, args.points}};
  std::map<SweepParameter, double> fixed{{SweepParameter::beta, args.beta},
                                         {SweepParameter::eta, args.eta},
                                         {SweepParameter::theta, theta},
                                         {SweepParameter::phi, phi}};
  const SweepResult sweep = run_sweep(SweepGrid(std::move(axes), std::move(fixed)));
  const WitnessFit fit = fit_witness(sweep, args.alpha_max);

  print_field("slope", fit.slope);
  print_field("intercept", fit.intercept);
  print_field("max_residual", fit.max_abs_residual);
  print_field("points", static_cast<double>(fit.points_used));

  // Data table behind the fit: the magnetization column holds the reduced
  // magnetization Tr(rho Iz) / I the fit uses, the witness column -m/1.9.
  const double spin = sweep.metadata.spin;
  std::string table = "alpha,concurrence,magnetization,witness\n";
  for (const SweepRecord& record : sweep.records) {
    const double reduced = record.magnetization / spin;
    table += format_value(record.alpha);
    table += ',';
    table += format_value(record.concurrence);
    table += ',';
    table += format_value(reduced);
    table += ',';
    table += format_value(-reduced / 1.9);
    table += '\n';
  }
  if (args.output == "-") {
    std::fwrite(table.data(), 1, table.size(), stdout);
  } else {
    write_file(args.output, table);
    print_field("output", args.output);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermal-equilibrium entanglement between the states of a single "
               "quadrupole spin-3/2 nucleus in an electric-field gradient and "
               "an external magnetic field"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  PointArgs point_args;
  CLI::App* point = app.add_subcommand(
      "point", "Concurrence, magnetization and levels at one parameter set");
  std::string point_config;
  point->add_option("--config", point_config,
                    "flat key = value config file; command-line flags take precedence");
  point->add_option("--alpha", point_args.alpha, "Zeeman coupling alpha (>= 0)")->required();
  point->add_option("--beta", point_args.beta, "quadrupole coupling beta (>= 0)")->required();
  point->add_option("--eta", point_args.eta, "EFG asymmetry eta, in [0, 1]");
  point->add_option("--theta", point_args.theta, "polar angle theta, in [0, pi] rad");
  point->add_option("--phi", point_args.phi, "azimuthal angle phi, in [0, 2*pi) rad");
  point->add_flag("--degrees", point_args.degrees, "interpret angles as degrees");
  point->callback([&point_args] { run_point(point_args); });

  SweepArgs sweep_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Evaluate a parameter grid and emit CSV or JSON");
  std::string sweep_config;
  sweep->add_option("--config", sweep_config,
                    "flat key = value config file; command-line flags take precedence");
  sweep->add_option("--axis", sweep_args.axis_specs,
                    "swept axis as name:start:stop:count (repeatable; "
                    "names: alpha, beta, eta, theta, phi)")
      ->required();
  sweep->add_option("--alpha", sweep_args.alpha, "fixed alpha (>= 0)");
  sweep->add_option("--beta", sweep_args.beta, "fixed beta (>= 0)");
  sweep->add_option("--eta", sweep_args.eta, "fixed eta, in [0, 1]");
  sweep->add_option("--theta", sweep_args.theta, "fixed theta, in [0, pi] rad");
  sweep->add_option("--phi", sweep_args.phi, "fixed phi, in [0, 2*pi) rad");
  sweep->add_option("--ratio-alpha-beta", sweep_args.ratio,
                    "derive alpha = ratio * beta at every point (> 0)");
  sweep->add_option("--output", sweep_args.output, "output path, '-' for stdout");
  sweep->add_option("--format", sweep_args.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_flag("--degrees", sweep_args.degrees, "interpret angles as degrees");
  sweep->callback([&sweep_args] { run_sweep_command(sweep_args); });

  MaxAnglesArgs max_args;
  CLI::App* max_angles = app.add_subcommand(
      "max-angles", "Maximize the concurrence over the orientation (theta, phi)");
  std::string max_config;
  max_angles->add_option("--config", max_config,
                         "flat key = value config file; command-line flags take precedence");
  max_angles->add_option("--alpha", max_args.alpha, "Zeeman coupling alpha (>= 0)")->required();
  max_angles->add_option("--beta", max_args.beta, "quadrupole coupling beta (>= 0)")->required();
  max_angles->add_option("--eta", max_args.eta, "EFG asymmetry eta, in [0, 1]");
  max_angles->callback([&max_args] { run_max_angles(max_args); });

  CriticalTempArgs crit_args;
  CLI::App* crit = app.add_subcommand(
      "critical-temp", "Concurrence onset beta and its temperature for a material");
  std::string crit_config;
  crit->add_option("--config", crit_config,
                   "flat key = value config file; command-line flags take precedence");
  crit->add_option("--preset", crit_args.preset,
                   "material preset (cu63-4coord, cu63-5coord)");
  crit->add_option("--coupling-mhz", crit_args.coupling_mhz,
                   "custom quadrupole coupling eQq/h in MHz (> 0; overrides --preset)");
  crit->add_option("--gamma-mhz-t", crit_args.gamma_mhz_per_t,
                   "custom gyromagnetic ratio in MHz/T (with --coupling-mhz)");
  crit->add_option("--eta", crit_args.eta, "EFG asymmetry eta, in [0, 1] (default: preset)");
  crit->add_option("--ratio", crit_args.ratio, "alpha / beta ratio held during the scan (> 0)");
  crit->add_option("--theta", crit_args.theta, "polar angle theta, in [0, pi] rad");
  crit->add_option("--phi", crit_args.phi, "azimuthal angle phi, in [0, 2*pi) rad");
  crit->add_option("--threshold", crit_args.threshold,
                   "concurrence level counted as the onset (>= 0)");
  crit->add_option("--convention", crit_args.convention,
                   "temperature convention for T_c")
      ->check(CLI::IsMember({"eq7", "paper-mk"}));
  crit->add_flag("--degrees", crit_args.degrees, "interpret angles as degrees");
  crit->callback([&crit_args] { run_critical_temp(crit_args); });

  FitWitnessArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit-witness", "Linear fit of concurrence against reduced magnetization");
  std::string fit_config;
  fit->add_option("--config", fit_config,
                  "flat key = value config file; command-line flags take precedence");
  fit->add_option("--beta", fit_args.beta, "quadrupole coupling beta (>= 0)")->required();
  fit->add_option("--eta", fit_args.eta, "EFG asymmetry eta, in [0, 1]");
  fit->add_option("--theta", fit_args.theta, "polar angle theta, in [0, pi] rad");
  fit->add_option("--phi", fit_args.phi, "azimuthal angle phi, in [0, 2*pi) rad");
  fit->add_option("--alpha-max", fit_args.alpha_max, "largest alpha in the fit window (> 0)");
  fit->add_option("--points", fit_args.points, "number of alpha samples in (0, alpha-max]");
  fit->add_option("--output", fit_args.output, "data file path, '-' for stdout");
  fit->add_flag("--degrees", fit_args.degrees, "interpret angles as degrees");
  fit->callback([&fit_args] { run_fit_witness(fit_args); });

  try {
    std::vector<std::string> args = expand_config_arguments(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);  // --help / --version
    }
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InsufficientPoints& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const NoOnsetFound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const IoFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
