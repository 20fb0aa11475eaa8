#include "salpeter/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "salpeter/bounds.hpp"

namespace salpeter::cli {

namespace {

class OrderingViolationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

MassGrid parse_mass_grid(const std::string &text) {
  MassGrid grid;
  const auto first = text.find(':');
  if (first == std::string::npos) {
    grid.start = grid.stop = std::stod(text);
    grid.steps = 1;
    return grid;
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos)
    throw UsageError("mass grid must be a single value or start:stop:count");
  try {
    grid.start = std::stod(text.substr(0, first));
    grid.stop = std::stod(text.substr(first + 1, second - first - 1));
    grid.steps = std::stoi(text.substr(second + 1));
  } catch (const std::exception &) {
    throw UsageError("mass grid must be numeric start:stop:count");
  }
  if (grid.steps < 1)
    throw UsageError("mass grid needs at least one point");
  if (grid.steps > 1 && !(grid.stop > grid.start))
    throw UsageError("mass grid needs stop > start for more than one point");
  return grid;
}

PowerTerm parse_power_term(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("--power expects q:a");
  try {
    return {std::stod(text.substr(0, colon)), std::stod(text.substr(colon + 1))};
  } catch (const std::exception &) {
    throw UsageError("--power expects numeric q:a");
  }
}

std::string config_echo(const RunConfig &c) {
  std::ostringstream out;
  out << "beta=" << fmt(c.beta) << " mass=" << fmt(c.mass_grid.start) << ":"
      << fmt(c.mass_grid.stop) << ":" << c.mass_grid.steps;
  if (c.coulomb > 0.0)
    out << " coulomb=" << fmt(c.coulomb);
  if (c.log_coeff > 0.0)
    out << " log=" << fmt(c.log_coeff);
  if (c.linear > 0.0)
    out << " linear=" << fmt(c.linear);
  if (c.quadratic > 0.0)
    out << " quadratic=" << fmt(c.quadratic);
  for (const auto &t : c.extra_terms)
    out << " power=" << fmt(t.q) << ":" << fmt(t.a);
  if (c.nu)
    out << " nu=" << fmt(*c.nu);
  else
    out << " nu=optimized";
  if (c.with_oracle)
    out << " oracle_dim=" << c.oracle_dim;
  return out.str();
}

} // namespace

std::vector<double> MassGrid::values() const {
  std::vector<double> out;
  out.reserve(steps);
  if (steps == 1) {
    out.push_back(start);
    return out;
  }
  for (int i = 0; i < steps; ++i)
    out.push_back(start + (stop - start) * i / (steps - 1));
  return out;
}

PotentialSum RunConfig::potential() const {
  PotentialSum pot;
  if (coulomb > 0.0)
    pot.add_power(-1.0, coulomb);
  if (linear > 0.0)
    pot.add_power(1.0, linear);
  if (quadratic > 0.0)
    pot.add_power(2.0, quadratic);
  for (const auto &t : extra_terms)
    pot.add_power(t.q, t.a);
  pot.set_log(log_coeff);
  return pot;
}

Problem RunConfig::problem(double m) const {
  Problem p;
  p.beta = beta;
  p.m = m;
  p.potential = potential();
  return p;
}

RunConfig parse_args(const std::vector<std::string> &argv) {
  RunConfig config;
  std::string mass_text = "0";
  std::string kinetic_text = "p2";
  std::vector<std::string> power_texts;
  double nu_value = 0.0;

  CLI::App app{"Spectral bounds for semirelativistic Hamiltonians"};
  app.require_subcommand(1);

  auto add_potential_flags = [&](CLI::App *cmd) {
    cmd->add_option("--coulomb", config.coulomb, "coefficient a of -a/r");
    cmd->add_option("--log", config.log_coeff, "coefficient b of b*ln(r)");
    cmd->add_option("--linear", config.linear, "coefficient c of c*r");
    cmd->add_option("--quadratic", config.quadratic, "coefficient d of d*r^2");
    cmd->add_option("--power", power_texts, "extra term q:a (repeatable)");
  };

  auto *table1 = app.add_subcommand("table1", "reference energies and P factors");
  table1->add_option("--oracle-dim", config.oracle_dim, "basis dimension");
  table1->add_option("--output", config.output_path, "write CSV here");

  auto *bounds = app.add_subcommand("bounds", "lower/upper bounds over a mass grid");
  bounds->add_option("--beta", config.beta, "kinetic weight");
  bounds->add_option("--mass", mass_text, "mass grid start:stop:count or single value");
  add_potential_flags(bounds);
  auto *nu_opt = bounds->add_option("--nu", nu_value, "trial exponent for the upper bound");
  bounds->add_flag("--nu-optimize", config.nu_optimize, "optimize nu per mass");
  bounds->add_flag("--with-oracle", config.with_oracle, "append a reference-solver column");
  bounds->add_option("--oracle-dim", config.oracle_dim, "basis dimension for the oracle column");
  bounds->add_option("--output", config.output_path, "write CSV here");

  auto *figure = app.add_subcommand("figure", "preset configurations");
  int figure_id = 1;
  figure->add_option("--id", figure_id, "figure preset 1..4")->required();
  figure->add_option("--output", config.output_path, "write CSV here");

  auto *oracle = app.add_subcommand("oracle", "single reference-solver run");
  oracle->add_option("--kinetic", kinetic_text, "p, p2 or salpeter");
  oracle->add_option("--beta", config.beta, "kinetic weight (salpeter)");
  oracle->add_option("--mass", mass_text, "mass (salpeter)");
  add_potential_flags(oracle);
  oracle->add_option("--dim", config.oracle_dim, "basis dimension");
  oracle->add_option("--output", config.output_path, "write CSV here");

  std::vector<std::string> args = argv;
  args.insert(args.begin(), "salpeter");
  std::vector<const char *> ptrs;
  ptrs.reserve(args.size());
  for (const auto &s : args)
    ptrs.push_back(s.c_str());
  app.parse(static_cast<int>(ptrs.size()), ptrs.data());

  if (table1->parsed())
    config.subcommand = Subcommand::table1;
  else if (bounds->parsed())
    config.subcommand = Subcommand::bounds;
  else if (figure->parsed())
    config.subcommand = Subcommand::figure;
  else
    config.subcommand = Subcommand::oracle;

  config.mass_grid = parse_mass_grid(mass_text);
  for (const auto &t : power_texts)
    config.extra_terms.push_back(parse_power_term(t));
  if (nu_opt->count() > 0)
    config.nu = nu_value;
  config.figure_id = figure_id;

  if (config.subcommand == Subcommand::oracle) {
    if (kinetic_text == "p")
      config.kinetic = KineticOperator::p;
    else if (kinetic_text == "p2")
      config.kinetic = KineticOperator::p_squared;
    else if (kinetic_text == "salpeter")
      config.kinetic = KineticOperator::salpeter;
    else
      throw UsageError("--kinetic must be p, p2 or salpeter");
  }

  if (config.subcommand == Subcommand::bounds ||
      config.subcommand == Subcommand::oracle) {
    // Problem invariants are enforced before any computation starts; the
    // Coulomb coupling limit gets its dedicated diagnostic.
    config.problem(config.mass_grid.start).validate();
  }
  if (config.subcommand == Subcommand::figure &&
      (config.figure_id < 1 || config.figure_id > 4))
    throw UsageError("--id must be 1, 2, 3 or 4");
  return config;
}

std::string run_table1(const RunConfig &config) {
  OracleSettings settings;
  settings.basis_dim = config.oracle_dim;

  std::ostringstream out;
  out << "# salpeter table1 oracle_dim=" << settings.basis_dim << "\n";
  out << "q,e1_ref,e1_computed,p1_ref,p1_computed,e2_ref,e2_computed,p2_ref,p2_computed\n";

  for (const auto &entry : reference_table()) {
    out << fmt(entry.q) << ",";
    PotentialSum single;
    if (entry.q == 0.0)
      single.set_log(1.0);
    else
      single.add_power(entry.q, 1.0);

    if (!entry.has_lower) {
      out << ",,,,"; // no discrete spectrum for K = p with a pure Coulomb term
    } else {
      out << fmt(entry.e1) << ",";
      try {
        const double e1 = ultrarelativistic_ground(single, settings).energy;
        const double p1 = entry.q == 0.0
                              ? p_log(KineticKind::relativistic_lower, e1)
                              : p_lower(entry.q, e1);
        out << fmt(e1) << "," << fmt(entry.p1) << "," << fmt(p1) << ",";
      } catch (const std::exception &) {
        out << "error," << fmt(entry.p1) << ",error,";
      }
    }

    out << fmt(entry.e2) << ",";
    try {
      const double e2 = schrodinger_ground(single, 1.0, settings).energy;
      const double p2 = entry.q == 0.0 ? p_log(KineticKind::schrodinger, e2)
                                       : p_schrodinger(entry.q, e2);
      out << fmt(e2) << "," << fmt(entry.p2) << "," << fmt(p2) << "\n";
    } catch (const std::exception &) {
      out << "error," << fmt(entry.p2) << ",error\n";
    }
  }
  return out.str();
}

std::string run_bounds(const RunConfig &config) {
  std::ostringstream out;
  out << "# salpeter bounds " << config_echo(config) << "\n";
  out << "m,lower,upper,nu_used";
  if (config.with_oracle)
    out << ",oracle";
  out << "\n";

  OracleSettings oracle_settings;
  oracle_settings.basis_dim = config.oracle_dim;

  for (double m : config.mass_grid.values()) {
    const Problem problem = config.problem(m);
    const BoundReport lower = lower_bound(problem);
    const BoundReport upper = (config.nu && !config.nu_optimize)
                                  ? upper_bound(problem, *config.nu)
                                  : upper_bound_optimized(problem);
    if (!(lower.value <= upper.value))
      throw OrderingViolationError("lower bound exceeds upper bound at m = " + fmt(m));
    out << fmt(m) << "," << fmt(lower.value) << "," << fmt(upper.value) << ","
        << fmt(upper.nu.value_or(0.0));
    if (config.with_oracle) {
      oracle_settings.scale = 1.0 / std::max(m, 1.0);
      out << "," << fmt(salpeter_ground(problem, oracle_settings).energy);
    }
    out << "\n";
  }
  return out.str();
}

std::string run_figure(const RunConfig &config) {
  RunConfig preset;
  preset.subcommand = Subcommand::bounds;
  preset.beta = 1.0;
  preset.output_path = config.output_path;

  if (config.figure_id == 1) {
    // Complementary single-power bounds for V = r against the mass.
    preset.mass_grid = {0.0, 10.0, 21};
    std::ostringstream out;
    out << "# salpeter figure id=1 potential=r beta=1 mass=0:10:21\n";
    out << "m,lower,upper\n";
    for (double m : preset.mass_grid.values()) {
      Problem problem;
      problem.beta = 1.0;
      problem.m = m;
      problem.potential.add_power(1.0, 1.0);
      const auto [lower, upper] = single_power_bounds(problem);
      if (!(lower.value <= upper.value))
        throw OrderingViolationError("lower bound exceeds upper bound at m = " + fmt(m));
      out << fmt(m) << "," << fmt(lower.value) << "," << fmt(upper.value) << "\n";
    }
    return out.str();
  }

  switch (config.figure_id) {
  case 2:
    preset.coulomb = 0.1;
    preset.linear = 0.25;
    preset.nu = 1.6;
    preset.mass_grid = {0.0, 10.0, 21};
    preset.with_oracle = true;
    preset.oracle_dim = 25;
    break;
  case 3:
    preset.coulomb = 0.1;
    preset.linear = 0.25;
    preset.nu = 1.6;
    preset.mass_grid = {0.0, 50.0, 26};
    break;
  case 4:
    preset.coulomb = 0.1;
    preset.log_coeff = 0.25;
    preset.linear = 0.25;
    preset.quadratic = 0.25;
    preset.nu = 1.4;
    preset.mass_grid = {0.0, 10.0, 21};
    break;
  default:
    throw UsageError("--id must be 1, 2, 3 or 4");
  }

  std::ostringstream out;
  out << "# salpeter figure id=" << config.figure_id << "\n" << run_bounds(preset);
  return out.str();
}

std::string run_oracle(const RunConfig &config) {
  OracleSettings settings;
  settings.basis_dim = config.oracle_dim;

  SpectralResult result;
  const PotentialSum pot = config.potential();
  switch (config.kinetic) {
  case KineticOperator::p:
    result = ultrarelativistic_ground(pot, settings);
    break;
  case KineticOperator::p_squared:
    result = schrodinger_ground(pot, 1.0, settings);
    break;
  case KineticOperator::salpeter:
    settings.scale = 1.0 / std::max(config.mass_grid.start, 1.0);
    result = salpeter_ground(config.problem(config.mass_grid.start), settings);
    break;
  }

  std::ostringstream out;
  out << "# salpeter oracle " << config_echo(config) << "\n";
  out << "energy,residual,basis_dim,scale\n";
  out << fmt(result.energy) << "," << fmt(result.residual) << ","
      << result.settings_used.basis_dim << "," << fmt(result.settings_used.scale)
      << "\n";
  return out.str();
}

int run_cli(int argc, const char *const *argv) {
  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    RunConfig config;
    try {
      config = parse_args(args);
    } catch (const CLI::CallForHelp &e) {
      CLI::App app{"Spectral bounds for semirelativistic Hamiltonians"};
      std::cout << e.what() << "\n";
      return kOk;
    } catch (const CLI::ParseError &e) {
      std::cerr << "argument error: " << e.what() << "\n";
      return kArgumentError;
    } catch (const UsageError &e) {
      std::cerr << "argument error: " << e.what() << "\n";
      return kArgumentError;
    }

    std::string output;
    switch (config.subcommand) {
    case Subcommand::table1:
      output = run_table1(config);
      break;
    case Subcommand::bounds:
      output = run_bounds(config);
      break;
    case Subcommand::figure:
      output = run_figure(config);
      break;
    case Subcommand::oracle:
      output = run_oracle(config);
      break;
    }

    if (config.output_path.empty()) {
      std::cout << output;
    } else {
      std::ofstream file(config.output_path);
      if (!file)
        throw std::runtime_error("cannot open output file " + config.output_path);
      file << output;
    }
    return kOk;
  } catch (const OrderingViolationError &e) {
    std::cerr << "internal ordering violation: " << e.what() << "\n";
    return kOrderingViolation;
  } catch (const CouplingTooLargeError &e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const NoDiscreteSpectrumError &e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::domain_error &e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kArgumentError;
  }
}

} // namespace salpeter::cli
