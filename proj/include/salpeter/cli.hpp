// Command-line front end: builds problems from flags, runs the bound and
// reference-solver computations over mass grids, and emits CSV. Kept in the
// library so the command behaviour is directly testable.
#ifndef SALPETER_CLI_HPP
#define SALPETER_CLI_HPP

#include <optional>
#include <string>
#include <vector>

#include "salpeter/rayleigh_ritz.hpp"

namespace salpeter::cli {

// Exit codes: 0 success, 2 argument error, 3 domain error (coupling or
// spectrum), 4 internal ordering violation (a lower value above an upper one
// signals an implementation bug, never a data condition).
enum ExitCode {
  kOk = 0,
  kArgumentError = 2,
  kDomainError = 3,
  kOrderingViolation = 4,
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct MassGrid {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1; // inclusive endpoints

  std::vector<double> values() const;
};

enum class Subcommand { table1, bounds, figure, oracle };

struct RunConfig {
  Subcommand subcommand = Subcommand::table1;
  double beta = 1.0;
  MassGrid mass_grid{0.0, 0.0, 1};
  double coulomb = 0.0;    // a, coefficient of -a/r
  double log_coeff = 0.0;  // b, coefficient of b*ln(r)
  double linear = 0.0;     // c
  double quadratic = 0.0;  // d
  std::vector<PowerTerm> extra_terms; // additional (q, a) pairs
  std::optional<double> nu;
  bool nu_optimize = false;
  bool with_oracle = false;
  int oracle_dim = 25;
  int figure_id = 1;
  KineticOperator kinetic = KineticOperator::p_squared;
  std::string output_path; // empty = stdout

  PotentialSum potential() const;
  Problem problem(double m) const;
};

// Parses argv (without the program name). Unknown flags are rejected. A
// Coulomb coupling a/beta >= 1/2 is diagnosed here, before any computation.
RunConfig parse_args(const std::vector<std::string> &argv);

// Each run_* returns the full CSV text (header lines prefixed with '#').
std::string run_table1(const RunConfig &config);
std::string run_bounds(const RunConfig &config);
std::string run_figure(const RunConfig &config);
std::string run_oracle(const RunConfig &config);

// Dispatches, writes output to stdout or config.output_path, maps exceptions
// to exit codes. argv here is the raw main() argv.
int run_cli(int argc, const char *const *argv);

} // namespace salpeter::cli

#endif
