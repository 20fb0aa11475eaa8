// Potential and Hamiltonian descriptions shared by the bound formulas and the
// reference solver: V(r) = sum_q a(q) sgn(q) r^q + a(0) ln(r) under the
// kinetic term beta*sqrt(m^2 + p^2).
#ifndef SALPETER_HAMILTONIAN_HPP
#define SALPETER_HAMILTONIAN_HPP

#include <stdexcept>
#include <vector>

namespace salpeter {

class CouplingTooLargeError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NoDiscreteSpectrumError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class UnsupportedTermError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// One power contribution a * sgn(q) * r^q with a >= 0, q != 0 and q > -2.
struct PowerTerm {
  double q = 0.0;
  double a = 0.0;
};

// Sum of power terms plus an optional log term a(0)*ln(r). Coefficients are
// non-negative; attraction enters through sgn(q) for q < 0.
class PotentialSum {
public:
  PotentialSum() = default;

  // Adds a * sgn(q) * r^q; merging with an existing term of the same q is an
  // error (one term per exponent). Zero coefficients are dropped.
  PotentialSum &add_power(double q, double a);
  PotentialSum &set_log(double coefficient);

  const std::vector<PowerTerm> &power_terms() const { return terms_; }
  double log_coefficient() const { return log_coefficient_; }

  bool empty() const { return terms_.empty() && log_coefficient_ == 0.0; }
  bool has_log() const { return log_coefficient_ > 0.0; }
  bool has_coulomb() const;
  double coulomb_coefficient() const; // a(-1), 0 when absent
  // True when some q > 0 term or the log term is present.
  bool has_confining_term() const;
  bool is_pure_coulomb() const;

  double evaluate(double r) const;

private:
  std::vector<PowerTerm> terms_; // kept sorted by q
  double log_coefficient_ = 0.0;
};

// Full problem description: H = beta*sqrt(m^2 + p^2) + V(r).
struct Problem {
  double beta = 1.0;
  double m = 0.0;
  PotentialSum potential;

  // Coulomb coupling v = a(-1)/beta, 0 when no Coulomb term is present.
  double coulomb_coupling() const;
  // Throws unless beta > 0, m >= 0, the potential is nonempty with a
  // confining term (or is pure Coulomb), and any Coulomb coupling is < 1/2.
  void validate() const;
};

} // namespace salpeter

#endif
