// Kinetic-potential machinery: the P factors that turn exact component
// spectra into semiclassical potential terms sgn(q)*(P*r)^q, the running
// Coulomb factor of the relativistic Coulomb lower bound, and the Legendre
// transform linking coupling curves F(v) to kinetic potentials.
#ifndef SALPETER_KINETIC_POTENTIAL_HPP
#define SALPETER_KINETIC_POTENTIAL_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "salpeter/hamiltonian.hpp"

namespace salpeter {

enum class KineticKind { relativistic_lower, schrodinger, variational };

class InvalidCurveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// P factor for K = p from the v = 1 ground energy e1 of p + sgn(q) r^q:
//   P = |e1/(1+q)|^(1+1/q) * |q|,  valid for q > -1, q != 0.
double p_lower(double q, double e1);

// P factor for K = p^2 from the v = 1 ground energy e2 of p^2 + sgn(q) r^q:
//   P = |e2/(1+q/2)|^(1/2+1/q) * |q/2|^(1/2),  valid for q > -2, q != 0.
double p_schrodinger(double q, double e2);

// Log-potential P factor from the ground energy e0 of K + ln r:
// exp(e0 - 1) for K = p, exp(e0 - 1/2)/sqrt(2) for K = p^2.
double p_log(KineticKind kind, double e0);

// Variational P factor of the trial family exp(-alpha r^nu / 2):
//   P(nu, q) = (nu/2) * [G(2+1/nu)/G(3/nu)]^(1/2) * [G((q+3)/nu)/G(3/nu)]^(1/q)
// computed through ln_gamma; needs nu > 0 and q > -3, q != 0.
double p_variational(double nu, double q);

// Log-term companion: P(nu, 0) = (nu/2)*[G(2+1/nu)/G(3/nu)]^(1/2)*exp(psi(3/nu)/nu).
double p_variational_log(double nu);

// Relativistic Coulomb ground-energy lower bound for sqrt(m^2+p^2) - v/r:
//   e_L(v) = m * [(1 + sqrt(1-4 v^2))/2]^(1/2),  0 <= v < 1/2.
double coulomb_lower_energy(double v, double m);

// Running Coulomb factor P_L(v) = e_L(v)/m, dimensionless, in (1/sqrt(2), 1].
double coulomb_running_p(double v);

// P factors attached to a kinetic kind, keyed by exponent, plus the log-term
// factor. semiclassical_objective reads the factor for every potential term.
struct PNumberSet {
  KineticKind kind = KineticKind::schrodinger;
  std::optional<double> nu;           // set for the variational kind
  std::map<double, double> values;    // q -> P(q)
  std::optional<double> log_value;    // P(0)

  double factor(double q) const;
  double log_factor() const;
};

// Published reference values at unit coupling for q in {-1, 0, 1, 2}.
// The e1 entries round down and the e2 entries round up, and the derived
// P factors keep the same one-sided rounding, so table-driven lower bounds
// stay lower bounds and upper bounds stay upper bounds.
// The q = 2 lower P factor equals the q = 1 upper one exactly (p + r^2 and
// p^2 + r are Fourier images of each other); the table stores the value that
// downward-rounds that common number.
struct ReferenceEntry {
  double q;
  bool has_lower; // K = p data exists (no discrete Coulomb spectrum for K = p)
  double e1;
  double p1;
  double e2;
  double p2;
};

std::span<const ReferenceEntry> reference_table();

// Entry lookup; nullptr when q is not tabulated.
const ReferenceEntry *reference_entry(double q);

// A sampled concave coupling curve F(v): ground energy of K + v h(r) against
// the coupling v. Construction validates ordering and concavity.
class CouplingCurve {
public:
  CouplingCurve(std::vector<double> couplings, std::vector<double> energies);

  const std::vector<double> &couplings() const { return v_; }
  const std::vector<double> &energies() const { return f_; }
  size_t size() const { return v_.size(); }

private:
  std::vector<double> v_, f_;
};

struct KineticPotentialSample {
  double s = 0.0;    // mean kinetic energy
  double hbar = 0.0; // kinetic-potential value at s
};

// Legendre transform of the curve: s = F - v F', hbar = F', with F'
// estimated by non-uniform three-point central differences at interior
// samples. A curve with a vanishing kinetic part (linear F) is rejected.
std::vector<KineticPotentialSample>
kinetic_potential_from_curve(const CouplingCurve &curve);

struct CurveEnergy {
  double value = 0.0;
  bool on_boundary = false; // minimum pinned at the first/last sample
};

// Recovers F(v) = min_s {s + v hbar(s)} from sampled kinetic-potential data,
// with parabolic refinement through the best sample and its neighbours.
CurveEnergy energy_from_kinetic_potential(
    std::span<const KineticPotentialSample> samples, double v);

} // namespace salpeter

#endif
