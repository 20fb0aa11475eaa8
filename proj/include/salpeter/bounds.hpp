// Certified ground-state energy bounds for H = beta*sqrt(m^2+p^2) + V(r).
// The lower bounds come from kinetic-potential subadditivity evaluated with
// the exact single-power P factors; the upper bounds from the two-parameter
// trial family exp(-alpha r^nu / 2). Every reported value is a true one-sided
// bound for admissible problems.
#ifndef SALPETER_BOUNDS_HPP
#define SALPETER_BOUNDS_HPP

#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <utility>

#include "salpeter/hamiltonian.hpp"
#include "salpeter/kinetic_potential.hpp"
#include "salpeter/rayleigh_ritz.hpp"

namespace salpeter {

enum class BoundMethod {
  sum_lower,          // kinetic-potential sum bound
  variational_upper,  // trial-family bound at fixed nu
  single_power_lower, // complementary bound, K = p side
  single_power_upper, // complementary bound, K = p^2 side
  envelope_lower,     // convex transform of the linear potential
  envelope_upper,     // concave transform, upper side
};

struct BoundReport {
  double value = 0.0;
  double r_star = 0.0; // minimizing radius; +inf with analytic_limit set
  BoundMethod method = BoundMethod::sum_lower;
  std::optional<double> nu;
  // Pure-Coulomb problems skip the radius minimization (the massless limit
  // has no finite minimizer) and report the closed-form value instead.
  bool analytic_limit = false;
};

// P factors for lower bounds: tabulated reference values for q in {0, 1, 2},
// oracle-backed for other exponents, cached per (kind, q). Safe for
// concurrent readers; writes are serialized.
class PNumberSource {
public:
  explicit PNumberSource(OracleSettings oracle_settings = {});

  double lower(double q) const;       // P factor for K = p, q > -1, q != 0
  double schrodinger(double q) const; // P factor for K = p^2, q > -2, q != 0
  double lower_log() const;
  double schrodinger_log() const;

private:
  OracleSettings oracle_;
  mutable std::map<std::pair<int, double>, double> cache_;
  mutable std::mutex mutex_;
};

const PNumberSource &default_p_source();

// The scalar function of r whose minimum gives a bound:
//   beta*sqrt(m^2 + 1/r^2) + sum a(q) sgn(q) (P(q) r)^q + a(0) ln(P(0) r).
// A Coulomb term under the relativistic_lower kind enters as -(pi/2) a(-1)/r,
// the sharp form-bound of 1/r against p; other kinds read P(-1) from p_set.
double semiclassical_objective(double r, const Problem &problem,
                               const PNumberSet &p_set);

// Kinetic-potential-sum lower bound. Coulomb-free problems minimize the
// semiclassical objective with the K = p factors. A pure Coulomb problem
// returns the closed-form relativistic Coulomb bound beta*m*P_L(v). When a
// Coulomb term rides along other terms the bound is the better of two valid
// routes: the sharp-constant objective above, and a coupling split that
// treats the Coulomb piece with the closed-form bound at reduced kinetic
// weight (both stay below the true energy for every mass).
BoundReport lower_bound(const Problem &problem,
                        const PNumberSource &source = default_p_source());

// Trial-family upper bound at fixed nu > 0.
BoundReport upper_bound(const Problem &problem, double nu);

// Grid scan over nu followed by golden-section refinement around the best
// grid point; returns the smallest upper bound found.
BoundReport upper_bound_optimized(const Problem &problem,
                                  std::pair<double, double> nu_range = {0.5, 3.0},
                                  int nu_steps = 26);

// Complementary bounds for a single power term: the K = p factor gives the
// lower bound, the K = p^2 factor the upper one. Multi-term potentials are a
// contract error; use lower_bound / upper_bound for those.
std::pair<BoundReport, BoundReport>
single_power_bounds(const Problem &problem,
                    const PNumberSource &source = default_p_source());

enum class Convexity { convex, concave };

// Lower bound for V(r) = v * W(r) with W monotone increasing and convex in r:
//   min_r { beta*sqrt(m^2 + 1/r^2) + v W(P r) } with the K = p linear factor.
// The value is a bound only at the minimum. Declared-concave W is refused;
// request envelope_upper_concave instead.
BoundReport envelope_lower_convex(double beta, double m, double v,
                                  const std::function<double(double)> &w,
                                  Convexity declared,
                                  const PNumberSource &source = default_p_source());

// Upper-side companion for concave monotone W, built on the K = p^2 factor;
// here the expression bounds from above at every radius, not only at the
// minimum.
BoundReport envelope_upper_concave(double beta, double m, double v,
                                   const std::function<double(double)> &w,
                                   Convexity declared,
                                   const PNumberSource &source = default_p_source());

struct SubadditivityReport {
  double grid_bound = 0.0;    // best value over the supplied s grid
  double refined_bound = 0.0; // lower_bound value
  double oracle_energy = 0.0; // variational reference
  double margin = 0.0;        // oracle_energy - refined_bound, >= 0 when valid
};

// Diagnostic: evaluates the summed-component bound on an explicit grid of
// mean kinetic energies (s = 1/r) and checks it against the reference solver.
SubadditivityReport
sum_subadditivity_check(const Problem &problem, std::span<const double> s_grid,
                        const OracleSettings &oracle_settings = {},
                        const PNumberSource &source = default_p_source());

} // namespace salpeter

#endif
