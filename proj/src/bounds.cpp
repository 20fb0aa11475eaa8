#include "salpeter/bounds.hpp"

#include <cmath>
#include <limits>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

constexpr double kPiHalf = 1.57079632679489661923;

double sgn(double q) { return q > 0.0 ? 1.0 : -1.0; }

numerics::MinResult minimize_radius(const std::function<double(double)> &f,
                                    double seed) {
  const auto bracket = numerics::expand_bracket(f, seed);
  return numerics::minimize_unimodal(f, bracket, 1e-10);
}

double seed_radius(const Problem &problem) {
  return 1.0 / std::max(problem.m, 1.0);
}

// K = p factors for every non-Coulomb term of the problem; the Coulomb term
// is handled inside semiclassical_objective for this kind.
PNumberSet lower_set(const Problem &problem, const PNumberSource &source) {
  PNumberSet set;
  set.kind = KineticKind::relativistic_lower;
  for (const auto &t : problem.potential.power_terms())
    if (t.q != -1.0)
      set.values[t.q] = source.lower(t.q);
  if (problem.potential.has_log())
    set.log_value = source.lower_log();
  return set;
}

std::function<double(double)>
lower_objective(const Problem &problem, const PNumberSource &source) {
  return [problem, set = lower_set(problem, source)](double r) {
    return semiclassical_objective(r, problem, set);
  };
}

// Rest-of-potential bound at kinetic weight (1-w)*beta, Coulomb removed.
double rest_bound(const Problem &problem, double kinetic_scale,
                  const PNumberSource &source, double *r_star) {
  Problem rest;
  rest.beta = problem.beta * kinetic_scale;
  rest.m = problem.m;
  for (const auto &t : problem.potential.power_terms())
    if (t.q != -1.0)
      rest.potential.add_power(t.q, t.a);
  rest.potential.set_log(problem.potential.log_coefficient());
  const auto f = lower_objective(rest, source);
  const auto min = minimize_radius(f, seed_radius(problem));
  if (r_star)
    *r_star = min.r_star;
  return min.f_star;
}

// Coupling-split lower bound: H = [w K - a/r] + [(1-w) K + V_rest], the first
// bracket bounded by the closed-form relativistic Coulomb bound, the second
// by the kinetic-potential sum at reduced weight. Concave in w, so a
// golden-section maximization is exact.
double split_lower(const Problem &problem, const PNumberSource &source,
                   double *r_star) {
  const double v = problem.coulomb_coupling();
  const double beta = problem.beta;
  const double m = problem.m;
  auto value = [&](double w) {
    const double mr = w * beta * m * coulomb_running_p(v / w);
    return mr + rest_bound(problem, 1.0 - w, source, nullptr);
  };
  double a = 2.0 * v + 1e-9;
  double c = 1.0 - 1e-9;
  const double golden = 0.61803398874989485;
  double x1 = c - golden * (c - a), x2 = a + golden * (c - a);
  double f1 = value(x1), f2 = value(x2);
  while (c - a > 1e-8) {
    if (f1 > f2) { // maximize
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - golden * (c - a);
      f1 = value(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (c - a);
      f2 = value(x2);
    }
  }
  const double w = f1 > f2 ? x1 : x2;
  const double mr = w * beta * m * coulomb_running_p(v / w);
  return mr + rest_bound(problem, 1.0 - w, source, r_star);
}

PNumberSet variational_set(const Problem &problem, double nu) {
  PNumberSet set;
  set.kind = KineticKind::variational;
  set.nu = nu;
  for (const auto &t : problem.potential.power_terms())
    set.values[t.q] = p_variational(nu, t.q);
  if (problem.potential.has_log())
    set.log_value = p_variational_log(nu);
  return set;
}

} // namespace

PNumberSource::PNumberSource(OracleSettings oracle_settings)
    : oracle_(oracle_settings) {}

double PNumberSource::lower(double q) const {
  if (q == 0.0 || q <= -1.0)
    throw std::domain_error("PNumberSource::lower: q must satisfy q > -1, q != 0");
  if (const auto *e = reference_entry(q); e && e->has_lower)
    return e->p1;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({1, q});
    if (it != cache_.end())
      return it->second;
  }
  PotentialSum single;
  single.add_power(q, 1.0);
  const double e1 = ultrarelativistic_ground(single, oracle_).energy;
  const double p = p_lower(q, e1);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_[{1, q}] = p;
  return p;
}

double PNumberSource::schrodinger(double q) const {
  if (q == 0.0 || q <= -2.0)
    throw std::domain_error("PNumberSource::schrodinger: q must satisfy q > -2, q != 0");
  if (const auto *e = reference_entry(q))
    return e->p2;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find({2, q});
    if (it != cache_.end())
      return it->second;
  }
  PotentialSum single;
  single.add_power(q, 1.0);
  const double e2 = schrodinger_ground(single, 1.0, oracle_).energy;
  const double p = p_schrodinger(q, e2);
  std::lock_guard<std::mutex> lock(mutex_);
  cache_[{2, q}] = p;
  return p;
}

double PNumberSource::lower_log() const { return reference_entry(0.0)->p1; }

double PNumberSource::schrodinger_log() const { return reference_entry(0.0)->p2; }

const PNumberSource &default_p_source() {
  static const PNumberSource source;
  return source;
}

double semiclassical_objective(double r, const Problem &problem,
                               const PNumberSet &p_set) {
  if (!(r > 0.0))
    throw std::domain_error("semiclassical_objective: radius must be positive");
  if (problem.potential.empty())
    throw std::invalid_argument("semiclassical_objective: potential coefficients are all zero");
  double val = problem.beta * std::sqrt(problem.m * problem.m + 1.0 / (r * r));
  for (const auto &t : problem.potential.power_terms()) {
    if (t.q == -1.0 && p_set.kind == KineticKind::relativistic_lower) {
      val -= kPiHalf * t.a / r;
      continue;
    }
    val += t.a * sgn(t.q) * std::pow(p_set.factor(t.q) * r, t.q);
  }
  if (problem.potential.has_log())
    val += problem.potential.log_coefficient() * std::log(p_set.log_factor() * r);
  return val;
}

BoundReport lower_bound(const Problem &problem, const PNumberSource &source) {
  problem.validate();
  for (const auto &t : problem.potential.power_terms())
    if (t.q < -1.0)
      throw UnsupportedTermError(
          "lower_bound: power terms must have q > -1 or be the Coulomb term");

  BoundReport report;
  report.method = BoundMethod::sum_lower;

  if (problem.potential.is_pure_coulomb()) {
    const double v = problem.coulomb_coupling();
    report.value = problem.beta * problem.m * coulomb_running_p(v);
    report.r_star = std::numeric_limits<double>::infinity();
    report.analytic_limit = true;
    return report;
  }

  const auto f = lower_objective(problem, source);
  const auto direct = minimize_radius(f, seed_radius(problem));
  report.value = direct.f_star;
  report.r_star = direct.r_star;

  if (problem.potential.has_coulomb()) {
    double split_r = 0.0;
    const double split = split_lower(problem, source, &split_r);
    if (split > report.value) {
      report.value = split;
      report.r_star = split_r;
    }
  }
  return report;
}

BoundReport upper_bound(const Problem &problem, double nu) {
  problem.validate();
  if (!(nu > 0.0))
    throw std::domain_error("upper_bound: nu must be positive");

  BoundReport report;
  report.method = BoundMethod::variational_upper;
  report.nu = nu;

  if (problem.potential.is_pure_coulomb()) {
    const double c = problem.coulomb_coupling() / p_variational(nu, -1.0);
    report.value = problem.beta * problem.m * std::sqrt(1.0 - c * c);
    report.r_star = std::numeric_limits<double>::infinity();
    report.analytic_limit = true;
    return report;
  }

  const PNumberSet set = variational_set(problem, nu);
  auto f = [&problem, &set](double r) {
    return semiclassical_objective(r, problem, set);
  };
  const auto min = minimize_radius(f, seed_radius(problem));
  report.value = min.f_star;
  report.r_star = min.r_star;
  return report;
}

BoundReport upper_bound_optimized(const Problem &problem,
                                  std::pair<double, double> nu_range,
                                  int nu_steps) {
  const auto [lo, hi] = nu_range;
  if (!(lo > 0.0) || hi > 5.0 || hi < lo)
    throw std::domain_error("upper_bound_optimized: nu range must sit inside (0, 5]");
  if (hi == lo)
    return upper_bound(problem, lo);
  if (nu_steps < 3)
    throw std::domain_error("upper_bound_optimized: need at least 3 grid points");

  std::vector<double> grid(nu_steps);
  for (int i = 0; i < nu_steps; ++i)
    grid[i] = lo + (hi - lo) * i / (nu_steps - 1);
  int best = 0;
  std::vector<double> values(nu_steps);
  for (int i = 0; i < nu_steps; ++i) {
    values[i] = upper_bound(problem, grid[i]).value;
    if (values[i] < values[best])
      best = i;
  }
  double a = grid[std::max(0, best - 1)];
  double c = grid[std::min(nu_steps - 1, best + 1)];
  const double golden = 0.61803398874989485;
  double x1 = c - golden * (c - a), x2 = a + golden * (c - a);
  double f1 = upper_bound(problem, x1).value;
  double f2 = upper_bound(problem, x2).value;
  while (c - a > 1e-6) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - golden * (c - a);
      f1 = upper_bound(problem, x1).value;
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (c - a);
      f2 = upper_bound(problem, x2).value;
    }
  }
  const double nu_best = f1 < f2 ? x1 : x2;
  BoundReport refined = upper_bound(problem, nu_best);
  // The grid winner stays if refinement did not help (flat objective).
  if (values[best] < refined.value)
    refined = upper_bound(problem, grid[best]);
  return refined;
}

std::pair<BoundReport, BoundReport>
single_power_bounds(const Problem &problem, const PNumberSource &source) {
  problem.validate();
  if (problem.potential.power_terms().size() != 1 || problem.potential.has_log())
    throw std::invalid_argument(
        "single_power_bounds: exactly one power term required; use "
        "lower_bound/upper_bound for sums");
  const auto term = problem.potential.power_terms()[0];
  if (term.q == -1.0)
    throw UnsupportedTermError(
        "single_power_bounds: no K = p factor exists for the Coulomb term");

  const double beta = problem.beta;
  const double m = problem.m;
  auto objective = [&](double p_factor) {
    return [beta, m, term, p_factor](double r) {
      return beta * std::sqrt(m * m + 1.0 / (r * r)) +
             term.a * sgn(term.q) * std::pow(p_factor * r, term.q);
    };
  };

  const auto lower_min = minimize_radius(objective(source.lower(term.q)),
                                         seed_radius(problem));
  const auto upper_min = minimize_radius(objective(source.schrodinger(term.q)),
                                         seed_radius(problem));
  BoundReport lower{lower_min.f_star, lower_min.r_star,
                    BoundMethod::single_power_lower, std::nullopt, false};
  BoundReport upper{upper_min.f_star, upper_min.r_star,
                    BoundMethod::single_power_upper, std::nullopt, false};
  return {lower, upper};
}

BoundReport envelope_lower_convex(double beta, double m, double v,
                                  const std::function<double(double)> &w,
                                  Convexity declared,
                                  const PNumberSource &source) {
  if (declared == Convexity::concave)
    throw std::invalid_argument(
        "envelope_lower_convex: concave transforms bound from above; request "
        "envelope_upper_concave");
  if (!(beta > 0.0) || !(v > 0.0) || !(m >= 0.0))
    throw std::invalid_argument("envelope_lower_convex: need beta > 0, v > 0, m >= 0");
  const double p = source.lower(1.0);
  auto f = [beta, m, v, p, &w](double r) {
    return beta * std::sqrt(m * m + 1.0 / (r * r)) + v * w(p * r);
  };
  const auto min = minimize_radius(f, 1.0 / std::max(m, 1.0));
  return {min.f_star, min.r_star, BoundMethod::envelope_lower, std::nullopt, false};
}

BoundReport envelope_upper_concave(double beta, double m, double v,
                                   const std::function<double(double)> &w,
                                   Convexity declared,
                                   const PNumberSource &source) {
  if (declared == Convexity::convex)
    throw std::invalid_argument(
        "envelope_upper_concave: convex transforms bound from below; request "
        "envelope_lower_convex");
  if (!(beta > 0.0) || !(v > 0.0) || !(m >= 0.0))
    throw std::invalid_argument("envelope_upper_concave: need beta > 0, v > 0, m >= 0");
  const double p = source.schrodinger(1.0);
  auto f = [beta, m, v, p, &w](double r) {
    return beta * std::sqrt(m * m + 1.0 / (r * r)) + v * w(p * r);
  };
  const auto min = minimize_radius(f, 1.0 / std::max(m, 1.0));
  return {min.f_star, min.r_star, BoundMethod::envelope_upper, std::nullopt, false};
}

SubadditivityReport
sum_subadditivity_check(const Problem &problem, std::span<const double> s_grid,
                        const OracleSettings &oracle_settings,
                        const PNumberSource &source) {
  problem.validate();
  if (s_grid.empty())
    throw std::invalid_argument("sum_subadditivity_check: empty s grid");

  const auto f = lower_objective(problem, source);
  double grid_best = std::numeric_limits<double>::infinity();
  for (double s : s_grid) {
    if (!(s > 0.0))
      throw std::domain_error("sum_subadditivity_check: s values must be positive");
    grid_best = std::min(grid_best, f(1.0 / s));
  }

  SubadditivityReport report;
  report.grid_bound = grid_best;
  report.refined_bound = lower_bound(problem, source).value;
  report.oracle_energy = salpeter_ground(problem, oracle_settings).energy;
  report.margin = report.oracle_energy - report.refined_bound;
  return report;
}

} // namespace salpeter
