#include "salpeter/rayleigh_ritz.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <mutex>

#include "salpeter/numerics.hpp"

namespace salpeter {

namespace {

using numerics::Matrix;

constexpr double kTwoOverPi = 0.63661977236758134308;
// Beyond this value of x = (r/scale)^2 the weight exp(-x/2) underflows and
// the basis functions vanish identically in double precision.
constexpr double kUnderflowX = 1400.0;

void check_settings(const OracleSettings &s) {
  if (s.basis_dim < 2 || s.basis_dim > 128)
    throw std::domain_error("OracleSettings: basis_dim must be in [2, 128]");
  if (!(s.scale > 0.0))
    throw std::domain_error("OracleSettings: scale must be positive");
  if (s.quadrature_order < 50)
    throw std::domain_error("OracleSettings: quadrature_order must be >= 50");
}

// The requested order is a floor; resolving n radial oscillations of the
// highest basis function through the t/(1-t) map needs order ~ 16 n.
int effective_order(const OracleSettings &s) {
  return std::max(s.quadrature_order, 16 * s.basis_dim);
}

const numerics::QuadratureRule &unit_rule(int order) {
  static std::map<int, numerics::QuadratureRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(order);
  if (it == cache.end())
    it = cache.emplace(order, numerics::gauss_legendre(order, 0.0, 1.0)).first;
  return it->second;
}

// Normalized weighted Laguerre values y_n(x) = c_n L_n^{1/2}(x) exp(-x/2)
// for n = 0..nmax; the radial functions are sqrt(2/scale^3) * y_n((r/scale)^2).
void weighted_laguerre(int nmax, double x, std::vector<double> &out) {
  out.resize(nmax + 1);
  const double y0 = std::exp(-0.5 * x) / std::sqrt(0.88622692545275801365); // Gamma(3/2)
  out[0] = y0;
  if (nmax >= 1)
    out[1] = (1.5 - x) * y0 / std::sqrt(1.5);
  for (int n = 1; n < nmax; ++n) {
    const double a = (2.0 * n + 1.5 - x) * out[n];
    const double b = std::sqrt(n * (n + 0.5)) * out[n - 1];
    out[n + 1] = (a - b) / std::sqrt((n + 1.0) * (n + 1.5));
  }
}

// sum_k w_k k^2 f(k) R_n(k) R_m(k) over the semi-infinite map k = scale*t/(1-t).
// With alternate = true the parity sign (-1)^(n+m) of the momentum-space
// functions is folded in.
Matrix radial_form(int dim, double scale, int order,
                   const std::function<double(double)> &f, bool alternate) {
  const auto &rule = unit_rule(order);
  Matrix m(dim);
  std::vector<double> y;
  for (int k = 0; k < order; ++k) {
    const double t = rule.nodes[k];
    const double r = scale * t / (1.0 - t);
    const double x = (r / scale) * (r / scale);
    if (x >= kUnderflowX)
      continue;
    const double jac = scale / ((1.0 - t) * (1.0 - t));
    const double w = rule.weights[k] * jac * r * r * f(r);
    if (w == 0.0)
      continue;
    weighted_laguerre(dim - 1, x, y);
    const double norm = 2.0 / (scale * scale * scale);
    for (int i = 0; i < dim; ++i) {
      const double wi = w * norm * y[i];
      for (int j = i; j < dim; ++j)
        m(i, j) += wi * y[j];
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < i; ++j)
      m(i, j) = m(j, i);
  if (alternate)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        if ((i + j) % 2)
          m(i, j) = -m(i, j);
  return m;
}

Matrix assemble(int dim, double scale, int order,
                const std::function<double(double)> &kinetic,
                const std::function<double(double)> &potential) {
  Matrix h = radial_form(dim, 1.0 / scale, order, kinetic, true);
  const Matrix v = radial_form(dim, scale, order, potential, false);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      h(i, j) += v(i, j);
  return h;
}

double smallest_of(const Matrix &h, int dim) {
  Matrix sub(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      sub(i, j) = h(i, j);
  return numerics::symmetric_eigen_smallest(sub).value;
}

struct ScaleSolve {
  double scale;
  double energy;
};

double energy_at(int dim, double scale, int order,
                 const std::function<double(double)> &kinetic,
                 const std::function<double(double)> &potential) {
  const Matrix h = assemble(dim, scale, order, kinetic, potential);
  const double e = numerics::symmetric_eigen_smallest(h).value;
  return std::isfinite(e) ? e : std::numeric_limits<double>::infinity();
}

ScaleSolve optimize_scale(int dim, double seed, int order,
                          const std::function<double(double)> &kinetic,
                          const std::function<double(double)> &potential) {
  auto f = [&](double u) { return energy_at(dim, std::exp(u), order, kinetic, potential); };
  const double step = std::log(2.0);
  double um = std::log(seed);
  double fm = f(um);
  double ua = um - step, uc = um + step;
  double fa = f(ua), fc = f(uc);
  int walked = 0;
  while (fa < fm && walked++ < 60) {
    uc = um; fc = fm; um = ua; fm = fa;
    ua = um - step;
    fa = f(ua);
  }
  while (fc < fm && walked++ < 60) {
    ua = um; fa = fm; um = uc; fm = fc;
    uc = um + step;
    fc = f(uc);
  }
  const double golden = 0.61803398874989485;
  double a = ua, c = uc;
  double x1 = c - golden * (c - a), x2 = a + golden * (c - a);
  double f1 = f(x1), f2 = f(x2);
  while (c - a > 1e-4) {
    if (f1 < f2) {
      c = x2; x2 = x1; f2 = f1;
      x1 = c - golden * (c - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + golden * (c - a);
      f2 = f(x2);
    }
  }
  const double u = f1 < f2 ? x1 : x2;
  return {std::exp(u), std::min(f1, f2)};
}

SpectralResult solve(const OracleSettings &settings,
                     const std::function<double(double)> &kinetic,
                     const std::function<double(double)> &potential) {
  check_settings(settings);
  const int order = effective_order(settings);
  double scale = settings.scale;
  if (settings.scale_auto)
    scale = optimize_scale(settings.basis_dim, settings.scale, order, kinetic, potential).scale;

  const Matrix h = assemble(settings.basis_dim, scale, order, kinetic, potential);
  const double energy = numerics::symmetric_eigen_smallest(h).value;

  double residual = 0.0;
  const int sub = settings.basis_dim - 5;
  if (sub >= 2)
    residual = std::max(0.0, smallest_of(h, sub) - energy);

  SpectralResult result;
  result.energy = energy;
  result.residual = residual;
  result.settings_used = settings;
  result.settings_used.scale = scale;
  result.settings_used.quadrature_order = order;
  return result;
}

std::function<double(double)> potential_fn(const PotentialSum &pot, double factor) {
  return [pot, factor](double r) { return factor * pot.evaluate(r); };
}

} // namespace

SpectralResult schrodinger_ground(const PotentialSum &potential, double v_overall,
                                  const OracleSettings &settings) {
  if (potential.empty())
    throw std::domain_error("schrodinger_ground: potential coefficients are all zero");
  if (!(v_overall > 0.0))
    throw std::domain_error("schrodinger_ground: overall coupling must be positive");
  return solve(settings, [](double p) { return p * p; },
               potential_fn(potential, v_overall));
}

SpectralResult ultrarelativistic_ground(const PotentialSum &potential,
                                        const OracleSettings &settings) {
  if (potential.empty())
    throw std::domain_error("ultrarelativistic_ground: potential coefficients are all zero");
  if (potential.is_pure_coulomb())
    throw NoDiscreteSpectrumError(
        "ultrarelativistic_ground: p - a/r has no discrete spectrum");
  if (potential.coulomb_coefficient() >= kTwoOverPi)
    throw CouplingTooLargeError(
        "ultrarelativistic_ground: Coulomb coefficient must stay below 2/pi");
  return solve(settings, [](double p) { return p; }, potential_fn(potential, 1.0));
}

SpectralResult salpeter_ground(const Problem &problem,
                               const OracleSettings &settings) {
  problem.validate();
  const double m = problem.m;
  const double beta = problem.beta;
  return solve(settings,
               [m, beta](double p) { return beta * std::sqrt(m * m + p * p); },
               potential_fn(problem.potential, 1.0));
}

CouplingCurve coupling_curve(KineticOperator kinetic, const PotentialSum &base,
                             std::span<const double> v_grid,
                             const OracleSettings &settings, double m,
                             double beta) {
  std::vector<double> vs(v_grid.begin(), v_grid.end());
  std::vector<double> es;
  es.reserve(vs.size());
  for (double v : vs) {
    switch (kinetic) {
    case KineticOperator::p_squared:
      es.push_back(schrodinger_ground(base, v, settings).energy);
      break;
    case KineticOperator::p: {
      PotentialSum scaled;
      for (const auto &t : base.power_terms())
        scaled.add_power(t.q, v * t.a);
      scaled.set_log(v * base.log_coefficient());
      es.push_back(ultrarelativistic_ground(scaled, settings).energy);
      break;
    }
    case KineticOperator::salpeter: {
      Problem problem;
      problem.beta = beta;
      problem.m = m;
      for (const auto &t : base.power_terms())
        problem.potential.add_power(t.q, v * t.a);
      problem.potential.set_log(v * base.log_coefficient());
      es.push_back(salpeter_ground(problem, settings).energy);
      break;
    }
    }
  }
  return CouplingCurve(std::move(vs), std::move(es));
}

} // namespace salpeter
