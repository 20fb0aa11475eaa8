#include "salpeter/kinetic_potential.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "salpeter/numerics.hpp"

namespace salpeter {

using numerics::ln_gamma;

double p_lower(double q, double e1) {
  if (q == 0.0 || q <= -1.0)
    throw std::domain_error("p_lower: needs q > -1 and q != 0 (log and Coulomb "
                            "factors have their own routines)");
  return std::pow(std::abs(e1 / (1.0 + q)), 1.0 + 1.0 / q) * std::abs(q);
}

double p_schrodinger(double q, double e2) {
  if (q == 0.0 || q <= -2.0)
    throw std::domain_error("p_schrodinger: needs q > -2 and q != 0");
  return std::pow(std::abs(e2 / (1.0 + q / 2.0)), 0.5 + 1.0 / q) *
         std::sqrt(std::abs(q / 2.0));
}

double p_log(KineticKind kind, double e0) {
  switch (kind) {
  case KineticKind::relativistic_lower:
    return std::exp(e0 - 1.0);
  case KineticKind::schrodinger:
    return std::exp(e0 - 0.5) / std::sqrt(2.0);
  default:
    throw std::domain_error("p_log: variational log factor is p_variational_log");
  }
}

double p_variational(double nu, double q) {
  if (!(nu > 0.0))
    throw std::domain_error("p_variational: nu must be positive");
  if (q == 0.0)
    throw std::domain_error("p_variational: q = 0 is p_variational_log");
  if (!(q > -3.0))
    throw std::domain_error("p_variational: needs q > -3");
  const double lg3 = ln_gamma(3.0 / nu);
  const double ln_p = std::log(nu / 2.0) +
                      0.5 * (ln_gamma(2.0 + 1.0 / nu) - lg3) +
                      (ln_gamma((q + 3.0) / nu) - lg3) / q;
  return std::exp(ln_p);
}

double p_variational_log(double nu) {
  if (!(nu > 0.0))
    throw std::domain_error("p_variational_log: nu must be positive");
  const double lg3 = ln_gamma(3.0 / nu);
  return (nu / 2.0) * std::exp(0.5 * (ln_gamma(2.0 + 1.0 / nu) - lg3) +
                               numerics::digamma(3.0 / nu) / nu);
}

double coulomb_lower_energy(double v, double m) {
  return m * coulomb_running_p(v);
}

double coulomb_running_p(double v) {
  if (!(v >= 0.0) || v >= 0.5)
    throw CouplingTooLargeError(
        "coulomb_running_p: coupling must satisfy 0 <= v < 1/2 (stricter than "
        "the 2/pi operator limit; the self-adjoint extension needs it)");
  return std::sqrt(0.5 * (1.0 + std::sqrt(1.0 - 4.0 * v * v)));
}

double PNumberSet::factor(double q) const {
  auto it = values.find(q);
  if (it == values.end())
    throw std::invalid_argument("PNumberSet: no P factor stored for this exponent");
  return it->second;
}

double PNumberSet::log_factor() const {
  if (!log_value)
    throw std::invalid_argument("PNumberSet: no log-term P factor stored");
  return *log_value;
}

namespace {
// e1/p1 rounded down, e2/p2 rounded up. p1 at q = 2 is the downward rounding
// of the exact 2*(e/3)^(3/2) with e the q = 1 Schrodinger energy.
constexpr std::array<ReferenceEntry, 4> kReference = {{
    {-1.0, false, 0.0, 0.0, -0.25, 1.0},
    {0.0, true, 1.06365, 1.0657, 1.0443325, 1.218669},
    {1.0, true, 2.23225, 1.2457, 2.3381075, 1.376084},
    {2.0, true, 2.338107, 1.376083, 3.0, 1.5},
}};
} // namespace

std::span<const ReferenceEntry> reference_table() { return kReference; }

const ReferenceEntry *reference_entry(double q) {
  for (const auto &e : kReference)
    if (e.q == q)
      return &e;
  return nullptr;
}

CouplingCurve::CouplingCurve(std::vector<double> couplings,
                             std::vector<double> energies)
    : v_(std::move(couplings)), f_(std::move(energies)) {
  if (v_.size() != f_.size() || v_.size() < 3)
    throw InvalidCurveError("CouplingCurve: need at least 3 (v, F) samples");
  for (size_t i = 0; i + 1 < v_.size(); ++i)
    if (!(v_[i] > 0.0) || !(v_[i + 1] > v_[i]))
      throw InvalidCurveError("CouplingCurve: couplings must be positive and increasing");
  double scale = 1.0;
  for (double f : f_)
    scale = std::max(scale, std::abs(f));
  for (size_t i = 1; i + 1 < v_.size(); ++i) {
    const double h0 = v_[i] - v_[i - 1];
    const double h1 = v_[i + 1] - v_[i];
    // divided second difference; concave curves keep it non-positive
    const double d2 = 2.0 * (h0 * f_[i + 1] - (h0 + h1) * f_[i] + h1 * f_[i - 1]) /
                      (h0 * h1 * (h0 + h1));
    if (d2 > 1e-8 * scale)
      throw InvalidCurveError("CouplingCurve: concavity violated beyond tolerance");
  }
}

std::vector<KineticPotentialSample>
kinetic_potential_from_curve(const CouplingCurve &curve) {
  const auto &v = curve.couplings();
  const auto &f = curve.energies();
  std::vector<KineticPotentialSample> out;
  out.reserve(curve.size() - 2);
  double s_scale = 0.0;
  for (size_t i = 1; i + 1 < curve.size(); ++i) {
    const double h0 = v[i] - v[i - 1];
    const double h1 = v[i + 1] - v[i];
    // non-uniform three-point derivative at v[i]
    const double fp = (h0 * h0 * f[i + 1] - h1 * h1 * f[i - 1] +
                       (h1 * h1 - h0 * h0) * f[i]) /
                      (h0 * h1 * (h0 + h1));
    const double s = f[i] - v[i] * fp;
    out.push_back({s, fp});
    s_scale = std::max(s_scale, std::abs(s));
  }
  double f_scale = 0.0;
  for (double fi : f)
    f_scale = std::max(f_scale, std::abs(fi));
  if (s_scale <= 1e-10 * std::max(f_scale, 1.0))
    throw InvalidCurveError(
        "kinetic_potential_from_curve: curve is linear in v (no kinetic part)");
  return out;
}

CurveEnergy energy_from_kinetic_potential(
    std::span<const KineticPotentialSample> samples, double v) {
  if (samples.size() < 3)
    throw std::invalid_argument("energy_from_kinetic_potential: need >= 3 samples");
  if (!(v > 0.0))
    throw std::domain_error("energy_from_kinetic_potential: coupling must be positive");

  size_t best = 0;
  double best_val = samples[0].s + v * samples[0].hbar;
  for (size_t i = 1; i < samples.size(); ++i) {
    const double g = samples[i].s + v * samples[i].hbar;
    if (g < best_val) {
      best_val = g;
      best = i;
    }
  }
  if (best == 0 || best + 1 == samples.size())
    return {best_val, true};

  // Parabola through (s, g) at the best sample and its neighbours.
  const double s0 = samples[best - 1].s, s1 = samples[best].s, s2 = samples[best + 1].s;
  const double g0 = samples[best - 1].s + v * samples[best - 1].hbar;
  const double g1 = best_val;
  const double g2 = samples[best + 1].s + v * samples[best + 1].hbar;
  const double d01 = (g1 - g0) / (s1 - s0);
  const double d12 = (g2 - g1) / (s2 - s1);
  const double curv = (d12 - d01) / (s2 - s0); // half the second derivative
  if (curv > 0.0) {
    const double s_min = 0.5 * (s0 + s1 - d01 / curv);
    const double lo = std::min(s0, s2), hi = std::max(s0, s2);
    if (s_min >= lo && s_min <= hi) {
      const double refined =
          g0 + d01 * (s_min - s0) + curv * (s_min - s0) * (s_min - s1);
      best_val = std::min(best_val, refined);
    }
  }
  return {best_val, false};
}

} // namespace salpeter
