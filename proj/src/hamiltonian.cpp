#include "salpeter/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

namespace salpeter {

PotentialSum &PotentialSum::add_power(double q, double a) {
  if (q == 0.0)
    throw std::invalid_argument("PotentialSum: q = 0 is the log term, use set_log");
  if (!(q > -2.0))
    throw UnsupportedTermError("PotentialSum: exponents must satisfy q > -2");
  if (a < 0.0)
    throw std::invalid_argument("PotentialSum: coefficients must be non-negative");
  if (a == 0.0)
    return *this;
  for (const auto &t : terms_)
    if (t.q == q)
      throw std::invalid_argument("PotentialSum: duplicate exponent");
  terms_.push_back({q, a});
  std::sort(terms_.begin(), terms_.end(),
            [](const PowerTerm &x, const PowerTerm &y) { return x.q < y.q; });
  return *this;
}

PotentialSum &PotentialSum::set_log(double coefficient) {
  if (coefficient < 0.0)
    throw std::invalid_argument("PotentialSum: log coefficient must be non-negative");
  log_coefficient_ = coefficient;
  return *this;
}

bool PotentialSum::has_coulomb() const { return coulomb_coefficient() > 0.0; }

double PotentialSum::coulomb_coefficient() const {
  for (const auto &t : terms_)
    if (t.q == -1.0)
      return t.a;
  return 0.0;
}

bool PotentialSum::has_confining_term() const {
  if (log_coefficient_ > 0.0)
    return true;
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const PowerTerm &t) { return t.q > 0.0; });
}

bool PotentialSum::is_pure_coulomb() const {
  return terms_.size() == 1 && terms_[0].q == -1.0 && log_coefficient_ == 0.0;
}

double PotentialSum::evaluate(double r) const {
  double v = 0.0;
  for (const auto &t : terms_)
    v += t.a * (t.q > 0.0 ? 1.0 : -1.0) * std::pow(r, t.q);
  if (log_coefficient_ != 0.0)
    v += log_coefficient_ * std::log(r);
  return v;
}

double Problem::coulomb_coupling() const {
  return potential.coulomb_coefficient() / beta;
}

void Problem::validate() const {
  if (!(beta > 0.0))
    throw std::invalid_argument("Problem: beta must be positive");
  if (!(m >= 0.0))
    throw std::invalid_argument("Problem: mass must be non-negative");
  if (potential.empty())
    throw std::invalid_argument("Problem: potential coefficients are all zero");
  if (!potential.has_confining_term() && !potential.is_pure_coulomb())
    throw std::invalid_argument("Problem: need a confining term or a pure Coulomb potential");
  const double v = coulomb_coupling();
  if (v >= 0.5)
    throw CouplingTooLargeError(
        "Problem: Coulomb coupling a(-1)/beta = " + std::to_string(v) +
        " is not below 1/2, the validity limit of the relativistic Coulomb lower bound");
}

} // namespace salpeter
