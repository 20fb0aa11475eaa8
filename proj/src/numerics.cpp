#include "salpeter/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace salpeter::numerics {

namespace {

constexpr double kHalfLog2Pi = 0.91893853320467274178; // ln(2*pi)/2

// Stirling series coefficients B_{2k}/(2k(2k-1)), k = 1..8.
constexpr double kStirling[] = {
    1.0 / 12.0,   -1.0 / 360.0,    1.0 / 1260.0,    -1.0 / 1680.0,
    1.0 / 1188.0, -691.0 / 360360.0, 1.0 / 156.0,   -3617.0 / 122400.0,
};

double ln_gamma_stirling(double x) {
  const double z = 1.0 / (x * x);
  double series = 0.0;
  double pow = 1.0 / x;
  for (double c : kStirling) {
    series += c * pow;
    pow *= z;
  }
  return (x - 0.5) * std::log(x) - x + kHalfLog2Pi + series;
}

} // namespace

double ln_gamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("ln_gamma: argument must be positive");
  double shift = 0.0;
  double y = x;
  while (y < 12.0) {
    shift += std::log(y);
    y += 1.0;
  }
  return ln_gamma_stirling(y) - shift;
}

double digamma(double x) {
  if (!(x > 0.0))
    throw std::domain_error("digamma: argument must be positive");
  double acc = 0.0;
  double y = x;
  while (y < 10.0) {
    acc -= 1.0 / y;
    y += 1.0;
  }
  // Asymptotic expansion: ln y - 1/(2y) - sum B_{2k}/(2k y^{2k}).
  const double z = 1.0 / (y * y);
  static constexpr double c[] = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0,
      1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  double series = 0.0;
  double pow = z;
  for (double ck : c) {
    series += ck * pow;
    pow *= z;
  }
  return acc + std::log(y) - 0.5 / y - series;
}

MinResult minimize_unimodal(const std::function<double(double)> &f,
                            const Bracket &bracket, double rel_tol) {
  if (!(bracket.lo > 0.0) || !(bracket.hi > bracket.lo))
    throw BracketingError("minimize_unimodal: need 0 < lo < hi");
  double a = std::log(bracket.lo);
  double c = std::log(bracket.hi);
  const double fa = f(bracket.lo);
  const double fc = f(bracket.hi);

  // The bracket invariant promises an interior dip; geometric expansion
  // places it at the log-midpoint, so probe there and at the quartiles.
  const double ends = std::min(fa, fc);
  bool dipped = false;
  for (double t : {0.5, 0.25, 0.75}) {
    if (f(std::exp(a + t * (c - a))) < ends) {
      dipped = true;
      break;
    }
  }
  if (!dipped)
    throw BracketingError("minimize_unimodal: no interior point below both endpoints");

  const double golden = 0.61803398874989485;
  double x1 = c - golden * (c - a);
  double x2 = a + golden * (c - a);
  double f1 = f(std::exp(x1));
  double f2 = f(std::exp(x2));
  const double utol = std::max(rel_tol, 1e-15);
  while (c - a > utol) {
    if (f1 < f2) {
      c = x2;
      x2 = x1;
      f2 = f1;
      x1 = c - golden * (c - a);
      f1 = f(std::exp(x1));
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + golden * (c - a);
      f2 = f(std::exp(x2));
    }
  }
  const double u = f1 < f2 ? x1 : x2;
  const double r = std::exp(u);
  return {r, f(r)};
}

Bracket expand_bracket(const std::function<double(double)> &f, double seed) {
  if (!(seed > 0.0) || !std::isfinite(f(seed)))
    throw BracketingError("expand_bracket: seed must be positive with finite objective");
  const double step = std::log(2.0);
  double um = std::log(seed);
  double ua = um - step;
  double uc = um + step;
  auto eval = [&f](double u) {
    const double v = f(std::exp(u));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  double fm = eval(um);
  double fa = eval(ua);
  double fc = eval(uc);
  int expansions = 0;
  while (!(fm < fa && fm < fc)) {
    if (++expansions > 200)
      throw UnboundedObjectiveError("expand_bracket: no interior minimum within 200 expansions");
    if (fa <= fm) { // still descending to the left
      uc = um;
      fc = fm;
      um = ua;
      fm = fa;
      ua = um - step;
      fa = eval(ua);
    } else { // descending to the right
      ua = um;
      fa = fm;
      um = uc;
      fm = fc;
      uc = um + step;
      fc = eval(uc);
    }
  }
  return {std::exp(ua), std::exp(uc)};
}

QuadratureRule gauss_legendre(int order, double lo, double hi) {
  if (order < 2)
    throw std::domain_error("gauss_legendre: order must be >= 2");
  if (!(lo < hi))
    throw std::domain_error("gauss_legendre: need lo < hi");

  QuadratureRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);

  const int half = (order + 1) / 2;
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < half; ++i) {
    // Chebyshev initial guess, then Newton on P_n.
    double x = -std::cos(pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15 * std::max(1.0, std::abs(x)))
        break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[order - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  if (order % 2 == 1)
    rule.nodes[order / 2] = 0.0;

  const double mid = 0.5 * (lo + hi);
  const double hw = 0.5 * (hi - lo);
  for (int i = 0; i < order; ++i) {
    rule.nodes[i] = mid + hw * rule.nodes[i];
    rule.weights[i] *= hw;
  }
  return rule;
}

EigenPair symmetric_eigen_smallest(const Matrix &a) {
  const int n = a.size();
  if (n < 1 || n > 128)
    throw std::domain_error("symmetric_eigen_smallest: size must be in [1, 128]");

  double scale = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      scale = std::max(scale, std::abs(a(i, j)));
  if (scale == 0.0)
    scale = 1.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > 1e-12 * scale)
        throw std::domain_error("symmetric_eigen_smallest: matrix is not symmetric");

  Matrix m = a;
  std::vector<std::vector<double>> vec(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i)
    vec[i][i] = 1.0;

  auto off_norm = [&m, n]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        s += m(i, j) * m(i, j);
    return std::sqrt(2.0 * s);
  };

  const double tol = 1e-13 * std::max(scale, 1e-300) * n;
  for (int sweep = 0; sweep < 60 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m(p, q);
        if (std::abs(apq) <= 1e-300)
          continue;
        const double theta = (m(q, q) - m(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double cth = 1.0 / std::sqrt(t * t + 1.0);
        const double sth = t * cth;
        for (int k = 0; k < n; ++k) {
          const double akp = m(k, p), akq = m(k, q);
          m(k, p) = cth * akp - sth * akq;
          m(k, q) = sth * akp + cth * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = m(p, k), aqk = m(q, k);
          m(p, k) = cth * apk - sth * aqk;
          m(q, k) = sth * apk + cth * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = vec[k][p], vkq = vec[k][q];
          vec[k][p] = cth * vkp - sth * vkq;
          vec[k][q] = sth * vkp + cth * vkq;
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i < n; ++i)
    if (m(i, i) < m(best, best))
      best = i;

  EigenPair result;
  result.value = m(best, best);
  result.vector.resize(n);
  double norm = 0.0;
  for (int i = 0; i < n; ++i) {
    result.vector[i] = vec[i][best];
    norm += result.vector[i] * result.vector[i];
  }
  norm = std::sqrt(norm);
  for (double &v : result.vector)
    v /= norm;
  return result;
}

} // namespace salpeter::numerics
