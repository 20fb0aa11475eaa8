// Self-contained numerical kernels: log-gamma, digamma, Gauss-Legendre rules,
// bracketed one-dimensional minimization in log-radius, and a small dense
// symmetric eigensolver. Everything here is a pure function of its inputs.
#ifndef SALPETER_NUMERICS_HPP
#define SALPETER_NUMERICS_HPP

#include <functional>
#include <stdexcept>
#include <vector>

namespace salpeter::numerics {

class BracketingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UnboundedObjectiveError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// ln Gamma(x) for x > 0, relative error below 1e-12 away from the zeros of
// ln Gamma (absolute error ~1e-14 there).
double ln_gamma(double x);

// psi(x) = Gamma'(x)/Gamma(x) for x > 0, absolute error below 1e-10.
double digamma(double x);

// A minimization interval 0 < lo < hi known to contain an interior point
// whose objective value is below both endpoint values.
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
};

struct MinResult {
  double r_star = 0.0;
  double f_star = 0.0;
};

// Golden-section search on u = ln r inside the bracket. rel_tol is the
// relative tolerance on the minimizer location. The bracket is probed first;
// a bracket with no interior dip raises BracketingError.
MinResult minimize_unimodal(const std::function<double(double)> &f,
                            const Bracket &bracket, double rel_tol = 1e-10);

// Expands geometrically (factor 2) in both directions from seed until an
// interior point sits below both endpoints. Objectives that never turn up
// within 200 doublings raise UnboundedObjectiveError.
Bracket expand_bracket(const std::function<double(double)> &f, double seed);

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int order = 0;
};

// Gauss-Legendre rule on [lo, hi]; exact for polynomials of degree
// 2*order - 1. order must be >= 2.
QuadratureRule gauss_legendre(int order, double lo, double hi);

// Dense square matrix, row-major, for the small symmetric problems the
// oscillator-basis solver produces.
class Matrix {
public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), data_(static_cast<size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double &operator()(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }

private:
  int n_ = 0;
  std::vector<double> data_;
};

struct EigenPair {
  double value = 0.0;
  std::vector<double> vector;
};

// Smallest eigenvalue and its unit eigenvector via cyclic Jacobi sweeps.
// Input must be symmetric to 1e-12 relative asymmetry and of size <= 128.
EigenPair symmetric_eigen_smallest(const Matrix &a);

} // namespace salpeter::numerics

#endif
