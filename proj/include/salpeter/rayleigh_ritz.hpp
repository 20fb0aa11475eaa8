// Variational reference solver: Rayleigh-Ritz in the s-wave three-dimensional
// harmonic-oscillator radial basis. The basis is analytic under Fourier
// transform, so the kinetic operators p^2, p and beta*sqrt(m^2+p^2) are all
// radial momentum-space integrals against the same functions; every matrix
// element is a mapped Gauss-Legendre quadrature. Energies are variational
// upper estimates that decrease monotonically with basis dimension.
#ifndef SALPETER_RAYLEIGH_RITZ_HPP
#define SALPETER_RAYLEIGH_RITZ_HPP

#include <span>

#include "salpeter/hamiltonian.hpp"
#include "salpeter/kinetic_potential.hpp"

namespace salpeter {

struct OracleSettings {
  int basis_dim = 25;
  double scale = 1.0;      // basis length; seed of the scale search when auto
  bool scale_auto = true;  // golden-section on ln(scale), minimizing the energy
  int quadrature_order = 200;
};

struct SpectralResult {
  double energy = 0.0;
  // Basis-truncation indicator: energy change from the leading
  // (basis_dim - 5)-dimensional subspace to the full one, at fixed scale.
  double residual = 0.0;
  OracleSettings settings_used; // scale and quadrature order actually applied
};

// Ground energy of p^2 + v_overall * V.
SpectralResult schrodinger_ground(const PotentialSum &potential,
                                  double v_overall,
                                  const OracleSettings &settings = {});

// Ground energy of p + V. Requires a confining contribution; a pure Coulomb
// potential is refused (p - a/r has no discrete spectrum), and an attractive
// Coulomb coefficient must stay below 2/pi for boundedness.
SpectralResult ultrarelativistic_ground(const PotentialSum &potential,
                                        const OracleSettings &settings = {});

// Ground energy of beta*sqrt(m^2 + p^2) + V for a validated Problem.
SpectralResult salpeter_ground(const Problem &problem,
                               const OracleSettings &settings = {});

enum class KineticOperator { p, p_squared, salpeter };

// Samples F(v), the ground energy of K + v*base, over the coupling grid and
// returns it as a validated concave CouplingCurve. m and beta only enter for
// the salpeter kinetic operator.
CouplingCurve coupling_curve(KineticOperator kinetic, const PotentialSum &base,
                             std::span<const double> v_grid,
                             const OracleSettings &settings = {},
                             double m = 0.0, double beta = 1.0);

} // namespace salpeter

#endif
