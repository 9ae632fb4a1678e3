#pragma once

#include "qrev/basis.hpp"
#include "qrev/wavepacket.hpp"

#include <string>

namespace qrev {

/// Uniform grid, endpoints included, strictly inside the basis domain for PT/ISW.
struct SpatialGrid {
  Real x_min = -0.5;
  Real x_max = 0.5;
  int n_points = 2;

  Real dx() const { return (x_max - x_min) / (n_points - 1); }
  Real x(int i) const { return x_min + (i * (x_max - x_min)) / (n_points - 1); }
  Vector points() const;
};

/// Full-domain grid for the basis; PT endpoints are clamped to
/// |alpha x| <= pi/2 - 1e-9 to stay clear of the sec^2 walls.
SpatialGrid default_grid(const EigenBasis& basis, int n_points);

void validate_grid(const EigenBasis& basis, const SpatialGrid& grid);

/// Eigenfunction table phi_n(x_i), reused across every time slice.
struct SampledBasis {
  SpatialGrid grid;
  Matrix values;  // n_points x n_modes
};

SampledBasis sample_basis(const EigenBasis& basis, const SpatialGrid& grid);

/// psi on a grid at a fixed time (time in units of t_R; absolute via basis alpha).
struct WaveField {
  SpatialGrid grid;
  CVector values;
  Real tau = 0.0;  // t / t_R
};

/// Exact unitary evolution c_n -> c_n exp(-i E_n t) with t = tau * t_R.
/// Phases are computed from the dimensionless levels reduced mod 1, so
/// integer-spectrum revivals at rational tau are exact to roundoff.
CoefficientSet evolve_coefficients(const CoefficientSet& c, const EigenBasis& basis, Real tau);

WaveField sample_wavefunction(const CoefficientSet& c, const EigenBasis& basis,
                              const SpatialGrid& grid, Real tau = 0.0);
WaveField sample_wavefunction(const CoefficientSet& c, const SampledBasis& table, Real tau = 0.0);

/// rho_i = |psi(x_i)|^2.
Vector probability_density(const WaveField& field);

/// Trapezoidal norm of |psi|^2 on the field's grid.
Real field_norm2(const WaveField& field);

/// CSV with columns x, re(psi), im(psi), rho at 17 significant digits.
void write_csv(const WaveField& field, const std::string& path);

}  // namespace qrev
