#pragma once

#include "qrev/potential.hpp"
#include "qrev/types.hpp"

namespace qrev {

/// Closed-form energies plus quadrature-normalized eigenfunctions for one
/// PotentialSpec.  Immutable after construction; safe to share across threads.
struct EigenBasis {
  PotentialSpec spec;
  Vector energies;        // strictly increasing, energies[0] == 0
  Vector norm_constants;  // N_n such that phi_n = N_n * raw_n has unit L2 norm
  Real x_min = 0.0;
  Real x_max = 0.0;
};

/// Energies in closed form, normalization constants by panel-refined
/// Gauss-Legendre quadrature (one code path for integer and detuned lambda).
EigenBasis build_basis(const PotentialSpec& spec);

/// Normalized eigenfunction phi_n(x).  Parity: phi_n(-x) = (-1)^n phi_n(x).
///   PT:  N_n cos^m(alpha x) C_n^(m)(sin alpha x)
///   RM:  N_n sech^(lambda-n)(alpha x) C_n^(lambda-n+1/2)(tanh alpha x), lambda = m + r
///   ISW: sqrt(2/L) cos((n+1) pi x / L) for even n, sin for odd n
Real eval_eigenfunction(const EigenBasis& basis, int n, Real x);

/// phi_0(x) .. phi_{N-1}(x) in one call (shared recurrences where possible).
Vector eigenfunctions_at(const EigenBasis& basis, Real x);

}  // namespace qrev
