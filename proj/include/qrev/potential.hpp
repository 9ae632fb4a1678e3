#pragma once

#include "qrev/types.hpp"

#include <string>

namespace qrev {

enum class Family { ISW, PT, RM };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Potential definition and basis-size request.  Conventions: hbar = 1, the
/// stationary equation is -phi'' + V phi = E phi, and the ground state energy
/// is zero for every family.  The well depth is A = (m + detuning) * alpha;
/// detuning is nonzero only for RM.
struct PotentialSpec {
  Family family = Family::ISW;
  Real alpha = 1.0;      // inverse length scale (ISW: alpha = pi / width)
  int m = 1;             // integer part of A / alpha
  Real detuning = 0.0;   // r in A / alpha = m + r, RM only, in [0, 1/2]
  Real width = 1.0;      // ISW well width L
  int n_modes = 1;       // number of retained bound states N

  bool operator==(const PotentialSpec&) const = default;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const PotentialSpec& spec);

/// ISW uses alpha = pi / width so t_R = 2*pi/alpha^2 holds for all families.
Real effective_alpha(const PotentialSpec& spec);

/// Number of bound states the family supports (RM: m; PT/ISW: unbounded -> INT_MAX).
int bound_state_limit(const PotentialSpec& spec);

/// Dimensionless level E_n / alpha^2:
///   PT/ISW: n^2 + 2(m + r) n     (ISW has m = 1, r = 0)
///   RM:     2(m + r) n - n^2
/// Integer-valued whenever r = 0, which makes revival phases exact.
Real level_number(const PotentialSpec& spec, int n);

/// Energy E_n = alpha^2 * level_number(spec, n), E_0 = 0, strictly increasing.
Real energy(const PotentialSpec& spec, int n);

/// Potential value with the zero-ground-state offset convention:
///   PT: -A^2 + A(A - alpha) sec^2(alpha x)   on |alpha x| < pi/2
///   RM:  A^2 - A(A + alpha) sech^2(alpha x)  on the real line
///   ISW: 0 inside |x| < L/2, +infinity at and beyond the walls
/// Throws std::domain_error for x outside the PT domain.
Real potential_value(const PotentialSpec& spec, Real x);

struct Domain {
  Real x_min;
  Real x_max;
};

/// Spatial domain: PT |x| < pi/(2 alpha), ISW |x| < L/2, RM truncated at
/// |x| = 25/alpha (tail mass is below double precision there).
Domain domain(const PotentialSpec& spec);

inline Real revival_time(const PotentialSpec& spec) {
  const Real a = effective_alpha(spec);
  return 2.0 * kPi / (a * a);
}

/// m entering the level formula; ISW behaves as m = 1 (levels n^2 + 2n).
inline int effective_m(const PotentialSpec& spec) { return spec.family == Family::ISW ? 1 : spec.m; }

/// theta = (-1)^m, the sign entering the quarter-revival cat coefficients.
inline int theta_sign(const PotentialSpec& spec) { return (effective_m(spec) % 2 == 0) ? 1 : -1; }

}  // namespace qrev
