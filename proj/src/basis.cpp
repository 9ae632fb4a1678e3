#include "qrev/basis.hpp"

#include "qrev/gegenbauer.hpp"
#include "qrev/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qrev {

namespace {

// Unnormalized eigenfunction.  The decaying prefactor and the polynomial are
// evaluated separately and multiplied last, so sec^2-driven growth near the
// PT walls never enters an intermediate.
Real raw_eigenfunction(const PotentialSpec& spec, int n, Real x) {
  const Real a = effective_alpha(spec);
  switch (spec.family) {
    case Family::ISW: {
      const Real arg = (n + 1) * kPi * x / spec.width;
      return (n % 2 == 0) ? std::cos(arg) : std::sin(arg);
    }
    case Family::PT: {
      const Real pre = std::pow(std::cos(a * x), spec.m);
      return pre * gegenbauer<Real>(n, static_cast<Real>(spec.m), std::sin(a * x));
    }
    case Family::RM: {
      const Real lambda = spec.m + spec.detuning;
      const Real pre = std::pow(1.0 / std::cosh(a * x), lambda - n);
      return pre * gegenbauer<Real>(n, lambda - n + 0.5, std::tanh(a * x));
    }
  }
  throw std::logic_error("raw_eigenfunction: bad family");
}

void check_in_domain(const EigenBasis& basis, Real x) {
  switch (basis.spec.family) {
    case Family::RM:
      return;  // whole real line
    case Family::ISW:
      // walls are ordinary zeros of the trig eigenfunctions
      if (x < basis.x_min || x > basis.x_max)
        throw std::domain_error("eval_eigenfunction: x outside domain");
      return;
    case Family::PT:
      if (x <= basis.x_min || x >= basis.x_max)
        throw std::domain_error("eval_eigenfunction: x outside domain");
      return;
  }
}

}  // namespace

EigenBasis build_basis(const PotentialSpec& spec) {
  validate(spec);
  EigenBasis basis;
  basis.spec = spec;
  const Domain dom = domain(spec);
  basis.x_min = dom.x_min;
  basis.x_max = dom.x_max;

  basis.energies.resize(spec.n_modes);
  for (int n = 0; n < spec.n_modes; ++n) basis.energies[n] = energy(spec, n);
  for (int n = 1; n < spec.n_modes; ++n) {
    if (!(basis.energies[n] > basis.energies[n - 1]))
      throw std::logic_error("build_basis: energies not strictly increasing");
  }

  basis.norm_constants.resize(spec.n_modes);
  for (int n = 0; n < spec.n_modes; ++n) {
    const auto sq = [&](Real x) {
      const Real v = raw_eigenfunction(spec, n, x);
      return v * v;
    };
    const Real norm2 = integrate_adaptive(sq, dom.x_min, dom.x_max, 1e-13, 16, 16);
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
      throw std::runtime_error("build_basis: norm quadrature failed for n=" + std::to_string(n));
    basis.norm_constants[n] = 1.0 / std::sqrt(norm2);
  }
  return basis;
}

Real eval_eigenfunction(const EigenBasis& basis, int n, Real x) {
  if (n < 0 || n >= basis.spec.n_modes) throw std::invalid_argument("eval_eigenfunction: n out of range");
  check_in_domain(basis, x);
  return basis.norm_constants[n] * raw_eigenfunction(basis.spec, n, x);
}

Vector eigenfunctions_at(const EigenBasis& basis, Real x) {
  check_in_domain(basis, x);
  const PotentialSpec& spec = basis.spec;
  const int N = spec.n_modes;
  const Real a = effective_alpha(spec);
  Vector out(N);
  switch (spec.family) {
    case Family::ISW: {
      for (int n = 0; n < N; ++n) {
        const Real arg = (n + 1) * kPi * x / spec.width;
        out[n] = (n % 2 == 0) ? std::cos(arg) : std::sin(arg);
      }
      break;
    }
    case Family::PT: {
      // One shared-lambda recurrence pass covers every mode.
      const Real pre = std::pow(std::cos(a * x), spec.m);
      gegenbauer_all<Real>(N - 1, static_cast<Real>(spec.m), std::sin(a * x), out.data());
      out *= pre;
      break;
    }
    case Family::RM: {
      // The Gegenbauer parameter depends on n, so modes are evaluated one by one.
      const Real lambda = spec.m + spec.detuning;
      const Real sech = 1.0 / std::cosh(a * x);
      const Real th = std::tanh(a * x);
      for (int n = 0; n < N; ++n) {
        out[n] = std::pow(sech, lambda - n) * gegenbauer<Real>(n, lambda - n + 0.5, th);
      }
      break;
    }
  }
  for (int n = 0; n < N; ++n) out[n] *= basis.norm_constants[n];
  return out;
}

}  // namespace qrev
