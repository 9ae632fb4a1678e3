#include "qrev/propagation.hpp"

#include "qrev/parallel.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qrev {

Vector SpatialGrid::points() const {
  Vector p(n_points);
  for (int i = 0; i < n_points; ++i) p[i] = x(i);
  return p;
}

SpatialGrid default_grid(const EigenBasis& basis, int n_points) {
  Real lo = basis.x_min;
  Real hi = basis.x_max;
  if (basis.spec.family == Family::PT) {
    const Real clamp = 1e-9 / effective_alpha(basis.spec);
    lo += clamp;
    hi -= clamp;
  }
  return {lo, hi, n_points};
}

void validate_grid(const EigenBasis& basis, const SpatialGrid& grid) {
  if (grid.n_points < 2) throw std::invalid_argument("grid.points: must be >= 2");
  if (!(grid.x_min < grid.x_max)) throw std::invalid_argument("grid: x_min must be < x_max");
  if (basis.spec.family == Family::PT) {
    if (grid.x_min <= basis.x_min || grid.x_max >= basis.x_max)
      throw std::invalid_argument("grid: outside the basis domain");
  } else if (basis.spec.family == Family::ISW) {
    if (grid.x_min < basis.x_min || grid.x_max > basis.x_max)
      throw std::invalid_argument("grid: outside the basis domain");
  }
}

SampledBasis sample_basis(const EigenBasis& basis, const SpatialGrid& grid) {
  validate_grid(basis, grid);
  SampledBasis table;
  table.grid = grid;
  table.values.resize(grid.n_points, basis.spec.n_modes);
  parallel_for(grid.n_points, [&](long i) {
    table.values.row(i) = eigenfunctions_at(basis, grid.x(static_cast<int>(i))).transpose();
  });
  return table;
}

CoefficientSet evolve_coefficients(const CoefficientSet& c, const EigenBasis& basis, Real tau) {
  if (c.spec != basis.spec) throw std::invalid_argument("evolve_coefficients: basis mismatch");
  CoefficientSet out = c;
  for (int n = 0; n < c.amplitudes.size(); ++n) {
    // E_n t = 2 pi * nu_n * tau; reducing nu*tau mod 1 keeps the argument small,
    // so integer-level phases at rational tau are exact (no drift at revivals).
    const Real cycles = std::fmod(level_number(basis.spec, n) * tau, 1.0);
    const Real angle = -2.0 * kPi * cycles;
    out.amplitudes[n] *= Complex(std::cos(angle), std::sin(angle));
  }
  return out;
}

WaveField sample_wavefunction(const CoefficientSet& c, const EigenBasis& basis,
                              const SpatialGrid& grid, Real tau) {
  return sample_wavefunction(c, sample_basis(basis, grid), tau);
}

WaveField sample_wavefunction(const CoefficientSet& c, const SampledBasis& table, Real tau) {
  if (table.values.cols() != c.amplitudes.size())
    throw std::invalid_argument("sample_wavefunction: coefficient/table size mismatch");
  WaveField field;
  field.grid = table.grid;
  field.tau = tau;
  field.values = table.values * c.amplitudes;
  return field;
}

Vector probability_density(const WaveField& field) {
  return field.values.cwiseAbs2();
}

Real field_norm2(const WaveField& field) {
  const Vector rho = probability_density(field);
  Real s = rho.sum() - 0.5 * (rho[0] + rho[rho.size() - 1]);
  return s * field.grid.dx();
}

void write_csv(const WaveField& field, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "x,re_psi,im_psi,rho\n");
  for (int i = 0; i < field.grid.n_points; ++i) {
    const Complex v = field.values[i];
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", field.grid.x(i), v.real(), v.imag(),
                 std::norm(v));
  }
  std::fclose(f);
}

}  // namespace qrev
