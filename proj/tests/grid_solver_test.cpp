#include "qrev/grid_solver.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace qrev;
using namespace testutil;

namespace {

// Small, fast configurations for the unit-level solver checks.
PotentialSpec small_pt() { return {Family::PT, kPi, 2, 0.0, 1.0, 12}; }
PacketRecipe small_packet() { return {"gaussian", 6.0, 2.0, 1.0, PhaseScheme::equal, 0}; }

SolverConfig cn_config(const EigenBasis& basis, int points, Real dt) {
  SolverConfig cfg;
  cfg.scheme = Scheme::crank_nicolson;
  cfg.boundary = Boundary::dirichlet;
  cfg.dt = dt;
  cfg.grid = default_grid(basis, points);
  return cfg;
}

}  // namespace

TEST_CASE("lattice dispersion: zero mode, Taylor limit, band edge") {
  CHECK(lattice_dispersion(0.0, 0.1) == 0.0);
  for (Real k : {0.01, 0.1, 0.5}) {
    const Real dx = 0.05;
    const Real exact = k * k;
    const Real got = lattice_dispersion(k, dx);
    CHECK(std::abs(got - exact) <= 1.05 * std::pow(k, 4) * dx * dx / 12.0 + 1e-15);
  }
  CHECK(lattice_dispersion(kPi, 1.0) == doctest::Approx(4.0).epsilon(1e-14));
  CHECK_THROWS_AS(lattice_dispersion(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("solver config validation") {
  SolverConfig cfg;
  cfg.grid = {0.0, 1.0, 64};
  cfg.scheme = Scheme::crank_nicolson;
  cfg.boundary = Boundary::periodic;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.scheme = Scheme::split_step_fourier;
  cfg.boundary = Boundary::dirichlet;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
  cfg.boundary = Boundary::periodic;
  cfg.dt = 0.0;
  CHECK_THROWS_AS(validate(cfg), std::invalid_argument);
}

TEST_CASE("stationary ISW mode under Crank-Nicolson: unit fidelity, tiny phase error") {
  const EigenBasis basis = build_basis(isw_config(4));
  CoefficientSet c;
  c.spec = basis.spec;
  c.amplitudes = CVector::Zero(4);
  c.amplitudes[0] = 1.0;

  SolverConfig cfg;
  cfg.scheme = Scheme::crank_nicolson;
  cfg.boundary = Boundary::dirichlet;
  cfg.dt = 1e-4;
  cfg.grid = default_grid(basis, 401);

  const Vector v = sample_potential(basis.spec, cfg.grid);
  WaveField f = sample_wavefunction(c, basis, cfg.grid);
  f.values /= f.values.norm();
  const CVector psi0 = f.values;
  const Real t_final = 0.05;
  f = integrate(f, v, cfg, t_final);

  // discrete sine modes are exact eigenvectors of the discrete Laplacian:
  // the state only rotates by a phase
  const Complex overlap = psi0.dot(f.values);
  CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
  // phase close to the continuum e^{-i E t} up to O(dt^2, dx^2)
  const Real e0 = kPi * kPi;  // ISW ground energy before the zero offset
  const Real got_phase = std::arg(overlap);
  const Real expect = std::remainder(-e0 * t_final, 2.0 * kPi);
  CHECK(std::abs(std::remainder(got_phase - expect, 2.0 * kPi)) < 2e-3);
}

TEST_CASE("Crank-Nicolson conserves the discrete norm over 1e4 steps") {
  const EigenBasis basis = build_basis(small_pt());
  const CoefficientSet c = make_coefficients(basis.spec, small_packet());
  SolverConfig cfg = cn_config(basis, 301, 1e-5);
  const Vector v = sample_potential(basis.spec, cfg.grid);
  WaveField f = sample_wavefunction(c, basis, cfg.grid);
  f.values /= f.values.norm();
  f = integrate(f, v, cfg, 1e4 * cfg.dt);
  CHECK(std::abs(f.values.norm() - 1.0) < 1e-12);
}

TEST_CASE("benchmark: degenerate checkpoint 0 has fidelity 1; coarse dt loses to fine") {
  const auto at0 = revival_benchmark(small_pt(), small_packet(),
                                     cn_config(build_basis(small_pt()), 501, 1e-5), {0.0});
  REQUIRE(at0.size() == 1);
  CHECK(at0[0].fidelity == doctest::Approx(1.0).epsilon(1e-12));

  const EigenBasis basis = build_basis(small_pt());
  const auto fine = revival_benchmark(small_pt(), small_packet(), cn_config(basis, 1501, 4e-6),
                                      {0.5});
  const auto coarse = revival_benchmark(small_pt(), small_packet(), cn_config(basis, 1501, 4e-5),
                                        {0.5});
  CHECK(fine[0].fidelity > coarse[0].fidelity);
  CHECK(fine[0].fidelity > 0.999);
}

TEST_CASE("measured dt-convergence order is second order") {
  // grid fine enough that the dx floor stays far below the dt error
  const EigenBasis basis = build_basis(small_pt());
  const Real order = measure_convergence_order(small_pt(), small_packet(),
                                               cn_config(basis, 4001, 4e-5), 0.5);
  CHECK(order > 1.8);
  CHECK(order < 2.2);
}

TEST_CASE("RM benchmark improves under joint refinement") {
  PotentialSpec rm{Family::RM, 1.0, 8, 0.0, 1.0, 8};
  PacketRecipe packet{"gaussian", 4.0, 2.0, 1.0, PhaseScheme::equal, 0};
  const EigenBasis basis = build_basis(rm);
  SolverConfig coarse = cn_config(basis, 2001, 2e-3);
  SolverConfig fine = cn_config(basis, 6001, 5e-4);
  const Real f_coarse = revival_benchmark(rm, packet, coarse, {0.25})[0].fidelity;
  const Real f_fine = revival_benchmark(rm, packet, fine, {0.25})[0].fidelity;
  CHECK(f_fine > f_coarse);
  CHECK(f_fine > 0.99);
}

TEST_CASE("split-step with V = 0 applies the exact free dispersion per Fourier mode") {
  SolverConfig cfg;
  cfg.scheme = Scheme::split_step_fourier;
  cfg.boundary = Boundary::periodic;
  cfg.dt = 1e-3;
  const int n = 128;
  const Real box = 2.0;
  cfg.grid = {0.0, box * (n - 1.0) / n, n};  // nodes of a periodic box of length 2

  const Vector v = Vector::Zero(n);
  for (int harm : {1, 3, 7}) {
    const Real k = 2.0 * kPi * harm / box;
    WaveField f;
    f.grid = cfg.grid;
    f.values.resize(n);
    for (int i = 0; i < n; ++i) f.values[i] = std::polar(1.0 / std::sqrt(n), k * cfg.grid.x(i));
    const CVector psi0 = f.values;
    const Real t_final = 0.2;
    f = integrate(f, v, cfg, t_final);
    const Complex overlap = psi0.dot(f.values);
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-12));
    const Real expect = -k * k * t_final;
    CHECK(std::abs(std::remainder(std::arg(overlap) - expect, 2.0 * kPi)) < 1e-12);
  }
}

TEST_CASE("integrate rejects bad inputs and aborts on non-finite data") {
  const EigenBasis basis = build_basis(isw_config(4));
  SolverConfig cfg;
  cfg.scheme = Scheme::crank_nicolson;
  cfg.boundary = Boundary::dirichlet;
  cfg.dt = 1e-4;
  cfg.grid = default_grid(basis, 101);
  CoefficientSet c;
  c.spec = basis.spec;
  c.amplitudes = CVector::Zero(4);
  c.amplitudes[0] = 1.0;
  WaveField f = sample_wavefunction(c, basis, cfg.grid);

  Vector v = sample_potential(basis.spec, cfg.grid);
  CHECK_THROWS_AS(integrate(f, v, cfg, 0.55e-4), std::invalid_argument);  // dt does not divide
  v[50] = std::numeric_limits<Real>::quiet_NaN();
  CHECK_THROWS_AS(integrate(f, v, cfg, 1e-2), std::runtime_error);
}

TEST_CASE("mode-count study: control row, aliasing floor, monotone resolved grids") {
  const PotentialSpec isw = isw_config(30);
  const PacketRecipe packet{"gaussian", 15.0, 3.0, 1.0, PhaseScheme::equal, 0};
  // Once the grid resolves the packet's lattice-dispersion phases (~1024 modes
  // for 30 retained states over t_R), refinement improves the revival
  // monotonically; below that the wrapped phases make the overlap erratic.
  const auto rows = mode_count_study(isw, packet, {8, 1024, 2048, 4096}, 128);
  REQUIRE(rows.size() == 5);
  CHECK(rows[0].method == "exact");
  CHECK(rows[0].fidelity == doctest::Approx(1.0).epsilon(1e-12));

  // trivially small grid: fidelity well below 0.9, flagged
  CHECK(rows[1].n_fourier_modes == 8);
  CHECK(rows[1].warned);
  CHECK(rows[1].fidelity < 0.9);

  // doubling modes never decreases fidelity by more than the 1e-3 noise floor
  for (std::size_t i = 3; i < rows.size(); ++i)
    CHECK(rows[i].fidelity >= rows[i - 1].fidelity - 1e-3);
  CHECK(rows.back().fidelity > 0.99);
}

TEST_CASE("mode-count study input validation") {
  const PacketRecipe packet{"gaussian", 4.0, 2.0, 1.0, PhaseScheme::equal, 0};
  CHECK_THROWS_AS(mode_count_study(rm_config(), packet, {64}), std::invalid_argument);
  CHECK_THROWS_AS(mode_count_study(isw_config(8), packet, {10}), std::invalid_argument);
}
