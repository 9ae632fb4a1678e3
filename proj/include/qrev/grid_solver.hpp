#pragma once

#include "qrev/propagation.hpp"
#include "qrev/revival.hpp"

#include <string>
#include <vector>

namespace qrev {

enum class Scheme { crank_nicolson, split_step_fourier };
enum class Boundary { dirichlet, periodic };

Scheme scheme_from_name(const std::string& name);

/// Grid/time-stepping configuration for the TDSE integrators.
/// crank_nicolson pairs with dirichlet: grid endpoints are hard-wall nodes
/// (psi pinned to zero), interior points evolve through the Cayley form.
/// split_step_fourier pairs with periodic: the grid is read as the n nodes
/// x_min + i*dx of a periodic box of length n*dx.
struct SolverConfig {
  Scheme scheme = Scheme::crank_nicolson;
  Real dt = 1e-4;
  SpatialGrid grid;
  Boundary boundary = Boundary::dirichlet;
};

void validate(const SolverConfig& cfg);

/// Potential samples on the grid, clamped to at most clip (PT sec^2 walls and
/// ISW wall markers become large finite values).  Default clip is 1e6 alpha^2.
Vector sample_potential(const PotentialSpec& spec, const SpatialGrid& grid, Real clip = -1.0);

/// Integrate the TDSE forward by t_final (absolute time, hbar = 1).
///   crank_nicolson: (1 + i H dt/2) psi' = (1 - i H dt/2) psi, H = -D2 + V,
///   3-point Laplacian, tridiagonal solve per step (unconditionally unitary).
///   split_step_fourier: half-kick / exact exp(-i k^2 dt) drift / half-kick.
/// dt must divide t_final within rounding; non-finite values abort.
/// The returned field keeps the caller-maintained tau.
WaveField integrate(const WaveField& initial, const Vector& potential, const SolverConfig& cfg,
                    Real t_final);

/// Eigenvalue 2(1 - cos(k dx))/dx^2 of the 3-point discrete Laplacian; the
/// grid replacement for the continuum k^2 dispersion.
Real lattice_dispersion(Real k, Real dx);

struct BenchmarkRow {
  Real tau;       // checkpoint, units of t_R
  Real fidelity;  // overlap with the exact spectral target
};

/// Integrates to each checkpoint (subset of {1/4, 1/2, 3/4, 1} t_R) and scores
/// the overlap against the exact eigenbasis propagation on the same grid.
/// dt is rounded per segment so checkpoints are hit exactly.
std::vector<BenchmarkRow> revival_benchmark(const PotentialSpec& spec, const PacketRecipe& recipe,
                                            const SolverConfig& cfg,
                                            const std::vector<Real>& checkpoints);

/// Measured dt-convergence order of the integrator's state error at one
/// checkpoint, from runs at 2*dt and dt on the same grid.  The checkpoint
/// fidelity deficit scales as the square of the state error, so the order is
/// half the deficit-ratio exponent (~2 for Crank-Nicolson: deficits contract
/// ~16x per halving of dt).
Real measure_convergence_order(const PotentialSpec& spec, const PacketRecipe& recipe,
                               const SolverConfig& cfg, Real checkpoint_tau);

struct ModeCountRow {
  std::string method;  // "exact" control row or "splitstep_lattice"
  int n_fourier_modes; // 0 for the control row
  Real fidelity;       // revival fidelity at t_R
  bool warned;         // grid below the packet bandwidth
};

/// Full-revival fidelity at t_R of a split-step run whose free propagation
/// uses the lattice dispersion, versus grid resolution.  The well (ISW or PT)
/// is embedded in a doubled periodic box by odd reflection about the right
/// wall, so hard walls are exact and ISW runs carry no kick at all; the only
/// time-evolution error is the k^2 -> 2(1 - cos k dx)/dx^2 replacement.
/// steps_per_revival fixes dt = t_R / steps_per_revival.
std::vector<ModeCountRow> mode_count_study(const PotentialSpec& spec, const PacketRecipe& recipe,
                                           const std::vector<int>& mode_counts,
                                           int steps_per_revival = 256);

void write_csv(const std::vector<BenchmarkRow>& rows, const std::string& path);
void write_csv(const std::vector<ModeCountRow>& rows, const std::string& path);

}  // namespace qrev
