#include "qrev/grid_solver.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>
#include <vector>

namespace qrev {

namespace {

constexpr Real kPotentialClipFactor = 1e6;

bool all_finite(const CVector& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i].real()) || !std::isfinite(v[i].imag())) return false;
  }
  return true;
}

long step_count(Real t_final, Real dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("solver.dt: must be > 0");
  if (t_final < 0.0) throw std::invalid_argument("integrate: t_final must be >= 0");
  const long steps = std::lround(t_final / dt);
  if (std::abs(steps * dt - t_final) > 1e-6 * std::max<Real>(1.0, std::abs(t_final)))
    throw std::invalid_argument("integrate: dt must divide t_final within rounding");
  return steps;
}

// Cayley step for H = -D2 + V on the interior nodes; endpoints stay pinned.
class CrankNicolson {
 public:
  CrankNicolson(const Vector& potential, Real dx, Real dt) {
    const int m = static_cast<int>(potential.size()) - 2;
    if (m < 1) throw std::invalid_argument("crank_nicolson: grid too small");
    off_ = Complex(0.0, -dt / (2.0 * dx * dx));
    rhs_diag_.resize(m);
    w_.resize(m);
    inv_fac_.resize(m);
    scratch_.resize(m);
    // Thomas factors of the constant tridiagonal (diagonally dominant: no pivoting).
    Complex denom;
    for (int i = 0; i < m; ++i) {
      const Complex a(1.0, 0.5 * dt * (2.0 / (dx * dx) + potential[i + 1]));
      rhs_diag_[i] = Complex(2.0, 0.0) - a;  // = 1 - i dt/2 (2/dx^2 + V)
      if (i == 0) {
        denom = a;
      } else {
        w_[i] = off_ / denom;
        denom = a - w_[i] * off_;
      }
      inv_fac_[i] = Complex(1.0, 0.0) / denom;
    }
  }

  void step(CVector& psi) {
    const int m = static_cast<int>(rhs_diag_.size());
    auto interior = psi.segment(1, m);
    // rhs = (1 - i H dt/2) psi = (2 - a_i) psi_i - b (psi_{i-1} + psi_{i+1})
    scratch_[0] = rhs_diag_[0] * interior[0] - off_ * interior[1];
    for (int i = 1; i + 1 < m; ++i)
      scratch_[i] = rhs_diag_[i] * interior[i] - off_ * (interior[i - 1] + interior[i + 1]);
    scratch_[m - 1] = rhs_diag_[m - 1] * interior[m - 1] - off_ * interior[m - 2];
    for (int i = 1; i < m; ++i) scratch_[i] -= w_[i] * scratch_[i - 1];
    interior[m - 1] = scratch_[m - 1] * inv_fac_[m - 1];
    for (int i = m - 2; i >= 0; --i)
      interior[i] = (scratch_[i] - off_ * interior[i + 1]) * inv_fac_[i];
  }

 private:
  Complex off_;
  std::vector<Complex> rhs_diag_;
  std::vector<Complex> w_;
  std::vector<Complex> inv_fac_;
  std::vector<Complex> scratch_;
};

// Strang splitting with exact continuum dispersion (or a caller-supplied one).
class SplitStep {
 public:
  SplitStep(const Vector& potential, Real dx, Real dt, int n,
            const std::function<Real(Real)>& dispersion) {
    half_kick_.resize(n);
    drift_.resize(n);
    for (int i = 0; i < n; ++i) half_kick_[i] = std::polar(1.0, -0.5 * dt * potential[i]);
    const Real box = n * dx;
    for (int m = 0; m < n; ++m) {
      const int harm = m < (n + 1) / 2 ? m : m - n;
      const Real k = 2.0 * kPi * harm / box;
      drift_[m] = std::polar(1.0, -dt * dispersion(k));
    }
    time_buf_.resize(n);
    freq_buf_.resize(n);
  }

  void step(CVector& psi) {
    const int n = static_cast<int>(half_kick_.size());
    for (int i = 0; i < n; ++i) time_buf_[i] = psi[i] * half_kick_[i];
    fft_.fwd(freq_buf_, time_buf_);
    for (int i = 0; i < n; ++i) freq_buf_[i] *= drift_[i];
    fft_.inv(time_buf_, freq_buf_);
    for (int i = 0; i < n; ++i) psi[i] = time_buf_[i] * half_kick_[i];
  }

 private:
  std::vector<Complex> half_kick_;
  std::vector<Complex> drift_;
  std::vector<Complex> time_buf_;
  std::vector<Complex> freq_buf_;
  Eigen::FFT<Real> fft_;
};

Real discrete_fidelity(const CVector& a, const CVector& b) {
  const Real na = a.norm();
  const Real nb = b.norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::abs(a.dot(b)) / (na * nb);
}

}  // namespace

Scheme scheme_from_name(const std::string& name) {
  if (name == "crank_nicolson" || name == "cn") return Scheme::crank_nicolson;
  if (name == "split_step_fourier" || name == "ssf") return Scheme::split_step_fourier;
  throw std::invalid_argument("bench.scheme: unknown scheme '" + name + "'");
}

void validate(const SolverConfig& cfg) {
  if (!(cfg.dt > 0.0)) throw std::invalid_argument("solver.dt: must be > 0");
  if (cfg.grid.n_points < 8) throw std::invalid_argument("solver.grid: needs at least 8 points");
  if (cfg.scheme == Scheme::crank_nicolson && cfg.boundary != Boundary::dirichlet)
    throw std::invalid_argument("solver: crank_nicolson requires dirichlet boundary");
  if (cfg.scheme == Scheme::split_step_fourier && cfg.boundary != Boundary::periodic)
    throw std::invalid_argument("solver: split_step_fourier requires periodic boundary");
}

Vector sample_potential(const PotentialSpec& spec, const SpatialGrid& grid, Real clip) {
  const Real a = effective_alpha(spec);
  if (clip <= 0.0) clip = kPotentialClipFactor * a * a;
  Vector v(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) {
    const Real x = grid.x(i);
    Real val;
    if (spec.family == Family::PT && std::abs(a * x) >= 0.5 * kPi - 1e-12) {
      val = clip;  // on or past the sec^2 wall
    } else if (spec.family == Family::ISW && std::abs(x) >= 0.5 * spec.width) {
      val = clip;
    } else {
      val = potential_value(spec, x);
    }
    v[i] = std::min(val, clip);
  }
  return v;
}

WaveField integrate(const WaveField& initial, const Vector& potential, const SolverConfig& cfg,
                    Real t_final) {
  validate(cfg);
  if (initial.values.size() != cfg.grid.n_points || potential.size() != cfg.grid.n_points)
    throw std::invalid_argument("integrate: field/potential size mismatch with grid");
  for (int i = 0; i < potential.size(); ++i) {
    if (!std::isfinite(potential[i]))
      throw std::runtime_error("integrate: non-finite potential sample");
  }
  const long steps = step_count(t_final, cfg.dt);

  WaveField field = initial;
  if (cfg.scheme == Scheme::crank_nicolson) {
    field.values[0] = Complex(0);
    field.values[field.values.size() - 1] = Complex(0);
    CrankNicolson cn(potential, cfg.grid.dx(), cfg.dt);
    for (long s = 0; s < steps; ++s) {
      cn.step(field.values);
      if ((s & 0xff) == 0xff && !all_finite(field.values))
        throw std::runtime_error("integrate: non-finite values encountered");
    }
  } else {
    SplitStep ss(potential, cfg.grid.dx(), cfg.dt, cfg.grid.n_points,
                 [](Real k) { return k * k; });
    for (long s = 0; s < steps; ++s) {
      ss.step(field.values);
      if ((s & 0xff) == 0xff && !all_finite(field.values))
        throw std::runtime_error("integrate: non-finite values encountered");
    }
  }
  if (!all_finite(field.values)) throw std::runtime_error("integrate: non-finite values encountered");
  return field;
}

Real lattice_dispersion(Real k, Real dx) {
  if (!(dx > 0.0)) throw std::invalid_argument("lattice_dispersion: dx must be > 0");
  return 2.0 * (1.0 - std::cos(k * dx)) / (dx * dx);
}

std::vector<BenchmarkRow> revival_benchmark(const PotentialSpec& spec, const PacketRecipe& recipe,
                                            const SolverConfig& cfg,
                                            const std::vector<Real>& checkpoints) {
  validate(cfg);
  for (Real tau : checkpoints) {
    if (tau != 0.0 && tau != 0.25 && tau != 0.5 && tau != 0.75 && tau != 1.0)
      throw std::invalid_argument("bench.checkpoints: must be quarters of t_R");
  }
  const EigenBasis basis = build_basis(spec);
  const CoefficientSet c = make_coefficients(spec, recipe);
  const SampledBasis table = sample_basis(basis, cfg.grid);
  const Vector potential = sample_potential(spec, cfg.grid);
  const Real t_rev = revival_time(spec);

  WaveField field = sample_wavefunction(c, table, 0.0);
  field.values /= field.values.norm();

  std::vector<BenchmarkRow> rows;
  Real reached = 0.0;
  for (Real tau : checkpoints) {
    const Real target_t = tau * t_rev;
    const Real segment = target_t - reached;
    if (segment < 0.0) throw std::invalid_argument("bench.checkpoints: must be sorted");
    if (segment > 0.0) {
      // round dt so the segment is an integer number of steps
      SolverConfig seg_cfg = cfg;
      const long steps = std::max<long>(1, std::lround(segment / cfg.dt));
      seg_cfg.dt = segment / steps;
      field = integrate(field, potential, seg_cfg, segment);
      reached = target_t;
    }
    WaveField exact = sample_wavefunction(evolve_coefficients(c, basis, tau), table, tau);
    rows.push_back({tau, discrete_fidelity(exact.values, field.values)});
  }
  return rows;
}

Real measure_convergence_order(const PotentialSpec& spec, const PacketRecipe& recipe,
                               const SolverConfig& cfg, Real checkpoint_tau) {
  SolverConfig coarse = cfg;
  coarse.dt = 2.0 * cfg.dt;
  const Real d_fine = 1.0 - revival_benchmark(spec, recipe, cfg, {checkpoint_tau})[0].fidelity;
  const Real d_coarse = 1.0 - revival_benchmark(spec, recipe, coarse, {checkpoint_tau})[0].fidelity;
  if (!(d_fine > 0.0) || !(d_coarse > 0.0))
    throw std::runtime_error("measure_convergence_order: deficit at roundoff floor; coarsen dt");
  // The fidelity deficit is quadratic in the state error (deficit ~ var of the
  // per-mode phase errors), so the state-error order is half the deficit-ratio
  // exponent: a second-order scheme contracts the deficit ~16x per halving.
  return 0.5 * std::log2(d_coarse / d_fine);
}

std::vector<ModeCountRow> mode_count_study(const PotentialSpec& spec, const PacketRecipe& recipe,
                                           const std::vector<int>& mode_counts,
                                           int steps_per_revival) {
  if (spec.family == Family::RM)
    throw std::invalid_argument("mode_count_study: requires a hard-walled family (ISW or PT)");
  if (steps_per_revival < 1) throw std::invalid_argument("bench.steps_per_revival: must be >= 1");
  const EigenBasis basis = build_basis(spec);
  const CoefficientSet c = make_coefficients(spec, recipe);
  const Real t_rev = revival_time(spec);
  const Real wall = basis.x_max;              // right wall; reflection point
  const Real well_width = basis.x_max - basis.x_min;

  std::vector<ModeCountRow> rows;
  rows.push_back({"exact", 0, std::abs(autocorrelation(c, basis, 1.0)), false});

  const int bandwidth = 2 * (spec.n_modes + 1);
  for (int n_fft : mode_counts) {
    if (n_fft < 4 || n_fft % 4 != 0)
      throw std::invalid_argument("bench.mode_counts: counts must be multiples of 4");
    const Real dx = 2.0 * well_width / n_fft;
    const Real box_min = basis.x_min;

    // Odd reflection about the right wall onto a doubled periodic box.
    CVector psi0(n_fft);
    Vector v(n_fft);
    for (int i = 0; i < n_fft; ++i) {
      const Real x = box_min + i * dx;
      const bool mirrored = x > wall;
      const Real xw = mirrored ? 2.0 * wall - x : x;
      if (std::abs(xw - wall) < 0.25 * dx || std::abs(xw - basis.x_min) < 0.25 * dx) {
        psi0[i] = Complex(0);  // hard-wall node
        v[i] = 0.0;
      } else {
        const Vector phis = eigenfunctions_at(basis, xw);
        Complex cval(0, 0);
        for (int n = 0; n < spec.n_modes; ++n) cval += c.amplitudes[n] * phis[n];
        psi0[i] = mirrored ? -cval : cval;
        const Real a = effective_alpha(spec);
        v[i] = spec.family == Family::ISW
                   ? 0.0
                   : std::min(potential_value(spec, xw), kPotentialClipFactor * a * a);
      }
    }
    psi0 /= psi0.norm();

    const Real dt = t_rev / steps_per_revival;
    CVector psi = psi0;
    SplitStep ss(v, dx, dt, n_fft, [dx](Real k) { return lattice_dispersion(k, dx); });
    for (int s = 0; s < steps_per_revival; ++s) ss.step(psi);

    rows.push_back({"splitstep_lattice", n_fft, discrete_fidelity(psi0, psi), n_fft < bandwidth});
  }
  return rows;
}

void write_csv(const std::vector<BenchmarkRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "tau,fidelity\n");
  for (const BenchmarkRow& r : rows) std::fprintf(f, "%.17g,%.17g\n", r.tau, r.fidelity);
  std::fclose(f);
}

void write_csv(const std::vector<ModeCountRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "method,n_fourier_modes,fidelity,warned\n");
  for (const ModeCountRow& r : rows)
    std::fprintf(f, "%s,%d,%.17g,%d\n", r.method.c_str(), r.n_fourier_modes, r.fidelity,
                 r.warned ? 1 : 0);
  std::fclose(f);
}

}  // namespace qrev
