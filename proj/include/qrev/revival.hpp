#pragma once

#include "qrev/basis.hpp"
#include "qrev/wavepacket.hpp"

#include <string>
#include <vector>

namespace qrev {

/// Which fractional-revival target the overlap is scored against.
enum class CatBranch { quarter, three_quarter };

/// Overlap <psi(0)|psi(t)> = sum |c_n|^2 exp(-i E_n t), exact spectral sum,
/// no spatial grid.  tau in units of t_R.
Complex autocorrelation(const CoefficientSet& c, const EigenBasis& basis, Real tau);

/// |<P psi(0)|psi(t)>| = |sum (-1)^n |c_n|^2 exp(-i E_n t)| with P the parity map.
/// Equals 1 at tau = 1/2 for integer A/alpha.
Real mirror_fidelity(const CoefficientSet& c, const EigenBasis& basis, Real tau);

/// Overlap modulus between psi(t) and the quarter-revival cat target whose odd
/// modes carry an extra -i*theta (quarter) or +i*theta (three-quarter) for the
/// n^2-branch spectrum (PT/ISW); the RM branch (-n^2) swaps the two, which is
/// resolved per family here.  Equals 1 at the matching quarter time for
/// integer A/alpha.
Real cat_fidelity(const CoefficientSet& c, const EigenBasis& basis, Real tau, CatBranch which);

/// Maximum of the two odd-mode sign conventions; family-agnostic cat metric.
Real cat_fidelity_best(const CoefficientSet& c, const EigenBasis& basis, Real tau);

enum class PeakKind { full, half, quarter, three_quarter, other };

std::string peak_kind_name(PeakKind k);

struct RevivalPeak {
  Real tau;
  PeakKind kind;
  Real fidelity;
};

struct RevivalReport {
  Real t_revival = 0.0;  // absolute t_R
  std::vector<Real> times;  // units of t_R
  std::vector<Complex> autocorr;
  std::vector<Real> mirror_fidelity;
  std::vector<Real> cat_quarter;
  std::vector<Real> cat_three_quarter;
  std::vector<RevivalPeak> peaks;
};

struct ScanOptions {
  Real peak_threshold = 0.9;
  Real label_tolerance = 1.0 / 200.0;  // t_R / 200
};

/// Evaluates the fidelities on a sorted time grid and detects peaks of the
/// combined revival strength max(|A|, mirror, cat) above the threshold.
/// Peaks are labeled by proximity (mod 1) to {1, 1/2, 1/4, 3/4} * t_R.
RevivalReport revival_scan(const CoefficientSet& c, const EigenBasis& basis,
                           const std::vector<Real>& taus, const ScanOptions& opts = {});

std::string to_json(const RevivalReport& report);
void write_csv(const RevivalReport& report, const std::string& path);

struct DetuneRow {
  Real r;
  Real tau;
  Real mirror;
  Real cat;
};

/// Rebuilds the RM basis per r (same mode count), regenerates the packet from
/// the recipe, and evaluates mirror and cat (best-pairing) fidelities.
std::vector<DetuneRow> detune_scan(const PotentialSpec& base, const PacketRecipe& recipe,
                                   const std::vector<Real>& r_values,
                                   const std::vector<Real>& taus);

void write_csv(const std::vector<DetuneRow>& rows, const std::string& path);

}  // namespace qrev
