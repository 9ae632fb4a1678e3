#pragma once

#include "qrev/potential.hpp"
#include "qrev/types.hpp"

#include <cstdint>
#include <string>

namespace qrev {

enum class PhaseScheme { equal, random };

/// Expansion amplitudes c_n of a packet in the eigenbasis identified by `spec`.
/// Unit norm: sum |c_n|^2 = 1.
struct CoefficientSet {
  PotentialSpec spec;
  CVector amplitudes;
};

/// Weight recipe shared by the CLI and the detuning scan.
struct PacketRecipe {
  std::string scheme = "gaussian";  // gaussian | exponential
  Real n_bar = 0.0;
  Real sigma = 1.0;
  Real decay = 1.0;
  PhaseScheme phases = PhaseScheme::equal;
  std::uint64_t seed = 0;
};

/// |c_n|^2 proportional to exp(-(n - n_bar)^2 / (2 sigma^2)), normalized over
/// the retained modes.  Equal phases give real positive c_n; random phases are
/// uniform in [0, 2 pi) from mt19937_64(seed) (53-bit draws, platform-stable).
CoefficientSet gaussian_coefficients(const PotentialSpec& spec, Real n_bar, Real sigma,
                                     PhaseScheme phases, std::uint64_t seed = 0);

/// |c_n|^2 proportional to exp(-n * decay), equal phases.
CoefficientSet exponential_coefficients(const PotentialSpec& spec, Real decay);

CoefficientSet make_coefficients(const PotentialSpec& spec, const PacketRecipe& recipe);

/// c_n -> (-1)^n c_n, i.e. psi(x) -> psi(-x).  Norm-preserving involution.
CoefficientSet parity_transform(const CoefficientSet& c);

/// JSON with the potential block and amplitudes as [re, im] pairs.
std::string to_json(const CoefficientSet& c);
CoefficientSet coefficients_from_json(const std::string& text);

}  // namespace qrev
