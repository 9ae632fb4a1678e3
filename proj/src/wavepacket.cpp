#include "qrev/wavepacket.hpp"

#include <json.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

namespace qrev {

namespace {

CoefficientSet from_weights(const PotentialSpec& spec, Vector weights, PhaseScheme phases,
                            std::uint64_t seed) {
  const Real total = weights.sum();
  if (!(total > 0.0) || !std::isfinite(total))
    throw std::runtime_error("wavepacket: degenerate weight distribution");
  weights /= total;

  CoefficientSet c;
  c.spec = spec;
  c.amplitudes.resize(spec.n_modes);
  if (phases == PhaseScheme::equal) {
    for (int n = 0; n < spec.n_modes; ++n) c.amplitudes[n] = std::sqrt(weights[n]);
  } else {
    std::mt19937_64 gen(seed);
    for (int n = 0; n < spec.n_modes; ++n) {
      // 53-bit draw; avoids the implementation-defined distribution adaptors.
      const Real u = static_cast<Real>(gen() >> 11) * 0x1.0p-53;
      c.amplitudes[n] = std::polar(std::sqrt(weights[n]), 2.0 * kPi * u);
    }
  }
  return c;
}

}  // namespace

CoefficientSet gaussian_coefficients(const PotentialSpec& spec, Real n_bar, Real sigma,
                                     PhaseScheme phases, std::uint64_t seed) {
  validate(spec);
  if (!(sigma > 0.0)) throw std::invalid_argument("packet.sigma: must be > 0");
  Vector w(spec.n_modes);
  for (int n = 0; n < spec.n_modes; ++n) {
    const Real d = n - n_bar;
    w[n] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  return from_weights(spec, std::move(w), phases, seed);
}

CoefficientSet exponential_coefficients(const PotentialSpec& spec, Real decay) {
  validate(spec);
  if (!(decay > 0.0)) throw std::invalid_argument("packet.decay: must be > 0");
  Vector w(spec.n_modes);
  for (int n = 0; n < spec.n_modes; ++n) w[n] = std::exp(-n * decay);
  return from_weights(spec, std::move(w), PhaseScheme::equal, 0);
}

CoefficientSet make_coefficients(const PotentialSpec& spec, const PacketRecipe& recipe) {
  if (recipe.scheme == "gaussian")
    return gaussian_coefficients(spec, recipe.n_bar, recipe.sigma, recipe.phases, recipe.seed);
  if (recipe.scheme == "exponential") return exponential_coefficients(spec, recipe.decay);
  throw std::invalid_argument("packet.weights: unknown scheme '" + recipe.scheme + "'");
}

CoefficientSet parity_transform(const CoefficientSet& c) {
  CoefficientSet out = c;
  for (int n = 1; n < out.amplitudes.size(); n += 2) out.amplitudes[n] = -out.amplitudes[n];
  return out;
}

std::string to_json(const CoefficientSet& c) {
  nlohmann::json j;
  j["potential"] = {{"family", family_name(c.spec.family)}, {"alpha", c.spec.alpha},
                    {"m", c.spec.m},                         {"detuning", c.spec.detuning},
                    {"width", c.spec.width},                 {"n_modes", c.spec.n_modes}};
  auto& amp = j["amplitudes"];
  amp = nlohmann::json::array();
  for (int n = 0; n < c.amplitudes.size(); ++n)
    amp.push_back({c.amplitudes[n].real(), c.amplitudes[n].imag()});
  return j.dump(2);
}

CoefficientSet coefficients_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CoefficientSet c;
  const auto& p = j.at("potential");
  c.spec.family = family_from_name(p.at("family").get<std::string>());
  c.spec.alpha = p.at("alpha").get<Real>();
  c.spec.m = p.at("m").get<int>();
  c.spec.detuning = p.at("detuning").get<Real>();
  c.spec.width = p.at("width").get<Real>();
  c.spec.n_modes = p.at("n_modes").get<int>();
  validate(c.spec);
  const auto& amp = j.at("amplitudes");
  if (static_cast<int>(amp.size()) != c.spec.n_modes)
    throw std::invalid_argument("coefficients_from_json: amplitude count mismatch");
  c.amplitudes.resize(c.spec.n_modes);
  for (int n = 0; n < c.spec.n_modes; ++n)
    c.amplitudes[n] = Complex(amp[n][0].get<Real>(), amp[n][1].get<Real>());
  return c;
}

}  // namespace qrev
