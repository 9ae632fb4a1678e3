#include "qrev/potential.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qrev {

namespace {

void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument("potential." + field + ": " + what);
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::ISW: return "ISW";
    case Family::PT: return "PT";
    case Family::RM: return "RM";
  }
  return "?";
}

Family family_from_name(const std::string& name) {
  if (name == "ISW" || name == "isw") return Family::ISW;
  if (name == "PT" || name == "pt") return Family::PT;
  if (name == "RM" || name == "rm") return Family::RM;
  throw std::invalid_argument("potential.family: unknown family '" + name + "' (ISW|PT|RM)");
}

void validate(const PotentialSpec& spec) {
  if (!(spec.alpha > 0.0) || !std::isfinite(spec.alpha)) fail("alpha", "must be > 0");
  if (spec.n_modes < 1) fail("n_modes", "must be >= 1");
  switch (spec.family) {
    case Family::ISW:
      if (!(spec.width > 0.0) || !std::isfinite(spec.width)) fail("width", "must be > 0");
      break;
    case Family::PT:
      if (spec.m < 1) fail("m", "must be a positive integer");
      if (spec.detuning != 0.0) fail("detuning", "PT requires detuning = 0");
      break;
    case Family::RM:
      if (spec.m < 1) fail("m", "must be a positive integer");
      if (spec.detuning < 0.0 || spec.detuning > 0.5) fail("detuning", "must lie in [0, 0.5]");
      if (spec.n_modes > spec.m)
        fail("n_modes", "RM supports only m = " + std::to_string(spec.m) + " bound states");
      break;
  }
}

Real effective_alpha(const PotentialSpec& spec) {
  return spec.family == Family::ISW ? kPi / spec.width : spec.alpha;
}

int bound_state_limit(const PotentialSpec& spec) {
  return spec.family == Family::RM ? spec.m : std::numeric_limits<int>::max();
}

Real level_number(const PotentialSpec& spec, int n) {
  if (n < 0 || n >= spec.n_modes) throw std::invalid_argument("level index out of range");
  const Real nn = static_cast<Real>(n);
  const Real ratio = effective_m(spec) + spec.detuning;  // A / alpha
  if (spec.family == Family::RM) return 2.0 * ratio * nn - nn * nn;
  return nn * nn + 2.0 * ratio * nn;
}

Real energy(const PotentialSpec& spec, int n) {
  const Real a = effective_alpha(spec);
  return a * a * level_number(spec, n);
}

Real potential_value(const PotentialSpec& spec, Real x) {
  const Real a = effective_alpha(spec);
  switch (spec.family) {
    case Family::ISW:
      if (std::abs(x) >= 0.5 * spec.width) return std::numeric_limits<Real>::infinity();
      return 0.0;
    case Family::PT: {
      if (std::abs(a * x) >= 0.5 * kPi) throw std::domain_error("potential_value: x outside PT domain");
      const Real A = (spec.m + spec.detuning) * a;
      const Real c = std::cos(a * x);
      return -A * A + A * (A - a) / (c * c);
    }
    case Family::RM: {
      const Real A = (spec.m + spec.detuning) * a;
      const Real s = 1.0 / std::cosh(a * x);
      return A * A - A * (A + a) * s * s;
    }
  }
  throw std::logic_error("potential_value: bad family");
}

Domain domain(const PotentialSpec& spec) {
  const Real a = effective_alpha(spec);
  switch (spec.family) {
    case Family::ISW: return {-0.5 * spec.width, 0.5 * spec.width};
    case Family::PT: return {-0.5 * kPi / a, 0.5 * kPi / a};
    case Family::RM: return {-25.0 / a, 25.0 / a};
  }
  throw std::logic_error("domain: bad family");
}

}  // namespace qrev
