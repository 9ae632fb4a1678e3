#pragma once

#include "qrev/types.hpp"

#include <functional>

namespace qrev {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendre {
  Vector nodes;
  Vector weights;

  explicit GaussLegendre(int order);
};

/// Integrate f over [a, b] split into `panels` equal panels with the given rule.
Real integrate_panels(const std::function<Real(Real)>& f, Real a, Real b, const GaussLegendre& rule,
                      int panels);

/// Panel-refined integration: doubles the panel count until successive values
/// agree to rel_tol (with a small absolute floor), starting from `panels0`.
/// Throws std::runtime_error when `max_doublings` is exhausted.
Real integrate_adaptive(const std::function<Real(Real)>& f, Real a, Real b, Real rel_tol = 1e-13,
                        int panels0 = 8, int max_doublings = 14);

}  // namespace qrev
