#include "qrev/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qrev {

// Nodes are the roots of P_n, found by Newton iteration from the Chebyshev
// initial guess; weights w_i = 2 / ((1 - x_i^2) P_n'(x_i)^2).
GaussLegendre::GaussLegendre(int order) {
  if (order < 1) throw std::invalid_argument("GaussLegendre: order must be >= 1");
  nodes.resize(order);
  weights.resize(order);
  const int m = (order + 1) / 2;
  for (int i = 0; i < m; ++i) {
    Real x = std::cos(kPi * (i + 0.75) / (order + 0.5));
    Real dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence for P_n(x) and P_{n-1}(x)
      Real p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      Real dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = -x;
    nodes[order - 1 - i] = x;
    Real w = 2.0 / ((1.0 - x * x) * dp * dp);
    weights[i] = w;
    weights[order - 1 - i] = w;
  }
}

Real integrate_panels(const std::function<Real(Real)>& f, Real a, Real b, const GaussLegendre& rule,
                      int panels) {
  if (panels < 1) throw std::invalid_argument("integrate_panels: panels must be >= 1");
  const Real h = (b - a) / panels;
  Real total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const Real lo = a + p * h;
    const Real mid = lo + 0.5 * h;
    Real s = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) {
      s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    }
    total += 0.5 * h * s;
  }
  return total;
}

Real integrate_adaptive(const std::function<Real(Real)>& f, Real a, Real b, Real rel_tol,
                        int panels0, int max_doublings) {
  static const GaussLegendre rule(32);
  Real prev = integrate_panels(f, a, b, rule, panels0);
  int panels = panels0;
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    const Real cur = integrate_panels(f, a, b, rule, panels);
    const Real scale = std::max(std::abs(cur), Real(1e-300));
    if (std::abs(cur - prev) <= rel_tol * scale + 1e-300) return cur;
    prev = cur;
  }
  throw std::runtime_error("integrate_adaptive: quadrature did not converge");
}

}  // namespace qrev
