#pragma once

#include <stdexcept>

namespace qrev {

/// Gegenbauer polynomial C_n^(lambda)(u) by the three-term recurrence
///   n C_n = 2(n+lambda-1) u C_{n-1} - (n+2lambda-2) C_{n-2},
/// C_0 = 1, C_1 = 2 lambda u.  Valid for non-integer lambda > -1/2,
/// which the detuned Rosen-Morse eigenfunctions need.
template <typename Scalar>
Scalar gegenbauer(int n, Scalar lambda, Scalar u) {
  if (n < 0) throw std::invalid_argument("gegenbauer: n must be >= 0");
  if (!(lambda > Scalar(-0.5))) throw std::domain_error("gegenbauer: lambda must be > -1/2");
  if (n == 0) return Scalar(1);
  Scalar prev = Scalar(1);
  Scalar cur = Scalar(2) * lambda * u;
  for (int k = 2; k <= n; ++k) {
    Scalar next = (Scalar(2) * (Scalar(k) + lambda - Scalar(1)) * u * cur -
                   (Scalar(k) + Scalar(2) * lambda - Scalar(2)) * prev) /
                  Scalar(k);
    prev = cur;
    cur = next;
  }
  return cur;
}

/// All of C_0..C_{n_max}^(lambda)(u) in one recurrence pass, written to out[0..n_max].
template <typename Scalar, typename OutIt>
void gegenbauer_all(int n_max, Scalar lambda, Scalar u, OutIt out) {
  if (n_max < 0) throw std::invalid_argument("gegenbauer_all: n_max must be >= 0");
  if (!(lambda > Scalar(-0.5))) throw std::domain_error("gegenbauer_all: lambda must be > -1/2");
  Scalar prev = Scalar(1);
  *out++ = prev;
  if (n_max == 0) return;
  Scalar cur = Scalar(2) * lambda * u;
  *out++ = cur;
  for (int k = 2; k <= n_max; ++k) {
    Scalar next = (Scalar(2) * (Scalar(k) + lambda - Scalar(1)) * u * cur -
                   (Scalar(k) + Scalar(2) * lambda - Scalar(2)) * prev) /
                  Scalar(k);
    prev = cur;
    cur = next;
    *out++ = cur;
  }
}

}  // namespace qrev
