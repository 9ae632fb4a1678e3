#pragma once

#include <Eigen/Dense>

#include <complex>

namespace qrev {

using Real = double;
using Complex = std::complex<Real>;

using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;
// Rasters are stored row-major so a single row (one time slice) is contiguous.
using RowMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline constexpr Real kPi = 3.14159265358979323846264338327950288;

/// Revival time t_R = 2*pi/alpha^2 (hbar = 1, H = -d^2/dx^2 + V).
inline Real revival_time(Real alpha) { return 2.0 * kPi / (alpha * alpha); }

}  // namespace qrev
