#pragma once

#include "qrev/propagation.hpp"

#include <string>
#include <vector>

namespace qrev {

enum class CarpetNormalization { none, per_frame, global };

CarpetNormalization carpet_normalization_from_name(const std::string& name);

/// Space-time probability density raster.  Row j holds rho(x_i, tau_j); rows
/// are contiguous (row-major) so one row is one time slice.
struct CarpetRaster {
  SpatialGrid x_axis;
  std::vector<Real> t_axis;  // units of t_R, uniform
  RowMatrix values;          // t_axis.size() x x_axis.n_points
  CarpetNormalization normalization = CarpetNormalization::global;
};

/// Renders rho(x_i, tau_j) row by row; rows are computed concurrently against
/// the shared eigenfunction table.
CarpetRaster render_carpet(const CoefficientSet& c, const EigenBasis& basis,
                           const SpatialGrid& x_grid, const std::vector<Real>& t_grid);

/// Binary 16-bit PGM (P5, big-endian samples), pixel = round(65535 * s^gamma)
/// with s the density scaled by the raster's normalization mode (an all-zero
/// raster maps to all-zero pixels).
void write_pgm(const CarpetRaster& raster, Real gamma, const std::string& path);

/// Header row of t values, first column x values, 17 significant digits.
void write_csv(const CarpetRaster& raster, const std::string& path);

}  // namespace qrev
