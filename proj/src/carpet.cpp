#include "qrev/carpet.hpp"

#include "qrev/parallel.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace qrev {

CarpetNormalization carpet_normalization_from_name(const std::string& name) {
  if (name == "none") return CarpetNormalization::none;
  if (name == "per_frame") return CarpetNormalization::per_frame;
  if (name == "global") return CarpetNormalization::global;
  throw std::invalid_argument("carpet.normalization: unknown mode '" + name + "'");
}

CarpetRaster render_carpet(const CoefficientSet& c, const EigenBasis& basis,
                           const SpatialGrid& x_grid, const std::vector<Real>& t_grid) {
  if (t_grid.empty()) throw std::invalid_argument("render_carpet: empty time grid");
  const SampledBasis table = sample_basis(basis, x_grid);
  CarpetRaster raster;
  raster.x_axis = x_grid;
  raster.t_axis = t_grid;
  raster.values.resize(static_cast<long>(t_grid.size()), x_grid.n_points);
  parallel_for(static_cast<long>(t_grid.size()), [&](long j) {
    const CoefficientSet ct = evolve_coefficients(c, basis, t_grid[j]);
    const WaveField field = sample_wavefunction(ct, table, t_grid[j]);
    raster.values.row(j) = probability_density(field).transpose();
  });
  return raster;
}

void write_pgm(const CarpetRaster& raster, Real gamma, const std::string& path) {
  if (!(gamma > 0.0)) throw std::invalid_argument("carpet.gamma: must be > 0");
  if (raster.values.size() == 0) throw std::invalid_argument("write_pgm: empty raster");
  const long rows = raster.values.rows();
  const long cols = raster.values.cols();

  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("write_pgm: cannot open " + path);
  std::fprintf(f, "P5\n%ld %ld\n65535\n", cols, rows);

  const Real global_max = raster.values.maxCoeff();
  std::vector<std::uint8_t> line(static_cast<std::size_t>(cols) * 2);
  for (long j = 0; j < rows; ++j) {
    Real scale = global_max;
    if (raster.normalization == CarpetNormalization::per_frame)
      scale = raster.values.row(j).maxCoeff();
    else if (raster.normalization == CarpetNormalization::none)
      scale = 1.0;
    for (long i = 0; i < cols; ++i) {
      Real s = scale > 0.0 ? raster.values(j, i) / scale : 0.0;
      s = std::clamp(s, 0.0, 1.0);
      const auto pix = static_cast<std::uint32_t>(std::lround(65535.0 * std::pow(s, gamma)));
      line[2 * i] = static_cast<std::uint8_t>(pix >> 8);  // big-endian sample order
      line[2 * i + 1] = static_cast<std::uint8_t>(pix & 0xff);
    }
    std::fwrite(line.data(), 1, line.size(), f);
  }
  std::fclose(f);
}

void write_csv(const CarpetRaster& raster, const std::string& path) {
  if (raster.values.size() == 0) throw std::invalid_argument("write_csv: empty raster");
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "x");
  for (Real t : raster.t_axis) std::fprintf(f, ",%.17g", t);
  std::fprintf(f, "\n");
  for (int i = 0; i < raster.x_axis.n_points; ++i) {
    std::fprintf(f, "%.17g", raster.x_axis.x(i));
    for (long j = 0; j < raster.values.rows(); ++j) std::fprintf(f, ",%.17g", raster.values(j, i));
    std::fprintf(f, "\n");
  }
  std::fclose(f);
}

}  // namespace qrev
