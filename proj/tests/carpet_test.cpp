#include "qrev/carpet.hpp"

#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

using namespace qrev;
using namespace testutil;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CarpetRaster tiny_raster(int nx, int nt, Real fill) {
  CarpetRaster r;
  r.x_axis = {0.0, 1.0, nx};
  r.t_axis = linspace(0.0, 1.0, nt);
  r.values = RowMatrix::Constant(nt, nx, fill);
  return r;
}

}  // namespace

TEST_CASE("single-mode packet gives time-constant rows") {
  const EigenBasis basis = build_basis(pt_config());
  CoefficientSet c;
  c.spec = basis.spec;
  c.amplitudes = CVector::Zero(30);
  c.amplitudes[3] = 1.0;
  const CarpetRaster r = render_carpet(c, basis, default_grid(basis, 64),
                                       linspace(0.0, 0.5, 16));
  for (long j = 1; j < r.values.rows(); ++j) {
    for (long i = 0; i < r.values.cols(); ++i)
      CHECK(r.values(j, i) == doctest::Approx(r.values(0, i)).epsilon(1e-12));
  }
}

TEST_CASE("carpet symmetries: half-revival mirror and equal-phase time reflection") {
  const EigenBasis basis = build_basis(rm_config());
  const CoefficientSet c = gaussian_coefficients(basis.spec, 10.0, 4.0, PhaseScheme::equal);
  const SpatialGrid grid{-12.0, 12.0, 121};
  const auto taus = linspace(0.0, 1.0, 41);  // includes 0.5 and pairs tau <-> 1 - tau
  const CarpetRaster r = render_carpet(c, basis, grid, taus);
  const long nt = r.values.rows(), nx = r.values.cols();

  // row at t_R/2 equals row at 0 reversed in x
  const long half = 20;
  for (long i = 0; i < nx; ++i)
    CHECK(std::abs(r.values(half, i) - r.values(0, nx - 1 - i)) < 1e-8);

  // raster(x, 1/2 + tau) = raster(-x, tau)
  for (long j = 0; j + half < nt; ++j) {
    for (long i = 0; i < nx; ++i)
      CHECK(std::abs(r.values(j + half, i) - r.values(j, nx - 1 - i)) < 1e-8);
  }
  // equal phases: raster(x, 1 - tau) = raster(x, tau)
  for (long j = 0; j < nt; ++j) {
    for (long i = 0; i < nx; ++i)
      CHECK(std::abs(r.values(nt - 1 - j, i) - r.values(j, i)) < 1e-8);
  }
}

TEST_CASE("quarter-revival rows form a two-sided cat for a one-sided packet") {
  const EigenBasis basis = build_basis(rm_config());
  const CoefficientSet c = gaussian_coefficients(basis.spec, 10.0, 4.0, PhaseScheme::equal);
  const SpatialGrid grid{-12.0, 12.0, 301};
  const SampledBasis table = sample_basis(basis, grid);
  const Vector rho0 = probability_density(sample_wavefunction(c, table));
  const Vector rhoq = probability_density(
      sample_wavefunction(evolve_coefficients(c, basis, 0.25), table));

  Vector sym(grid.n_points), rho0r(grid.n_points);
  for (int i = 0; i < grid.n_points; ++i) rho0r[i] = rho0[grid.n_points - 1 - i];
  sym = 0.5 * (rho0 + rho0r);

  // normalized overlaps: the symmetric two-lump profile wins over the one-sided one
  const Real with_sym = rhoq.dot(sym) / (rhoq.norm() * sym.norm());
  const Real with_orig = rhoq.dot(rho0) / (rhoq.norm() * rho0.norm());
  CHECK(with_sym > with_orig);
}

TEST_CASE("PGM writer: header, uniform and zero rasters, big-endian samples") {
  const std::string path = "carpet_test.pgm";

  write_pgm(tiny_raster(300, 200, 0.7), 1.0, path);
  std::string data = slurp(path);
  CHECK(data.substr(0, 17) == "P5\n300 200\n65535\n");
  // uniform raster with gamma 1 -> every sample 65535
  const std::size_t header_len = data.find("65535\n") + 6;
  CHECK(data.size() == header_len + 2ull * 300 * 200);
  for (std::size_t i = header_len; i < data.size(); ++i)
    CHECK(static_cast<unsigned char>(data[i]) == 0xff);

  write_pgm(tiny_raster(4, 3, 0.0), 0.5, path);
  data = slurp(path);
  const std::size_t h2 = data.find("65535\n") + 6;
  for (std::size_t i = h2; i < data.size(); ++i) CHECK(data[i] == 0);

  // known two-pixel pattern: values {0, max} -> samples {0x0000, 0xffff}
  CarpetRaster two = tiny_raster(2, 1, 0.0);
  two.values(0, 1) = 2.0;
  write_pgm(two, 1.0, path);
  data = slurp(path);
  const std::size_t h3 = data.find("65535\n") + 6;
  REQUIRE(data.size() == h3 + 4);
  CHECK(static_cast<unsigned char>(data[h3 + 0]) == 0x00);
  CHECK(static_cast<unsigned char>(data[h3 + 1]) == 0x00);
  CHECK(static_cast<unsigned char>(data[h3 + 2]) == 0xff);
  CHECK(static_cast<unsigned char>(data[h3 + 3]) == 0xff);

  // byte-identical across repeated writes
  write_pgm(two, 1.0, "carpet_test2.pgm");
  CHECK(slurp("carpet_test2.pgm") == data);
  std::remove("carpet_test2.pgm");
  std::remove(path.c_str());
}

TEST_CASE("per-frame normalization brightens every row to full scale") {
  CarpetRaster r = tiny_raster(8, 4, 0.0);
  for (long j = 0; j < 4; ++j) r.values(j, 3) = 0.1 * (j + 1);  // dimming peaks
  r.normalization = CarpetNormalization::per_frame;
  const std::string path = "carpet_pf.pgm";
  write_pgm(r, 1.0, path);
  const std::string data = slurp(path);
  const std::size_t h = data.find("65535\n") + 6;
  for (long j = 0; j < 4; ++j) {
    CHECK(static_cast<unsigned char>(data[h + 16 * j + 6]) == 0xff);
    CHECK(static_cast<unsigned char>(data[h + 16 * j + 7]) == 0xff);
  }
  std::remove(path.c_str());
}

TEST_CASE("carpet CSV: bit-exact round trip, dimensions preserved") {
  const EigenBasis basis = build_basis(pt_config());
  const CoefficientSet c = gaussian_coefficients(basis.spec, 15.0, 3.0, PhaseScheme::equal);
  const CarpetRaster r = render_carpet(c, basis, default_grid(basis, 17),
                                       linspace(0.0, 0.5, 9));
  const std::string path = "carpet_test.csv";
  write_csv(r, path);

  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  // header: "x" plus 9 time labels
  CHECK(line.substr(0, 2) == "x,");
  int rows = 0;
  std::vector<std::vector<double>> parsed;
  while (std::getline(in, line)) {
    std::vector<double> vals;
    std::istringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) vals.push_back(std::strtod(cell.c_str(), nullptr));
    REQUIRE(vals.size() == 10);  // x + 9 densities
    parsed.push_back(vals);
    ++rows;
  }
  CHECK(rows == 17);
  for (int i = 0; i < 17; ++i) {
    CHECK(parsed[i][0] == r.x_axis.x(i));
    for (int j = 0; j < 9; ++j) CHECK(parsed[i][j + 1] == r.values(j, i));
  }
  std::remove(path.c_str());
}

TEST_CASE("emitter edge cases") {
  CarpetRaster empty;
  CHECK_THROWS_AS(write_csv(empty, "nope.csv"), std::invalid_argument);
  CHECK_THROWS_AS(write_pgm(empty, 1.0, "nope.pgm"), std::invalid_argument);
  CHECK_THROWS_AS(write_pgm(tiny_raster(2, 2, 1.0), 0.0, "nope.pgm"), std::invalid_argument);
  CHECK_THROWS_AS(render_carpet(CoefficientSet{pt_config(), CVector::Ones(30)},
                                build_basis(pt_config()), SpatialGrid{-0.4, 0.4, 8}, {}),
                  std::invalid_argument);
}
