#include "qrev/revival.hpp"

#include "qrev/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qrev {

namespace {

struct SectorSums {
  Complex even;
  Complex odd;
};

// a = sum_even p_n e^{-i 2 pi nu_n tau}, b = same over odd n.
SectorSums sector_sums(const CoefficientSet& c, const EigenBasis& basis, Real tau) {
  if (c.spec != basis.spec) throw std::invalid_argument("revival metric: basis mismatch");
  SectorSums s{};
  for (int n = 0; n < c.amplitudes.size(); ++n) {
    const Real cycles = std::fmod(level_number(basis.spec, n) * tau, 1.0);
    const Real angle = -2.0 * kPi * cycles;
    const Complex term = std::norm(c.amplitudes[n]) * Complex(std::cos(angle), std::sin(angle));
    (n % 2 == 0 ? s.even : s.odd) += term;
  }
  return s;
}

// Odd-mode factor of the quarter-revival target: -i*theta on the n^2 branch
// (PT/ISW), +i*theta on the -n^2 branch (RM).  three_quarter conjugates it.
Complex quarter_odd_factor(const PotentialSpec& spec, CatBranch which) {
  const Real theta = theta_sign(spec);
  Complex f = (spec.family == Family::RM) ? Complex(0.0, theta) : Complex(0.0, -theta);
  if (which == CatBranch::three_quarter) f = std::conj(f);
  return f;
}

}  // namespace

Complex autocorrelation(const CoefficientSet& c, const EigenBasis& basis, Real tau) {
  const SectorSums s = sector_sums(c, basis, tau);
  return s.even + s.odd;
}

Real mirror_fidelity(const CoefficientSet& c, const EigenBasis& basis, Real tau) {
  const SectorSums s = sector_sums(c, basis, tau);
  return std::abs(s.even - s.odd);
}

Real cat_fidelity(const CoefficientSet& c, const EigenBasis& basis, Real tau, CatBranch which) {
  const SectorSums s = sector_sums(c, basis, tau);
  // <d|c(t)> with d_n = c_n (even), f*c_n (odd): conj(f) multiplies the odd sum.
  return std::abs(s.even + std::conj(quarter_odd_factor(basis.spec, which)) * s.odd);
}

Real cat_fidelity_best(const CoefficientSet& c, const EigenBasis& basis, Real tau) {
  const SectorSums s = sector_sums(c, basis, tau);
  return std::max(std::abs(s.even + Complex(0.0, 1.0) * s.odd),
                  std::abs(s.even - Complex(0.0, 1.0) * s.odd));
}

std::string peak_kind_name(PeakKind k) {
  switch (k) {
    case PeakKind::full: return "full";
    case PeakKind::half: return "half";
    case PeakKind::quarter: return "quarter";
    case PeakKind::three_quarter: return "three-quarter";
    case PeakKind::other: return "other";
  }
  return "?";
}

RevivalReport revival_scan(const CoefficientSet& c, const EigenBasis& basis,
                           const std::vector<Real>& taus, const ScanOptions& opts) {
  if (taus.empty()) throw std::invalid_argument("revival_scan: empty time grid");
  if (!std::is_sorted(taus.begin(), taus.end()))
    throw std::invalid_argument("revival_scan: time grid must be sorted");

  RevivalReport rep;
  rep.t_revival = revival_time(basis.spec);
  rep.times = taus;
  const long n = static_cast<long>(taus.size());
  rep.autocorr.resize(n);
  rep.mirror_fidelity.resize(n);
  rep.cat_quarter.resize(n);
  rep.cat_three_quarter.resize(n);

  parallel_for(n, [&](long i) {
    const SectorSums s = sector_sums(c, basis, taus[i]);
    rep.autocorr[i] = s.even + s.odd;
    rep.mirror_fidelity[i] = std::abs(s.even - s.odd);
    const Complex fq = quarter_odd_factor(basis.spec, CatBranch::quarter);
    rep.cat_quarter[i] = std::abs(s.even + std::conj(fq) * s.odd);
    rep.cat_three_quarter[i] = std::abs(s.even + fq * s.odd);
  });

  // Combined revival strength; a peak is a local maximum above the threshold.
  std::vector<Real> strength(n);
  for (long i = 0; i < n; ++i) {
    strength[i] = std::max({std::abs(rep.autocorr[i]), rep.mirror_fidelity[i], rep.cat_quarter[i],
                            rep.cat_three_quarter[i]});
  }
  for (long i = 0; i < n; ++i) {
    const bool up = (i == 0) || strength[i] >= strength[i - 1];
    const bool down = (i == n - 1) || strength[i] >= strength[i + 1];
    const bool strict = (i > 0 && strength[i] > strength[i - 1]) ||
                        (i + 1 < n && strength[i] > strength[i + 1]) || n == 1;
    if (!(up && down && strict) || strength[i] < opts.peak_threshold) continue;
    const Real tau = taus[i];
    auto near = [&](Real target) {
      const Real d = std::fmod(std::abs(tau - target), 1.0);
      return std::min(d, 1.0 - d) <= opts.label_tolerance;
    };
    PeakKind kind = PeakKind::other;
    if (near(0.0)) kind = PeakKind::full;
    else if (near(0.5)) kind = PeakKind::half;
    else if (near(0.25)) kind = PeakKind::quarter;
    else if (near(0.75)) kind = PeakKind::three_quarter;
    rep.peaks.push_back({tau, kind, strength[i]});
  }
  return rep;
}

std::string to_json(const RevivalReport& report) {
  nlohmann::json j;
  j["t_revival"] = report.t_revival;
  j["times"] = report.times;
  auto& ac = j["autocorr"];
  ac = nlohmann::json::array();
  for (const Complex& z : report.autocorr) ac.push_back({z.real(), z.imag()});
  j["mirror_fidelity"] = report.mirror_fidelity;
  j["cat_quarter"] = report.cat_quarter;
  j["cat_three_quarter"] = report.cat_three_quarter;
  auto& pk = j["peaks"];
  pk = nlohmann::json::array();
  for (const RevivalPeak& p : report.peaks) {
    pk.push_back({{"tau", p.tau}, {"kind", peak_kind_name(p.kind)}, {"fidelity", p.fidelity}});
  }
  return j.dump(2);
}

void write_csv(const RevivalReport& report, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "tau,autocorr_re,autocorr_im,autocorr_abs,mirror_fidelity,cat_quarter,"
                  "cat_three_quarter\n");
  for (std::size_t i = 0; i < report.times.size(); ++i) {
    const Complex z = report.autocorr[i];
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", report.times[i], z.real(),
                 z.imag(), std::abs(z), report.mirror_fidelity[i], report.cat_quarter[i],
                 report.cat_three_quarter[i]);
  }
  std::fclose(f);
}

std::vector<DetuneRow> detune_scan(const PotentialSpec& base, const PacketRecipe& recipe,
                                   const std::vector<Real>& r_values,
                                   const std::vector<Real>& taus) {
  if (base.family != Family::RM) throw std::invalid_argument("detune requires RM");
  for (Real r : r_values) {
    if (r < 0.0 || r > 0.5)
      throw std::invalid_argument("detune.r_values: r must lie in [0, 0.5]");
  }
  std::vector<DetuneRow> rows(r_values.size() * taus.size());
  parallel_for(static_cast<long>(r_values.size()), [&](long i) {
    PotentialSpec spec = base;
    spec.detuning = r_values[i];
    const EigenBasis basis = build_basis(spec);
    const CoefficientSet c = make_coefficients(spec, recipe);
    for (std::size_t k = 0; k < taus.size(); ++k) {
      rows[i * taus.size() + k] = {r_values[i], taus[k], mirror_fidelity(c, basis, taus[k]),
                                   cat_fidelity_best(c, basis, taus[k])};
    }
  });
  return rows;
}

void write_csv(const std::vector<DetuneRow>& rows, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("write_csv: cannot open " + path);
  std::fprintf(f, "r,tau,mirror_fidelity,cat_fidelity\n");
  for (const DetuneRow& row : rows)
    std::fprintf(f, "%.17g,%.17g,%.17g,%.17g\n", row.r, row.tau, row.mirror, row.cat);
  std::fclose(f);
}

}  // namespace qrev
