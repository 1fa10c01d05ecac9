#include "qent/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "qent/analysis.hpp"
#include "qent/entanglement.hpp"
#include "qent/errors.hpp"

namespace qent {
namespace {

constexpr double kZeroConcurrence = 1e-9;
constexpr double kBoundarySlack = 1e-9;
constexpr double kSeparabilityWall = 3.0;
constexpr int kSurfaceSteps = 64;
constexpr int kTraceSteps = 100;

template <class T>
std::vector<T> concat(std::vector<std::vector<T>> parts) {
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::vector<double> bin_indices(std::size_t bins) {
  std::vector<double> idx(bins);
  std::iota(idx.begin(), idx.end(), 0.0);
  return idx;
}

ResultTable base_table(const ExperimentSpec& spec) {
  ResultTable t;
  t.set_meta("name", std::string(to_string(spec.name)));
  t.set_meta("kind", std::string(system_name(spec.config.kind)));
  t.set_meta("seed", static_cast<std::int64_t>(spec.config.seed));
  t.set_meta("count", static_cast<std::int64_t>(spec.config.count));
  t.set_meta("workers", static_cast<std::int64_t>(spec.config.workers));
  t.set_meta("bins", static_cast<std::int64_t>(spec.bins));
  t.set_meta("version", std::string(kToolVersion));
  return t;
}

struct WallStats {
  std::vector<double> r;
  std::int64_t beyond = 0;
  std::int64_t zero_wootters = 0;
  std::int64_t ppt = 0;
  std::int64_t zero_rebit = 0;
  double max_wootters = 0.0;
  double min_ppt = std::numeric_limits<double>::infinity();
};

ResultTable run_fig1(const ExperimentSpec& spec) {
  const ScalarKind kind = spec.config.kind;
  auto parts = run_workers(spec.config, [kind](std::uint32_t, Rng& rng, std::uint64_t n) {
    WallStats s;
    s.r.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_mixed(kind, rng);
      const double r = participation_ratio(rho);
      s.r.push_back(r);
      if (r < kSeparabilityWall) continue;
      ++s.beyond;
      const double c = concurrence_qubit(rho);
      const double ppt = ppt_min_eigenvalue(rho);
      s.max_wootters = std::max(s.max_wootters, c);
      s.min_ppt = std::min(s.min_ppt, ppt);
      if (c < kZeroConcurrence) ++s.zero_wootters;
      if (ppt >= -kValidityTol) ++s.ppt;
      if (kind == ScalarKind::Real && concurrence_rebit(rho) < kZeroConcurrence) ++s.zero_rebit;
    }
    return s;
  });

  WallStats total;
  for (auto& p : parts) {
    total.r.insert(total.r.end(), p.r.begin(), p.r.end());
    total.beyond += p.beyond;
    total.zero_wootters += p.zero_wootters;
    total.ppt += p.ppt;
    total.zero_rebit += p.zero_rebit;
    total.max_wootters = std::max(total.max_wootters, p.max_wootters);
    total.min_ppt = std::min(total.min_ppt, p.min_ppt);
  }

  const DensityEstimate est = estimate_density(total.r, spec.bins, 1.0, 4.0);
  ResultTable t = base_table(spec);
  t.set_meta("r_wall", kSeparabilityWall);
  t.set_meta("r_ge_3_count", total.beyond);
  t.set_meta("r_ge_3_zero_concurrence_count", total.zero_wootters);
  t.set_meta("r_ge_3_zero_concurrence_fraction",
             total.beyond > 0 ? static_cast<double>(total.zero_wootters) / static_cast<double>(total.beyond) : 1.0);
  t.set_meta("r_ge_3_ppt_count", total.ppt);
  t.set_meta("r_ge_3_max_concurrence", total.max_wootters);
  t.set_meta("r_ge_3_min_ppt_eigenvalue", total.beyond > 0 ? total.min_ppt : 0.0);
  if (kind == ScalarKind::Real) t.set_meta("r_ge_3_zero_rebit_concurrence_count", total.zero_rebit);

  t.columns = {"r_lo", "r_hi", "density", "r_ge_3"};
  for (std::size_t i = 0; i < est.bins(); ++i)
    t.rows.push_back({est.bin_edges[i], est.bin_edges[i + 1], est.density[i],
                      std::int64_t{est.bin_edges[i] >= kSeparabilityWall ? 1 : 0}});
  return t;
}

std::vector<double> pure_e_samples(const SampleConfig& config) {
  auto c2 = pure_c2_samples(config);
  for (auto& v : c2) v = eof_from_concurrence(std::sqrt(v));
  return c2;
}

ResultTable run_fig2(const ExperimentSpec& spec) {
  const auto mixed = mixed_e_samples(spec.config);
  SampleConfig pure_config = spec.config;
  // Pure overlay draws from a disjoint key so it never replays the mixed stream.
  pure_config.seed = spec.config.seed ^ 0x9E3779B97F4A7C15ull;
  const auto pure = pure_e_samples(pure_config);

  const DensityEstimate mixed_est = estimate_density(mixed, spec.bins);
  const DensityEstimate pure_est = estimate_density(pure, spec.bins);
  const std::int64_t zero =
      std::count_if(mixed.begin(), mixed.end(), [](double e) { return e < kZeroConcurrence; });

  ResultTable t = base_table(spec);
  t.set_meta("measure", std::string(spec.config.kind == ScalarKind::Real ? "rebit" : "wootters"));
  t.set_meta("mixed_zero_e_fraction", static_cast<double>(zero) / static_cast<double>(mixed.size()));
  t.set_meta("mixed_mean_e", std::accumulate(mixed.begin(), mixed.end(), 0.0) / static_cast<double>(mixed.size()));
  t.set_meta("pure_mean_e", std::accumulate(pure.begin(), pure.end(), 0.0) / static_cast<double>(pure.size()));
  t.set_meta("mixed_spearman", spearman(bin_indices(mixed_est.bins()), mixed_est.density));

  t.columns = {"e_lo", "e_hi", "mixed_density", "pure_density"};
  for (std::size_t i = 0; i < mixed_est.bins(); ++i)
    t.rows.push_back({mixed_est.bin_edges[i], mixed_est.bin_edges[i + 1], mixed_est.density[i], pure_est.density[i]});
  return t;
}

ResultTable run_fig3(const ExperimentSpec& spec) {
  const ScalarKind kind = spec.config.kind;
  const auto c2 = pure_c2_samples(spec.config);
  const DensityEstimate est = estimate_density(c2, spec.bins);
  const DensityFunction curve = [kind](double x) { return analytic_p_c2(kind, x); };
  // The rebit density diverges at the origin, so bin 0 is compared separately.
  const std::size_t first = kind == ScalarKind::Real ? 1 : 0;

  ResultTable t = base_table(spec);
  t.set_meta("mean_c2", std::accumulate(c2.begin(), c2.end(), 0.0) / static_cast<double>(c2.size()));
  t.set_meta("analytic_mean_c2", analytic_mean_c2(kind));
  t.set_meta("l1_first_bin", static_cast<std::int64_t>(first));
  t.set_meta("l1_distance", l1_distance(est, curve, first));
  t.set_meta("bin0_empirical_density", est.density[0]);
  t.set_meta("bin0_analytic_density", bin_average(curve, est.bin_edges[0], est.bin_edges[1]));

  t.columns = {"c2_lo", "c2_hi", "empirical_density", "analytic_density"};
  for (std::size_t i = 0; i < est.bins(); ++i)
    t.rows.push_back({est.bin_edges[i], est.bin_edges[i + 1], est.density[i],
                      bin_average(curve, est.bin_edges[i], est.bin_edges[i + 1])});
  return t;
}

ResultTable run_fig4(const ExperimentSpec& spec) {
  ResultTable t = base_table(spec);
  t.set_meta("grid_step", 1.0 / kSurfaceSteps);
  t.columns = {"x", "y", "E"};
  for (int i = 0; i <= kSurfaceSteps; ++i)
    for (int j = 0; i + j <= kSurfaceSteps; ++j) {
      const double x = static_cast<double>(i) / kSurfaceSteps;
      const double y = static_cast<double>(j) / kSurfaceSteps;
      // x = C10² + C11², y = C12² + C13², spread evenly over each pair.
      const double a = std::sqrt(0.5 * x);
      const double b = std::sqrt(0.5 * y);
      const QuaterbitPair pair{Quaternion(a, a, b, b), Quaternion(std::sqrt(std::max(0.0, 1.0 - x - y)))};
      t.rows.push_back({x, y, quaterbit_pure_eof(pair)});
    }
  return t;
}

struct ScatterPart {
  std::vector<std::pair<double, double>> points;
  std::int64_t violations = 0;
  double max_excess = -std::numeric_limits<double>::infinity();
};

ResultTable run_boundary(const ExperimentSpec& spec) {
  auto parts = run_workers(spec.config, [](std::uint32_t, Rng& rng, std::uint64_t n) {
    ScatterPart s;
    s.points.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_mixed(ScalarKind::Real, rng);
      const double r = std::clamp(participation_ratio(rho), 1.0, 4.0);
      const double c = concurrence_rebit(rho);
      const double excess = c * c - max_c2(r);
      s.max_excess = std::max(s.max_excess, excess);
      if (excess > kBoundarySlack) ++s.violations;
      s.points.emplace_back(r, c * c);
    }
    return s;
  });

  ResultTable t = base_table(spec);
  t.columns = {"series", "r", "c2", "max_c2"};
  std::int64_t violations = 0;
  double max_excess = -std::numeric_limits<double>::infinity();
  for (const auto& p : parts) {
    violations += p.violations;
    max_excess = std::max(max_excess, p.max_excess);
    for (const auto& [r, c2] : p.points) t.rows.push_back({std::string("sample"), r, c2, max_c2(r)});
  }

  const auto trace_row = [](const char* series, const DensityMatrix& rho) -> std::vector<Cell> {
    const double r = std::clamp(participation_ratio(rho), 1.0, 4.0);
    const double c = concurrence_rebit(rho);
    return {std::string(series), r, c * c, max_c2(r)};
  };
  double witness_gap = 0.0;
  for (int k = 0; k <= kTraceSteps; ++k) {
    const double r = 1.0 + 3.0 * k / kTraceSteps;
    t.rows.push_back({std::string("bound"), r, max_c2(r), max_c2(r)});
  }
  for (int k = 0; k <= kTraceSteps; ++k) {
    const DensityMatrix rho = boundary_state(static_cast<double>(k) / kTraceSteps);
    auto row = trace_row("witness", rho);
    witness_gap = std::max(witness_gap, std::abs(std::get<double>(row[2]) - std::get<double>(row[3])));
    t.rows.push_back(std::move(row));
  }
  for (int k = 0; k <= kTraceSteps; ++k)
    t.rows.push_back(trace_row("plateau_witness", max_entangled_mixture(static_cast<double>(k) / kTraceSteps)));

  t.set_meta("violations", violations);
  t.set_meta("max_excess", max_excess);
  t.set_meta("witness_max_gap", witness_gap);
  return t;
}

}  // namespace

std::string_view to_string(ExperimentName name) {
  switch (name) {
    case ExperimentName::Fig1RDist: return "fig1_r_dist";
    case ExperimentName::Fig2EDist: return "fig2_e_dist";
    case ExperimentName::Fig3C2Pure: return "fig3_c2_pure";
    case ExperimentName::Fig4QuaterbitSurface: return "fig4_quaterbit_surface";
    case ExperimentName::BoundaryScan: return "boundary_scan";
  }
  return "unknown";
}

std::optional<ExperimentName> parse_experiment(std::string_view text) {
  for (auto n : {ExperimentName::Fig1RDist, ExperimentName::Fig2EDist, ExperimentName::Fig3C2Pure,
                 ExperimentName::Fig4QuaterbitSurface, ExperimentName::BoundaryScan})
    if (to_string(n) == text) return n;
  return std::nullopt;
}

std::size_t default_bins(ExperimentName name) { return name == ExperimentName::Fig1RDist ? 60 : 50; }

void ExperimentSpec::validate() const {
  config.validate();
  if (bins < 2) throw DomainError("experiment needs at least 2 bins");
  const ScalarKind kind = config.kind;
  const bool ok = [&] {
    switch (name) {
      case ExperimentName::Fig4QuaterbitSurface: return kind == ScalarKind::Quaternion;
      case ExperimentName::BoundaryScan: return kind == ScalarKind::Real;
      default: return kind == ScalarKind::Real || kind == ScalarKind::Complex;
    }
  }();
  if (!ok)
    throw DomainError(std::string(to_string(name)) + " does not support kind " + std::string(system_name(kind)));
}

ResultTable run_experiment(const ExperimentSpec& spec) {
  spec.validate();
  switch (spec.name) {
    case ExperimentName::Fig1RDist: return run_fig1(spec);
    case ExperimentName::Fig2EDist: return run_fig2(spec);
    case ExperimentName::Fig3C2Pure: return run_fig3(spec);
    case ExperimentName::Fig4QuaterbitSurface: return run_fig4(spec);
    case ExperimentName::BoundaryScan: return run_boundary(spec);
  }
  throw DomainError("unknown experiment");
}

std::vector<double> pure_c2_samples(const SampleConfig& config) {
  const ScalarKind kind = config.kind;
  return concat(run_workers(config, [kind](std::uint32_t, Rng& rng, std::uint64_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
      const double c = pure_concurrence(sample_pure(kind, rng));
      out.push_back(c * c);
    }
    return out;
  }));
}

std::vector<double> mixed_r_samples(const SampleConfig& config) {
  const ScalarKind kind = config.kind;
  return concat(run_workers(config, [kind](std::uint32_t, Rng& rng, std::uint64_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(participation_ratio(sample_mixed(kind, rng)));
    return out;
  }));
}

std::vector<double> mixed_e_samples(const SampleConfig& config) {
  const ScalarKind kind = config.kind;
  return concat(run_workers(config, [kind](std::uint32_t, Rng& rng, std::uint64_t n) {
    std::vector<double> out;
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(eof_from_concurrence(concurrence(sample_mixed(kind, rng))));
    return out;
  }));
}

}  // namespace qent
