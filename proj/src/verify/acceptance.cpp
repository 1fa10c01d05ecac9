#include "qent/verify/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "qent/analysis.hpp"
#include "qent/eigen.hpp"
#include "qent/entanglement.hpp"
#include "qent/experiments.hpp"
#include "qent/verify/oracles.hpp"

namespace qent::verify {
namespace {

struct Check {
  bool passed;
  std::string detail;
};

std::string fmt(double v) { return format_number(v); }

ExperimentSpec make_spec(ExperimentName name, ScalarKind kind, std::uint64_t seed, std::uint64_t count,
                         std::uint32_t workers, std::size_t bins) {
  ExperimentSpec spec;
  spec.name = name;
  spec.config = SampleConfig{kind, seed, count, workers};
  spec.bins = bins;
  return spec;
}

// 1, 2: pure-state C² densities against the closed forms.
Check pure_density(const AcceptanceOptions& o, ScalarKind kind, double target_mean, std::uint32_t workers) {
  const auto t = run_experiment(make_spec(ExperimentName::Fig3C2Pure, kind, o.seed, o.samples, workers, 50));
  const double l1 = t.meta_number("l1_distance");
  const double mean = t.meta_number("mean_c2");
  const auto first = static_cast<std::int64_t>(t.meta_number("l1_first_bin"));
  const bool ok = l1 < 0.02 && std::abs(mean - target_mean) <= 0.003 &&
                  first == (kind == ScalarKind::Real ? 1 : 0);
  return {ok, "L1=" + fmt(l1) + " (from bin " + std::to_string(first) + ", < 0.02), mean C2=" + fmt(mean) +
                  " (target " + fmt(target_mean) + " +- 0.003)"};
}

// 3: every two-qubit state with R >= 3 is separable.
Check separability_wall(const AcceptanceOptions& o) {
  const auto t = run_experiment(
      make_spec(ExperimentName::Fig1RDist, ScalarKind::Complex, o.seed, o.samples, o.workers, 60));
  const double beyond = t.meta_number("r_ge_3_count");
  const double zero = t.meta_number("r_ge_3_zero_concurrence_count");
  const double ppt = t.meta_number("r_ge_3_ppt_count");
  const bool ok = beyond > 0 && zero == beyond && ppt == beyond;
  return {ok, "R>=3 states=" + fmt(beyond) + ", C<1e-9: " + fmt(zero) + ", PPT>=-1e-9: " + fmt(ppt) +
                  ", max C=" + fmt(t.meta_number("r_ge_3_max_concurrence")) +
                  ", min PT eigenvalue=" + fmt(t.meta_number("r_ge_3_min_ppt_eigenvalue"))};
}

// 4: no rebit state exceeds the C²max(R) bound; boundary_state saturates it.
Check rebit_boundary(const AcceptanceOptions& o) {
  SampleConfig config{ScalarKind::Real, o.seed, o.samples, o.workers};
  struct Part {
    std::int64_t violations = 0;
    double max_excess = -1.0;
  };
  const auto parts = run_workers(config, [](std::uint32_t, Rng& rng, std::uint64_t n) {
    Part p;
    for (std::uint64_t i = 0; i < n; ++i) {
      const DensityMatrix rho = sample_mixed(ScalarKind::Real, rng);
      const double r = std::clamp(participation_ratio(rho), 1.0, 4.0);
      const double c = concurrence_rebit(rho);
      const double excess = c * c - max_c2(r);
      p.max_excess = std::max(p.max_excess, excess);
      if (excess > 1e-9) ++p.violations;
    }
    return p;
  });
  std::int64_t violations = 0;
  double max_excess = -1.0;
  for (const auto& p : parts) {
    violations += p.violations;
    max_excess = std::max(max_excess, p.max_excess);
  }

  double gap = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const DensityMatrix rho = boundary_state(k / 100.0);
    const double c = concurrence_rebit(rho);
    gap = std::max(gap, std::abs(c * c - max_c2(participation_ratio(rho))));
  }
  return {violations == 0 && gap <= 1e-12, "violations=" + std::to_string(violations) + ", max C2-bound=" +
                                               fmt(max_excess) + ", witness saturation gap=" + fmt(gap) +
                                               " (<= 1e-12)"};
}

// 5: maximally entangled mixed rebits across 1 <= R <= 2.
Check plateau() {
  double worst = 0.0;
  double r_min = 10.0;
  double r_max = 0.0;
  for (int k = 0; k <= 100; ++k) {
    const DensityMatrix rho = max_entangled_mixture(k / 100.0);
    worst = std::max(worst, std::abs(concurrence_rebit(rho) - 1.0));
    const double r = participation_ratio(rho);
    r_min = std::min(r_min, r);
    r_max = std::max(r_max, r);
  }
  const bool ok = worst <= 1e-12 && std::abs(r_min - 1.0) <= 1e-12 && std::abs(r_max - 2.0) <= 1e-12;
  return {ok, "max |C-1|=" + fmt(worst) + ", R range=[" + fmt(r_min) + ", " + fmt(r_max) + "]"};
}

// 6: mixed-state P(E) decreases with E.
Check monotone_pe(const AcceptanceOptions& o) {
  std::ostringstream detail;
  bool ok = true;
  for (ScalarKind kind : {ScalarKind::Real, ScalarKind::Complex}) {
    const auto e = mixed_e_samples(SampleConfig{kind, o.seed, o.samples, o.workers});
    const auto est = estimate_density(e, 20);
    std::vector<double> idx(est.bins());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<double>(i);
    const double rho = spearman(idx, est.density);
    ok = ok && rho <= -0.9;
    detail << system_name(kind) << " spearman=" << fmt(rho) << " ";
  }
  detail << "(<= -0.9)";
  return {ok, detail.str()};
}

// 7: Jacobi eigenvalues against characteristic-polynomial roots.
Check eigensolver(const AcceptanceOptions& o) {
  std::mt19937_64 gen(o.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    oracle::RealMatrix4 a{};
    Matrix4c m;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) {
        a[i][j] = a[j][i] = u(gen);
        m(i, j) = m(j, i) = a[i][j];
      }
    const auto ref = oracle::symmetric_eigenvalues(a);
    const auto got = hermitian_eigvals(m);
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(ref[k] - got[k]));
  }
  return {worst < 1e-10, "max |jacobi - charpoly|=" + fmt(worst) + " over 10^4 matrices (< 1e-10)"};
}

// 8: Wootters concurrence of the Werner family.
Check werner() {
  double worst = 0.0;
  const double h = std::numbers::sqrt2 / 2.0;
  Matrix4c bell;
  bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = h * h;
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    const DensityMatrix rho =
        DensityMatrix::validate(p * bell + (1.0 - p) * 0.25 * Matrix4c::identity(), ScalarKind::Complex);
    worst = std::max(worst, std::abs(concurrence_qubit(rho) - oracle::werner_concurrence(p)));
  }
  return {worst <= 1e-10, "max |C - max(0,(3p-1)/2)|=" + fmt(worst) + " on 101 points (<= 1e-10)"};
}

// 9: quaterbit surface and its phase invariance.
Check quaterbit(const AcceptanceOptions& o) {
  const auto t = run_experiment(
      make_spec(ExperimentName::Fig4QuaterbitSurface, ScalarKind::Quaternion, o.seed, 1, 1, 50));
  double surface = 0.0;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const double x = t.number(r, "x");
    const double y = t.number(r, "y");
    surface = std::max(surface, std::abs(t.number(r, "E") - oracle::binary_entropy(x + y)));
  }

  std::mt19937_64 gen(o.seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const auto unit = [&] {
    Quaternion q(g(gen), g(gen), g(gen), g(gen));
    return q * (1.0 / norm(q));
  };
  double phase = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const double n1 = u(gen);
    const QuaterbitPair base{unit() * std::sqrt(n1), unit() * std::sqrt(1.0 - n1)};
    const double e0 = quaterbit_pure_eof(base);
    const Quaternion v = unit();
    const QuaterbitPair left{v * base.c1, base.c2};
    const QuaterbitPair right{base.c1 * v, base.c2 * v};
    phase = std::max({phase, std::abs(quaterbit_pure_eof(left) - e0), std::abs(quaterbit_pure_eof(right) - e0)});
  }
  return {surface <= 1e-12 && phase < 1e-12, "grid points=" + std::to_string(t.rows.size()) +
                                                 ", max |E-h(x+y)|=" + fmt(surface) +
                                                 ", max phase drift=" + fmt(phase)};
}

// 10: determinism and worker-count independence.
Check determinism(const AcceptanceOptions& o) {
  const std::uint64_t n = std::max<std::uint64_t>(1000, o.samples / 50);
  const std::uint32_t w = std::max<std::uint32_t>(o.workers, 3);
  bool identical = true;
  for (const auto& spec : {make_spec(ExperimentName::Fig1RDist, ScalarKind::Complex, o.seed, n, w, 60),
                           make_spec(ExperimentName::Fig2EDist, ScalarKind::Real, o.seed, n, w, 50),
                           make_spec(ExperimentName::Fig3C2Pure, ScalarKind::Complex, o.seed, n, w, 50),
                           make_spec(ExperimentName::Fig4QuaterbitSurface, ScalarKind::Quaternion, o.seed, n, w, 50),
                           make_spec(ExperimentName::BoundaryScan, ScalarKind::Real, o.seed, n, w, 50)}) {
    const auto a = run_experiment(spec);
    const auto b = run_experiment(spec);
    identical = identical && to_csv(a) == to_csv(b) && to_json(a) == to_json(b);
  }

  const std::uint64_t ks_n = std::max<std::uint64_t>(10000, o.samples / 10);
  const double ks_pure = ks_two_sample(pure_c2_samples(SampleConfig{ScalarKind::Real, o.seed, ks_n, 1}),
                                       pure_c2_samples(SampleConfig{ScalarKind::Real, o.seed, ks_n, 8}));
  const double ks_mixed = ks_two_sample(mixed_r_samples(SampleConfig{ScalarKind::Complex, o.seed, ks_n, 1}),
                                        mixed_r_samples(SampleConfig{ScalarKind::Complex, o.seed, ks_n, 8}));
  return {identical && ks_pure < 0.01 && ks_mixed < 0.01,
          std::string("repeat runs byte-identical: ") + (identical ? "yes" : "no") +
              ", KS(workers 1 vs 8) pure C2=" + fmt(ks_pure) + ", mixed R=" + fmt(ks_mixed) + " (< 0.01)"};
}

}  // namespace

std::vector<CriterionOutcome> run_acceptance(const AcceptanceOptions& o, std::ostream& log) {
  const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
      {"pure-rebit C2 density", [&] { return pure_density(o, ScalarKind::Real, 1.0 / 3.0, 1); }},
      {"pure-qubit C2 density", [&] { return pure_density(o, ScalarKind::Complex, 2.0 / 5.0, o.workers); }},
      {"separability wall R >= 3", [&] { return separability_wall(o); }},
      {"rebit C2max(R) boundary", [&] { return rebit_boundary(o); }},
      {"maximally entangled mixed rebits", [] { return plateau(); }},
      {"monotone mixed-state P(E)", [&] { return monotone_pe(o); }},
      {"eigensolver vs characteristic polynomial", [&] { return eigensolver(o); }},
      {"Werner concurrence closed form", [] { return werner(); }},
      {"quaterbit surface", [&] { return quaterbit(o); }},
      {"determinism", [&] { return determinism(o); }},
  };

  std::vector<CriterionOutcome> out;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    CriterionOutcome c;
    c.id = static_cast<int>(i + 1);
    c.title = criteria[i].first;
    try {
      const Check r = criteria[i].second();
      c.passed = r.passed;
      c.detail = r.detail;
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail = std::string("exception: ") + e.what();
    }
    c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    log << (c.passed ? "[PASS] " : "[FAIL] ") << "AC" << c.id << " " << c.title << ": " << c.detail << " ["
        << format_number(std::round(c.seconds * 100.0) / 100.0) << " s]" << std::endl;
    out.push_back(std::move(c));
  }
  return out;
}

bool all_passed(const std::vector<CriterionOutcome>& outcomes) {
  return std::all_of(outcomes.begin(), outcomes.end(), [](const auto& c) { return c.passed; });
}

}  // namespace qent::verify
