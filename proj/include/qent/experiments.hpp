#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "qent/sampling.hpp"
#include "qent/table.hpp"

namespace qent {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class ExperimentName { Fig1RDist, Fig2EDist, Fig3C2Pure, Fig4QuaterbitSurface, BoundaryScan };

std::string_view to_string(ExperimentName name);
std::optional<ExperimentName> parse_experiment(std::string_view text);

/// 60 bins on the R axis, 50 elsewhere.
std::size_t default_bins(ExperimentName name);

struct ExperimentSpec {
  ExperimentName name = ExperimentName::Fig3C2Pure;
  SampleConfig config;  // config.kind selects the theory
  std::size_t bins = 50;

  /// Throws DomainError for a kind the experiment does not support or too few bins.
  void validate() const;
};

/// Deterministic in (name, kind, seed, count, workers, bins).
///
/// fig1_r_dist       r_lo, r_hi, density, r_ge_3
/// fig2_e_dist       e_lo, e_hi, mixed_density, pure_density
/// fig3_c2_pure      c2_lo, c2_hi, empirical_density, analytic_density
/// fig4_quaterbit_surface  x, y, E
/// boundary_scan     series, r, c2, max_c2
ResultTable run_experiment(const ExperimentSpec& spec);

/// Squared concurrence of `config.count` uniformly random pure states,
/// concatenated in worker order.
std::vector<double> pure_c2_samples(const SampleConfig& config);

/// Participation ratio of `config.count` random mixed states, in worker order.
std::vector<double> mixed_r_samples(const SampleConfig& config);

/// Entanglement of formation of random mixed states, measured in the state's
/// own theory, in worker order.
std::vector<double> mixed_e_samples(const SampleConfig& config);

}  // namespace qent
