#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qent/scalar_kind.hpp"

namespace qent {

/// Normalised histogram density over [lo, hi].
struct DensityEstimate {
  std::vector<double> bin_edges;  // bins + 1 entries
  std::vector<double> density;    // per unit x
  std::uint64_t n = 0;

  std::size_t bins() const { return density.size(); }
  double width(std::size_t bin) const { return bin_edges[bin + 1] - bin_edges[bin]; }
  double integral() const;
};

/// Fixed-range histogram of raw counts. Merging is bin-wise addition.
class Histogram {
 public:
  Histogram(double lo, double hi, std::size_t bins);

  /// Values outside the range by at most 1e-12 are clamped; beyond that a
  /// DomainError is thrown. `hi` itself lands in the last bin.
  void add(double x);
  void merge(const Histogram& other);

  std::size_t bin_of(double x) const;
  std::size_t bins() const { return counts_.size(); }
  std::uint64_t total() const { return total_; }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }

  /// Throws DomainError when empty.
  DensityEstimate estimate() const;

 private:
  double lo_;
  double hi_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

/// Throws DomainError for an empty sample set or fewer than two bins.
DensityEstimate estimate_density(std::span<const double> samples, std::size_t bins, double lo = 0.0, double hi = 1.0);

/// Closed-form density of C² for uniformly random pure states:
/// rebits 1/(2√C²) on (0, 1], qubits (3/2)√(1 − C²) on [0, 1].
double analytic_p_c2(ScalarKind kind, double c2);

/// First moment of analytic_p_c2: 1/3 for rebits, 2/5 for qubits.
double analytic_mean_c2(ScalarKind kind);

using DensityFunction = std::function<double(double)>;

/// Average of f over [a, b] with the 16-point midpoint rule.
double bin_average(const DensityFunction& f, double a, double b);

/// Σ |empirical − bin-averaged analytic| · width over bins [first_bin, B).
double l1_distance(const DensityEstimate& empirical, const DensityFunction& analytic, std::size_t first_bin = 0);

/// One-sample Kolmogorov–Smirnov statistic sup |F_n − F|. Sorts a copy.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample Kolmogorov–Smirnov statistic.
double ks_two_sample(std::span<const double> a, std::span<const double> b);

/// Spearman rank correlation, ties given their average rank.
double spearman(std::span<const double> x, std::span<const double> y);

}  // namespace qent
