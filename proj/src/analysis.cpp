#include "qent/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qent/errors.hpp"

namespace qent {

double DensityEstimate::integral() const {
  double s = 0.0;
  for (std::size_t i = 0; i < bins(); ++i) s += density[i] * width(i);
  return s;
}

Histogram::Histogram(double lo, double hi, std::size_t bins) : lo_(lo), hi_(hi), counts_(bins, 0) {
  if (bins < 2) throw DomainError("histogram needs at least 2 bins");
  if (!(hi > lo)) throw DomainError("histogram range is empty");
}

std::size_t Histogram::bin_of(double x) const {
  constexpr double slack = 1e-12;
  if (!(x >= lo_ - slack && x <= hi_ + slack)) throw DomainError("histogram sample outside range");
  x = std::clamp(x, lo_, hi_);
  const auto b = static_cast<std::size_t>((x - lo_) / (hi_ - lo_) * static_cast<double>(bins()));
  return std::min(b, bins() - 1);
}

void Histogram::add(double x) {
  ++counts_[bin_of(x)];
  ++total_;
}

void Histogram::merge(const Histogram& other) {
  if (other.bins() != bins() || other.lo_ != lo_ || other.hi_ != hi_)
    throw DomainError("histogram merge: incompatible binning");
  for (std::size_t i = 0; i < bins(); ++i) counts_[i] += other.counts_[i];
  total_ += other.total_;
}

DensityEstimate Histogram::estimate() const {
  if (total_ == 0) throw DomainError("density estimate of an empty sample set");
  DensityEstimate est;
  est.n = total_;
  est.bin_edges.resize(bins() + 1);
  for (std::size_t i = 0; i <= bins(); ++i)
    est.bin_edges[i] = lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(bins());
  est.bin_edges.back() = hi_;
  est.density.resize(bins());
  for (std::size_t i = 0; i < bins(); ++i)
    est.density[i] = static_cast<double>(counts_[i]) / (static_cast<double>(total_) * est.width(i));
  return est;
}

DensityEstimate estimate_density(std::span<const double> samples, std::size_t bins, double lo, double hi) {
  if (samples.empty()) throw DomainError("density estimate of an empty sample set");
  Histogram h(lo, hi, bins);
  for (double x : samples) h.add(x);
  return h.estimate();
}

double analytic_p_c2(ScalarKind kind, double c2) {
  switch (kind) {
    case ScalarKind::Real:
      if (!(c2 > 0.0 && c2 <= 1.0)) throw DomainError("analytic_p_c2: rebit density needs 0 < C^2 <= 1");
      return 0.5 / std::sqrt(c2);
    case ScalarKind::Complex:
      if (!(c2 >= 0.0 && c2 <= 1.0)) throw DomainError("analytic_p_c2: qubit density needs 0 <= C^2 <= 1");
      return 1.5 * std::sqrt(1.0 - c2);
    case ScalarKind::Quaternion:
      break;
  }
  throw DomainError("analytic_p_c2: quaternion kind unsupported");
}

double analytic_mean_c2(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Real: return 1.0 / 3.0;
    case ScalarKind::Complex: return 2.0 / 5.0;
    case ScalarKind::Quaternion: break;
  }
  throw DomainError("analytic_mean_c2: quaternion kind unsupported");
}

double bin_average(const DensityFunction& f, double a, double b) {
  constexpr int points = 16;
  double s = 0.0;
  for (int k = 0; k < points; ++k) s += f(a + (b - a) * (k + 0.5) / points);
  return s / points;
}

double l1_distance(const DensityEstimate& empirical, const DensityFunction& analytic, std::size_t first_bin) {
  double d = 0.0;
  for (std::size_t i = first_bin; i < empirical.bins(); ++i) {
    const double ref = bin_average(analytic, empirical.bin_edges[i], empirical.bin_edges[i + 1]);
    d += std::abs(empirical.density[i] - ref) * empirical.width(i);
  }
  return d;
}

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf) {
  if (samples.empty()) throw DomainError("ks_statistic: empty sample set");
  std::vector<double> s(samples.begin(), samples.end());
  std::sort(s.begin(), s.end());
  const double n = static_cast<double>(s.size());
  double d = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double f = cdf(s[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double ks_two_sample(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("ks_two_sample: empty sample set");
  std::vector<double> x(a.begin(), a.end());
  std::vector<double> y(b.begin(), b.end());
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  const double nx = static_cast<double>(x.size());
  const double ny = static_cast<double>(y.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < x.size() && j < y.size()) {
    const double v = std::min(x[i], y[j]);
    while (i < x.size() && x[i] == v) ++i;
    while (j < y.size() && y[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  return d;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> idx(v.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t l, std::size_t r) { return v[l] < v[r]; });
  std::vector<double> rank(v.size());
  for (std::size_t start = 0; start < idx.size();) {
    std::size_t stop = start + 1;
    while (stop < idx.size() && v[idx[stop]] == v[idx[start]]) ++stop;
    const double r = 0.5 * static_cast<double>(start + stop - 1) + 1.0;
    for (std::size_t k = start; k < stop; ++k) rank[idx[k]] = r;
    start = stop;
  }
  return rank;
}

}  // namespace

double spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw DomainError("spearman: need two equal-length series of size >= 2");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace qent
