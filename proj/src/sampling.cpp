#include "qent/sampling.hpp"

#include <cmath>
#include <random>

#include "qent/errors.hpp"

namespace qent {

void SampleConfig::validate() const {
  if (count == 0) throw DomainError("sample count must be at least 1");
  if (workers == 0) throw DomainError("worker count must be at least 1");
}

std::uint64_t SampleConfig::share(std::uint32_t w) const {
  return count / workers + (w < count % workers ? 1 : 0);
}

SimplexPoint sample_simplex(Rng& rng) {
  std::exponential_distribution<double> spacing(1.0);
  std::array<double, 4> e{};
  double total = 0.0;
  for (auto& v : e) {
    v = spacing(rng);
    total += v;
  }
  for (auto& v : e) v /= total;
  // Renormalise the last component so the sum is exact to the last ulp.
  e[3] = std::max(0.0, 1.0 - e[0] - e[1] - e[2]);
  return SimplexPoint(e);
}

Matrix4c sample_haar(ScalarKind kind, Rng& rng) {
  if (kind != ScalarKind::Real && kind != ScalarKind::Complex)
    throw DomainError("sample_haar: kind must be real or complex");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix4c a;
  for (auto& v : a.data) v = kind == ScalarKind::Real ? Complex(gauss(rng), 0.0) : Complex(gauss(rng), gauss(rng));

  // Householder QR: a is reduced to R in place while Q accumulates the reflections.
  Matrix4c q = Matrix4c::identity();
  std::array<Complex, 4> r_diag{};
  for (std::size_t k = 0; k < 4; ++k) {
    double col_norm2 = 0.0;
    for (std::size_t i = k; i < 4; ++i) col_norm2 += std::norm(a(i, k));
    const double col_norm = std::sqrt(col_norm2);
    const Complex akk = a(k, k);
    const Complex phase = std::abs(akk) > 0.0 ? akk / std::abs(akk) : Complex(1.0);
    const Complex alpha = -phase * col_norm;  // R_kk

    std::array<Complex, 4> v{};
    for (std::size_t i = k; i < 4; ++i) v[i] = a(i, k);
    v[k] -= alpha;
    double v_norm2 = 0.0;
    for (std::size_t i = k; i < 4; ++i) v_norm2 += std::norm(v[i]);
    r_diag[k] = alpha;
    if (v_norm2 == 0.0) continue;

    // a <- (I − 2 v v† / v†v) a
    for (std::size_t j = k; j < 4; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < 4; ++i) dot += std::conj(v[i]) * a(i, j);
      const Complex f = 2.0 * dot / v_norm2;
      for (std::size_t i = k; i < 4; ++i) a(i, j) -= f * v[i];
    }
    // q <- q (I − 2 v v† / v†v)
    for (std::size_t row = 0; row < 4; ++row) {
      Complex dot = 0.0;
      for (std::size_t i = k; i < 4; ++i) dot += q(row, i) * v[i];
      const Complex f = 2.0 * dot / v_norm2;
      for (std::size_t i = k; i < 4; ++i) q(row, i) -= f * std::conj(v[i]);
    }
  }

  // Q <- Q diag(R_kk / |R_kk|) makes the factorisation unique, hence Haar.
  for (std::size_t k = 0; k < 4; ++k) {
    const double m = std::abs(r_diag[k]);
    const Complex ph = m > 0.0 ? r_diag[k] / m : Complex(1.0);
    for (std::size_t row = 0; row < 4; ++row) q(row, k) *= ph;
  }
  if (kind == ScalarKind::Real)
    for (auto& v : q.data) v = v.real();
  return q;
}

MixedSample sample_mixed_with_spectrum(ScalarKind kind, Rng& rng) {
  const Matrix4c q = sample_haar(kind, rng);
  const SimplexPoint p = sample_simplex(rng);
  return {DensityMatrix::from_spectrum(q, p, kind), p};
}

PureState sample_pure(ScalarKind kind, Rng& rng) {
  if (kind != ScalarKind::Real && kind != ScalarKind::Complex)
    throw DomainError("sample_pure: kind must be real or complex");
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::array<Complex, 4> c{};
  double n = 0.0;
  do {
    n = 0.0;
    for (auto& v : c) {
      v = kind == ScalarKind::Real ? Complex(gauss(rng), 0.0) : Complex(gauss(rng), gauss(rng));
      n += std::norm(v);
    }
  } while (n == 0.0);
  const double inv = 1.0 / std::sqrt(n);
  for (auto& v : c) v *= inv;
  return PureState(c, kind);
}

}  // namespace qent
