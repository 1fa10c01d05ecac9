#include "qent/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qent/errors.hpp"

namespace qent {
namespace {

constexpr double kSelfAdjointTol = 1e-10;
constexpr double kOffDiagonalTol = 1e-13;
constexpr int kMaxSweeps = 64;

template <std::size_t N>
double off_diagonal_norm(const Matrix<Complex, N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Annihilates a(p,q): a diagonal phase makes the pivot real, then a real
// Givens rotation zeroes it. Both are applied as similarity transforms and
// accumulated into v.
template <std::size_t N>
void rotate(Matrix<Complex, N>& a, Matrix<Complex, N>& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;

  const Complex phase = apq / mag;
  for (std::size_t k = 0; k < N; ++k) {
    a(k, q) *= std::conj(phase);
    v(k, q) *= std::conj(phase);
  }
  for (std::size_t k = 0; k < N; ++k) a(q, k) *= phase;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  for (std::size_t k = 0; k < N; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
  for (std::size_t k = 0; k < N; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * mag;
  a(q, q) = aqq + t * mag;
}

template <std::size_t N>
EigenSystem<N> solve(const Matrix<Complex, N>& h, bool sort_vectors) {
  if (!is_self_adjoint(h, kSelfAdjointTol))
    throw DomainError("hermitian_eigvals: matrix is not self-adjoint");

  Matrix<Complex, N> a = h;
  for (std::size_t i = 0; i < N; ++i) a(i, i) = a(i, i).real();
  Matrix<Complex, N> v = Matrix<Complex, N>::identity();
  const double threshold = kOffDiagonalTol * std::max(1.0, frobenius_norm(h));

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) < threshold) break;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) rotate(a, v, p, q);
  }

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return a(l, l).real() > a(r, r).real(); });

  EigenSystem<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    if (sort_vectors)
      for (std::size_t row = 0; row < N; ++row) out.vectors(row, k) = v(row, order[k]);
  }
  return out;
}

}  // namespace

double noise_floor(const Matrix4c& h) {
  return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, frobenius_norm(h));
}

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<Complex, N>& h) {
  return solve(h, true);
}

template <std::size_t N>
std::array<double, N> hermitian_eigvals(const Matrix<Complex, N>& h) {
  return solve(h, false).values;
}

template EigenSystem<2> hermitian_eigensystem<2>(const Matrix<Complex, 2>&);
template EigenSystem<4> hermitian_eigensystem<4>(const Matrix<Complex, 4>&);
template std::array<double, 2> hermitian_eigvals<2>(const Matrix<Complex, 2>&);
template std::array<double, 4> hermitian_eigvals<4>(const Matrix<Complex, 4>&);

Matrix4c psd_sqrt(const Matrix4c& h) {
  const auto es = hermitian_eigensystem(h);
  if (es.values[3] < -1e-9) throw DomainError("psd_sqrt: matrix has a negative eigenvalue");

  const double floor = noise_floor(h);
  Matrix4c s;
  for (std::size_t k = 0; k < 4; ++k) {
    const double root = es.values[k] > floor ? std::sqrt(es.values[k]) : 0.0;
    if (root == 0.0) continue;
    for (std::size_t i = 0; i < 4; ++i) {
      const Complex vik = es.vectors(i, k) * root;
      for (std::size_t j = 0; j < 4; ++j) s(i, j) += vik * std::conj(es.vectors(j, k));
    }
  }
  return s;
}

}  // namespace qent
