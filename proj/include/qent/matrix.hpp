#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

#include "qent/quaternion.hpp"

namespace qent {

using Complex = std::complex<double>;

// Scalar traits shared by the three algebras.
inline double conj(double v) { return v; }
inline Complex conj(const Complex& v) { return std::conj(v); }
inline double norm2(double v) { return v * v; }
inline double norm2(const Complex& v) { return std::norm(v); }

/// Dense fixed-size square matrix, row-major.
template <class T, std::size_t N>
struct Matrix {
  std::array<T, N * N> data{};

  static constexpr std::size_t size() { return N; }

  static Matrix zero() { return Matrix{}; }
  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(1.0);
    return m;
  }
  static Matrix diagonal(const std::array<double, N>& d) {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = T(d[i]);
    return m;
  }

  T& operator()(std::size_t row, std::size_t col) { return data[row * N + col]; }
  const T& operator()(std::size_t row, std::size_t col) const { return data[row * N + col]; }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] += o.data[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t i = 0; i < N * N; ++i) data[i] -= o.data[i];
    return *this;
  }
  Matrix& operator*=(double s) {
    for (auto& v : data) v *= s;
    return *this;
  }
};

template <class T, std::size_t N>
Matrix<T, N> operator+(Matrix<T, N> a, const Matrix<T, N>& b) { return a += b; }
template <class T, std::size_t N>
Matrix<T, N> operator-(Matrix<T, N> a, const Matrix<T, N>& b) { return a -= b; }
template <class T, std::size_t N>
Matrix<T, N> operator*(Matrix<T, N> a, double s) { return a *= s; }
template <class T, std::size_t N>
Matrix<T, N> operator*(double s, Matrix<T, N> a) { return a *= s; }

template <class T, std::size_t N>
Matrix<T, N> operator*(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  Matrix<T, N> c;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < N; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// Conjugate transpose.
template <class T, std::size_t N>
Matrix<T, N> adjoint(const Matrix<T, N>& a) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = conj(a(i, j));
  return r;
}

template <class T, std::size_t N>
Matrix<T, N> transpose(const Matrix<T, N>& a) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(j, i) = a(i, j);
  return r;
}

/// Entrywise conjugate (identity on real entries).
template <class T, std::size_t N>
Matrix<T, N> conjugate(const Matrix<T, N>& a) {
  Matrix<T, N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.data[i] = conj(a.data[i]);
  return r;
}

template <class T, std::size_t N>
T trace(const Matrix<T, N>& a) {
  T t{};
  for (std::size_t i = 0; i < N; ++i) t += a(i, i);
  return t;
}

template <class T, std::size_t N>
double frobenius_norm(const Matrix<T, N>& a) {
  double s = 0.0;
  for (const auto& v : a.data) s += norm2(v);
  return std::sqrt(s);
}

/// Largest entrywise modulus of a − b.
template <class T, std::size_t N>
double max_abs_diff(const Matrix<T, N>& a, const Matrix<T, N>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < N * N; ++i) m = std::max(m, std::sqrt(norm2(a.data[i] - b.data[i])));
  return m;
}

/// Largest entrywise deviation from A = A†.
template <class T, std::size_t N>
double self_adjoint_defect(const Matrix<T, N>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) m = std::max(m, std::sqrt(norm2(a(i, j) - conj(a(j, i)))));
  return m;
}

template <class T, std::size_t N>
bool is_self_adjoint(const Matrix<T, N>& a, double tol) {
  return self_adjoint_defect(a) <= tol;
}

/// Kronecker product of two 2×2 matrices in the (00,01,10,11) basis order.
template <class T>
Matrix<T, 4> kron(const Matrix<T, 2>& a, const Matrix<T, 2>& b) {
  Matrix<T, 4> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return r;
}

using Matrix2c = Matrix<Complex, 2>;
using Matrix4c = Matrix<Complex, 4>;
using Matrix4q = Matrix<Quaternion, 4>;

}  // namespace qent
