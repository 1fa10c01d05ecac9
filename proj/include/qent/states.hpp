#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "qent/errors.hpp"
#include "qent/matrix.hpp"
#include "qent/scalar_kind.hpp"

namespace qent {

// Two-party product basis order shared by every module: |00>, |01>, |10>, |11>.
// Index of |i>_A |j>_B is 2*i + j.
constexpr std::size_t basis_index(std::size_t a, std::size_t b) { return 2 * a + b; }

/// Tolerance used by every validity check on states.
inline constexpr double kValidityTol = 1e-9;

enum class DensityErrorCode { Trace, NotSelfAdjoint, NegativeEigenvalue, KindMismatch };

class DensityError : public Error {
 public:
  DensityError(DensityErrorCode code, const std::string& what) : Error(what), code_(code) {}
  DensityErrorCode code() const noexcept { return code_; }

 private:
  DensityErrorCode code_;
};

/// Eigenvalue 4-tuple on the probability simplex.
class SimplexPoint {
 public:
  /// Throws DomainError unless p_i ≥ 0 and Σ p_i = 1 within 1e-12.
  explicit SimplexPoint(const std::array<double, 4>& p);

  const std::array<double, 4>& p() const { return p_; }
  double operator[](std::size_t i) const { return p_[i]; }
  double sum_of_squares() const;

 private:
  std::array<double, 4> p_;
};

/// Validated two-party density matrix. Entries are stored in the complex
/// embedding; kind Real guarantees vanishing imaginary parts.
class DensityMatrix {
 public:
  /// Full validation; throws DensityError with a distinct code per failure.
  static DensityMatrix validate(const Matrix4c& m, ScalarKind kind);

  /// ρ = Q diag(p) Q† for unitary (orthogonal when kind is Real) Q. Checks
  /// unitarity and realness instead of diagonalising again.
  static DensityMatrix from_spectrum(const Matrix4c& q, const SimplexPoint& p, ScalarKind kind);

  const Matrix4c& matrix() const { return m_; }
  ScalarKind kind() const { return kind_; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  DensityMatrix(const Matrix4c& m, ScalarKind kind) : m_(m), kind_(kind) {}
  Matrix4c m_;
  ScalarKind kind_;
};

inline DensityMatrix validate_density(const Matrix4c& m, ScalarKind kind) {
  return DensityMatrix::validate(m, kind);
}

/// Normalised state vector of two parties (real coefficients for kind Real).
class PureState {
 public:
  /// Throws DomainError unless Σ|c_i|² = 1 within 1e-12 and, for kind Real,
  /// all coefficients are real. Quaternion kind is represented by QuaterbitPair.
  PureState(const std::array<Complex, 4>& coeffs, ScalarKind kind);

  const std::array<Complex, 4>& coeffs() const { return c_; }
  ScalarKind kind() const { return kind_; }
  const Complex& operator[](std::size_t i) const { return c_[i]; }

  /// |ψ><ψ|.
  DensityMatrix projector() const;

 private:
  std::array<Complex, 4> c_;
  ScalarKind kind_;
};

double purity(const DensityMatrix& rho);

/// R = 1 / Tr(ρ²), between 1 (pure) and 4 (maximally mixed).
double participation_ratio(const DensityMatrix& rho);
double participation_ratio(const SimplexPoint& p);

/// Reduced matrix of party A: ρ_A = Tr_B ρ.
template <class T>
Matrix<T, 2> partial_trace_a(const Matrix<T, 4>& m) {
  Matrix<T, 2> r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j) r(i, k) += m(basis_index(i, j), basis_index(k, j));
  return r;
}

/// Reduced matrix of party B: ρ_B = Tr_A ρ.
template <class T>
Matrix<T, 2> partial_trace_b(const Matrix<T, 4>& m) {
  Matrix<T, 2> r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t i = 0; i < 2; ++i) r(j, l) += m(basis_index(i, j), basis_index(i, l));
  return r;
}

inline Matrix2c partial_trace_a(const DensityMatrix& rho) { return partial_trace_a(rho.matrix()); }
inline Matrix2c partial_trace_b(const DensityMatrix& rho) { return partial_trace_b(rho.matrix()); }

/// −Σ μ log2 μ over the eigenvalues of a 2×2 reduced state (0·log 0 = 0).
double von_neumann_entropy(const Matrix2c& sigma);

/// Point of the regular side-1 tetrahedron centred at the origin.
struct TetrahedronPoint {
  std::array<double, 3> r{};
  double radius2() const { return r[0] * r[0] + r[1] * r[1] + r[2] * r[2]; }
};

/// Vertices of the eigenvalue tetrahedron: (±1,±1,±1)/√8 with an even number
/// of minus signs. Vertex i is the image of the pure spectrum e_i.
const std::array<TetrahedronPoint, 4>& tetrahedron_vertices();

/// Affine map Σ p_i v_i. Satisfies |r|² = −1/8 + ½ Σ p_i².
TetrahedronPoint simplex_to_tetrahedron(const SimplexPoint& p);

}  // namespace qent
