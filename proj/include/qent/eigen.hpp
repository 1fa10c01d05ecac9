#pragma once

#include <array>
#include <cstddef>

#include "qent/matrix.hpp"

namespace qent {

/// Eigenvalues in descending order; column k of `vectors` belongs to values[k].
template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values{};
  Matrix<Complex, N> vectors;
};

/// Cyclic complex Jacobi rotations on a self-adjoint matrix. Throws
/// DomainError when the input deviates from self-adjointness by more than 1e-10.
template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const Matrix<Complex, N>& h);

/// Eigenvalues only, descending.
template <std::size_t N>
std::array<double, N> hermitian_eigvals(const Matrix<Complex, N>& h);

/// Eigenvalues of `h` at or below this level are indistinguishable from zero
/// after Jacobi rotations (64 ulp of max(1, ||h||_F)).
double noise_floor(const Matrix4c& h);

/// Positive-semidefinite square root. Eigenvalues in [−1e-9, noise_floor] are
/// treated as zero; anything below −1e-9 is rejected.
Matrix4c psd_sqrt(const Matrix4c& h);

extern template EigenSystem<2> hermitian_eigensystem<2>(const Matrix<Complex, 2>&);
extern template EigenSystem<4> hermitian_eigensystem<4>(const Matrix<Complex, 4>&);
extern template std::array<double, 2> hermitian_eigvals<2>(const Matrix<Complex, 2>&);
extern template std::array<double, 4> hermitian_eigvals<4>(const Matrix<Complex, 4>&);

}  // namespace qent
