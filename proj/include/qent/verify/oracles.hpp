#pragma once

// Reference computations that share no code path with the library routines
// they check. Everything here works in long double on plain arrays.

#include <array>

namespace qent::oracle {

using RealMatrix4 = std::array<std::array<double, 4>, 4>;

/// Coefficients c0..c3 of det(λI − A) = λ⁴ + c3 λ³ + c2 λ² + c1 λ + c0 (Faddeev–LeVerrier).
std::array<long double, 4> characteristic_polynomial(const RealMatrix4& a);

/// Eigenvalues of a real symmetric matrix as the roots of its characteristic
/// polynomial, bracketed by the roots of its derivatives and bisected. Descending.
std::array<double, 4> symmetric_eigenvalues(const RealMatrix4& a);

/// Werner state p|Φ+><Φ+| + (1−p)I/4 is invariant under the spin flip, so
/// ρρ̃ = ρ² and the λ_i are ρ's own eigenvalues: (1+3p)/4 once, (1−p)/4 three
/// times. Hence C = max(0, (3p−1)/2).
double werner_concurrence(double p);

/// −x log2 x − (1−x) log2(1−x) in long double.
double binary_entropy(double x);

}  // namespace qent::oracle
