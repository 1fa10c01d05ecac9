#pragma once

#include "qent/matrix.hpp"
#include "qent/quaternion.hpp"
#include "qent/states.hpp"

namespace qent {

/// Pauli σy.
const Matrix2c& sigma_y();
/// σy ⊗ σy in the product basis; real symmetric with spectrum {1, 1, −1, −1}.
const Matrix4c& sigma_yy();

/// ρ̃ = (σy⊗σy) ρ* (σy⊗σy).
Matrix4c spin_flip(const DensityMatrix& rho);

/// Wootters concurrence max(0, λ1 − λ2 − λ3 − λ4), with λ the square roots of
/// the eigenvalues of √ρ ρ̃ √ρ in decreasing order. Real-kind states are
/// evaluated in their complex embedding.
double concurrence_qubit(const DensityMatrix& rho);

/// Rebit concurrence |Tr(ρ σy⊗σy)|. Rejects anything but kind Real.
double concurrence_rebit(const DensityMatrix& rho);

/// The concurrence that measures entanglement in the state's own theory:
/// rebit formula for Real, Wootters for Complex.
double concurrence(const DensityMatrix& rho);

/// Concurrence of a pure state, |ψᵀ (σy⊗σy) ψ| = 2|c00 c11 − c01 c10|.
double pure_concurrence(const PureState& psi);

/// h(x) = −x log2 x − (1−x) log2(1−x).
double binary_entropy(double x);

/// E = h((1 + √(1 − C²)) / 2).
double eof_from_concurrence(double c);

/// Hyperspherical chart of a pure rebit over the σy⊗σy eigenbasis
/// (Ψ+, Φ−, Φ+, Ψ−):
///   c1 = cosθ cosφ1, c2 = cosθ sinφ1, c3 = sinθ cosφ2, c4 = sinθ sinφ2.
/// The first two basis states have σy⊗σy eigenvalue +1, the last two −1.
struct PureRebitAngles {
  double theta = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;

  /// θ ∈ [0, π/2], φ1, φ2 ∈ [0, 2π); throws DomainError otherwise.
  void validate() const;
};

/// The σy⊗σy eigenbasis used by the chart, as columns in the product basis.
const Matrix4c& sigma_yy_eigenbasis();

PureState rebit_from_angles(const PureRebitAngles& angles);
PureRebitAngles angles_from_rebit(const PureState& psi);

/// |cos 2θ|.
double pure_rebit_concurrence(const PureRebitAngles& angles);

/// Largest rebit C² compatible with participation ratio R ∈ [1, 4]:
/// 1 on [1, 2], 4/R − 1 on [2, 4].
double max_c2(double participation);

/// (I + t σy⊗σy) / 4 for t ∈ [0, 1]: spectrum (1±t)/4, C = t, R = 4/(1+t²).
/// Attains max_c2 on 2 ≤ R ≤ 4.
DensityMatrix boundary_state(double t);

/// p |Φ+><Φ+| + (1−p) |Ψ−><Ψ−|: both components have σy⊗σy eigenvalue −1,
/// so C = 1 while R = 1/(p² + (1−p)²) runs over [1, 2].
DensityMatrix max_entangled_mixture(double p);

/// C1 |00> + C2 |11> with quaternionic amplitudes.
struct QuaterbitPair {
  Quaternion c1;
  Quaternion c2;

  /// Throws DomainError unless |C1|² + |C2|² = 1 within 1e-12.
  void validate() const;
};

/// |ψ><ψ| with entries C_a conj(C_b).
Matrix4q quaterbit_density(const QuaterbitPair& pair);

/// Entropy of the reduced state of C1|00> + C2|11>; depends only on |C1|².
double quaterbit_pure_eof(const QuaterbitPair& pair);

/// Partial transpose over party B.
Matrix4c partial_transpose_b(const Matrix4c& m);

/// Minimum eigenvalue of ρ^{T_B}; non-negative iff ρ is separable (2×2 systems).
double ppt_min_eigenvalue(const DensityMatrix& rho);

}  // namespace qent
