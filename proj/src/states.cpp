#include "qent/states.hpp"

#include <cmath>

#include "qent/eigen.hpp"

namespace qent {
namespace {

double max_imag(const Matrix4c& m) {
  double r = 0.0;
  for (const auto& v : m.data) r = std::max(r, std::abs(v.imag()));
  return r;
}

}  // namespace

SimplexPoint::SimplexPoint(const std::array<double, 4>& p) : p_(p) {
  double s = 0.0;
  for (double v : p) {
    if (!(v >= 0.0)) throw DomainError("SimplexPoint: negative or NaN component");
    s += v;
  }
  if (std::abs(s - 1.0) > 1e-12) throw DomainError("SimplexPoint: components do not sum to 1");
}

double SimplexPoint::sum_of_squares() const {
  return p_[0] * p_[0] + p_[1] * p_[1] + p_[2] * p_[2] + p_[3] * p_[3];
}

DensityMatrix DensityMatrix::validate(const Matrix4c& m, ScalarKind kind) {
  if (kind == ScalarKind::Quaternion)
    throw DensityError(DensityErrorCode::KindMismatch,
                       "density matrix: quaternionic mixed states are not supported");
  if (kind == ScalarKind::Real && max_imag(m) > kValidityTol)
    throw DensityError(DensityErrorCode::KindMismatch, "density matrix: complex entry with kind real");
  if (!is_self_adjoint(m, kValidityTol))
    throw DensityError(DensityErrorCode::NotSelfAdjoint, "density matrix: not self-adjoint");
  if (std::abs(trace(m) - 1.0) > kValidityTol)
    throw DensityError(DensityErrorCode::Trace, "density matrix: trace is not 1");
  if (hermitian_eigvals(m)[3] < -kValidityTol)
    throw DensityError(DensityErrorCode::NegativeEigenvalue, "density matrix: negative eigenvalue");

  Matrix4c clean = m;
  if (kind == ScalarKind::Real)
    for (auto& v : clean.data) v = v.real();
  return DensityMatrix(clean, kind);
}

DensityMatrix DensityMatrix::from_spectrum(const Matrix4c& q, const SimplexPoint& p, ScalarKind kind) {
  if (kind == ScalarKind::Quaternion)
    throw DensityError(DensityErrorCode::KindMismatch,
                       "density matrix: quaternionic mixed states are not supported");
  if (kind == ScalarKind::Real && max_imag(q) > kValidityTol)
    throw DensityError(DensityErrorCode::KindMismatch, "density matrix: complex factor with kind real");
  if (max_abs_diff(adjoint(q) * q, Matrix4c::identity()) > kValidityTol)
    throw DomainError("density matrix: spectral factor is not unitary");

  Matrix4c m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < 4; ++k) s += q(i, k) * p[k] * std::conj(q(j, k));
      m(i, j) = s;
      m(j, i) = std::conj(s);
    }
  for (std::size_t i = 0; i < 4; ++i) m(i, i) = m(i, i).real();
  if (kind == ScalarKind::Real)
    for (auto& v : m.data) v = v.real();
  return DensityMatrix(m, kind);
}

PureState::PureState(const std::array<Complex, 4>& coeffs, ScalarKind kind) : c_(coeffs), kind_(kind) {
  if (kind == ScalarKind::Quaternion)
    throw DomainError("PureState: quaternionic states are represented by QuaterbitPair");
  double n = 0.0;
  for (const auto& c : coeffs) {
    n += std::norm(c);
    if (kind == ScalarKind::Real && c.imag() != 0.0)
      throw DomainError("PureState: complex coefficient with kind real");
  }
  if (std::abs(n - 1.0) > 1e-12) throw DomainError("PureState: vector is not normalised");
}

DensityMatrix PureState::projector() const {
  Matrix4c m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = c_[i] * std::conj(c_[j]);
  return DensityMatrix::validate(m, kind_);
}

double purity(const DensityMatrix& rho) {
  double s = 0.0;
  for (const auto& v : rho.matrix().data) s += std::norm(v);
  return s;
}

double participation_ratio(const DensityMatrix& rho) { return 1.0 / purity(rho); }
double participation_ratio(const SimplexPoint& p) { return 1.0 / p.sum_of_squares(); }

double von_neumann_entropy(const Matrix2c& sigma) {
  double s = 0.0;
  for (double mu : hermitian_eigvals(sigma))
    if (mu > 0.0) s -= mu * std::log2(mu);
  return std::clamp(s, 0.0, 1.0);
}

const std::array<TetrahedronPoint, 4>& tetrahedron_vertices() {
  static const std::array<TetrahedronPoint, 4> vertices = [] {
    const double a = 1.0 / std::sqrt(8.0);
    return std::array<TetrahedronPoint, 4>{TetrahedronPoint{{a, a, a}}, TetrahedronPoint{{a, -a, -a}},
                                           TetrahedronPoint{{-a, a, -a}}, TetrahedronPoint{{-a, -a, a}}};
  }();
  return vertices;
}

TetrahedronPoint simplex_to_tetrahedron(const SimplexPoint& p) {
  TetrahedronPoint out;
  const auto& v = tetrahedron_vertices();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t d = 0; d < 3; ++d) out.r[d] += p[i] * v[i].r[d];
  return out;
}

}  // namespace qent
