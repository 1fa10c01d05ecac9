#include "qent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qent/eigen.hpp"
#include "qent/errors.hpp"

namespace qent {
namespace {

void require_unit_interval(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + ": argument outside [0, 1]");
}

void require_not_quaternion(const DensityMatrix& rho, const char* what) {
  if (rho.kind() == ScalarKind::Quaternion) throw DomainError(std::string(what) + ": quaternion kind unsupported");
}

}  // namespace

const Matrix2c& sigma_y() {
  static const Matrix2c s = [] {
    Matrix2c m;
    m(0, 1) = Complex(0.0, -1.0);
    m(1, 0) = Complex(0.0, 1.0);
    return m;
  }();
  return s;
}

const Matrix4c& sigma_yy() {
  static const Matrix4c s = kron(sigma_y(), sigma_y());
  return s;
}

Matrix4c spin_flip(const DensityMatrix& rho) {
  require_not_quaternion(rho, "spin_flip");
  return sigma_yy() * conjugate(rho.matrix()) * sigma_yy();
}

double concurrence_qubit(const DensityMatrix& rho) {
  require_not_quaternion(rho, "concurrence_qubit");
  const Matrix4c root = psd_sqrt(rho.matrix());
  Matrix4c m = root * spin_flip(rho) * root;
  m = 0.5 * (m + adjoint(m));
  const auto ev = hermitian_eigvals(m);
  const double floor = noise_floor(m);
  std::array<double, 4> lambda{};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = ev[i] > floor ? std::sqrt(ev[i]) : 0.0;
  return std::clamp(lambda[0] - lambda[1] - lambda[2] - lambda[3], 0.0, 1.0);
}

double concurrence_rebit(const DensityMatrix& rho) {
  if (rho.kind() != ScalarKind::Real) throw DomainError("concurrence_rebit: requires kind real");
  // Tr(ρ Y) with Y = σy⊗σy having −1 at (0,3),(3,0) and +1 at (1,2),(2,1).
  const auto& m = rho.matrix();
  const double t = -m(0, 3).real() - m(3, 0).real() + m(1, 2).real() + m(2, 1).real();
  return std::min(1.0, std::abs(t));
}

double concurrence(const DensityMatrix& rho) {
  return rho.kind() == ScalarKind::Real ? concurrence_rebit(rho) : concurrence_qubit(rho);
}

double pure_concurrence(const PureState& psi) {
  const auto& c = psi.coeffs();
  return std::min(1.0, 2.0 * std::abs(c[0] * c[3] - c[1] * c[2]));
}

double binary_entropy(double x) {
  require_unit_interval(x, "binary_entropy");
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return std::clamp(h, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  require_unit_interval(c, "eof_from_concurrence");
  return binary_entropy(0.5 * (1.0 + std::sqrt(1.0 - c * c)));
}

void PureRebitAngles::validate() const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!(theta >= 0.0 && theta <= 0.5 * std::numbers::pi)) throw DomainError("PureRebitAngles: theta outside [0, pi/2]");
  if (!(phi1 >= 0.0 && phi1 < two_pi) || !(phi2 >= 0.0 && phi2 < two_pi))
    throw DomainError("PureRebitAngles: phi outside [0, 2pi)");
}

const Matrix4c& sigma_yy_eigenbasis() {
  static const Matrix4c basis = [] {
    const double h = std::numbers::sqrt2 / 2.0;
    Matrix4c b;
    b(1, 0) = h;  b(2, 0) = h;   // Ψ+
    b(0, 1) = h;  b(3, 1) = -h;  // Φ−
    b(0, 2) = h;  b(3, 2) = h;   // Φ+
    b(1, 3) = h;  b(2, 3) = -h;  // Ψ−
    return b;
  }();
  return basis;
}

PureState rebit_from_angles(const PureRebitAngles& angles) {
  angles.validate();
  const std::array<double, 4> c{std::cos(angles.theta) * std::cos(angles.phi1),
                                std::cos(angles.theta) * std::sin(angles.phi1),
                                std::sin(angles.theta) * std::cos(angles.phi2),
                                std::sin(angles.theta) * std::sin(angles.phi2)};
  const auto& b = sigma_yy_eigenbasis();
  std::array<Complex, 4> psi{};
  double n = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    double s = 0.0;
    for (std::size_t k = 0; k < 4; ++k) s += b(i, k).real() * c[k];
    psi[i] = s;
    n += s * s;
  }
  for (auto& v : psi) v /= std::sqrt(n);
  return PureState(psi, ScalarKind::Real);
}

PureRebitAngles angles_from_rebit(const PureState& psi) {
  if (psi.kind() != ScalarKind::Real) throw DomainError("angles_from_rebit: requires kind real");
  const auto& b = sigma_yy_eigenbasis();
  std::array<double, 4> c{};
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < 4; ++i) c[k] += b(i, k).real() * psi[i].real();

  const auto wrap = [](double a) {
    a = std::fmod(a, 2.0 * std::numbers::pi);
    if (a < 0.0) a += 2.0 * std::numbers::pi;
    return a >= 2.0 * std::numbers::pi ? 0.0 : a;
  };
  PureRebitAngles out;
  out.theta = std::atan2(std::hypot(c[2], c[3]), std::hypot(c[0], c[1]));
  out.phi1 = wrap(std::atan2(c[1], c[0]));
  out.phi2 = wrap(std::atan2(c[3], c[2]));
  return out;
}

double pure_rebit_concurrence(const PureRebitAngles& angles) {
  angles.validate();
  return std::abs(std::cos(2.0 * angles.theta));
}

double max_c2(double participation) {
  if (!(participation >= 1.0 && participation <= 4.0)) throw DomainError("max_c2: R outside [1, 4]");
  return participation <= 2.0 ? 1.0 : 4.0 / participation - 1.0;
}

DensityMatrix boundary_state(double t) {
  require_unit_interval(t, "boundary_state");
  Matrix4c m = 0.25 * (Matrix4c::identity() + t * sigma_yy());
  return DensityMatrix::validate(m, ScalarKind::Real);
}

DensityMatrix max_entangled_mixture(double p) {
  require_unit_interval(p, "max_entangled_mixture");
  // Φ+ = (|00> + |11>)/√2 and Ψ− = (|01> − |10>)/√2.
  Matrix4c m;
  m(0, 0) = m(3, 3) = m(0, 3) = m(3, 0) = 0.5 * p;
  m(1, 1) = m(2, 2) = 0.5 * (1.0 - p);
  m(1, 2) = m(2, 1) = -0.5 * (1.0 - p);
  return DensityMatrix::validate(m, ScalarKind::Real);
}

void QuaterbitPair::validate() const {
  if (std::abs(norm2(c1) + norm2(c2) - 1.0) > 1e-12) throw DomainError("QuaterbitPair: |C1|^2 + |C2|^2 != 1");
}

Matrix4q quaterbit_density(const QuaterbitPair& pair) {
  const std::array<Quaternion, 4> psi{pair.c1, 0.0, 0.0, pair.c2};
  Matrix4q m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = psi[i] * conj(psi[j]);
  return m;
}

double quaterbit_pure_eof(const QuaterbitPair& pair) {
  pair.validate();
  const Matrix4q rho = quaterbit_density(pair);
  if (!is_self_adjoint(rho, 1e-12)) throw Error("quaterbit_pure_eof: density is not self-adjoint");
  // The reduced state of C1|00> + C2|11> is diag(|C1|², |C2|²) with real
  // quaternion entries, so its spectrum is its diagonal.
  const Matrix<Quaternion, 2> reduced = partial_trace_a(rho);
  const double mu = std::clamp(real_part(reduced(0, 0)), 0.0, 1.0);
  return binary_entropy(mu);
}

Matrix4c partial_transpose_b(const Matrix4c& m) {
  Matrix4c r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r(basis_index(i, j), basis_index(k, l)) = m(basis_index(i, l), basis_index(k, j));
  return r;
}

double ppt_min_eigenvalue(const DensityMatrix& rho) {
  require_not_quaternion(rho, "ppt_min_eigenvalue");
  return hermitian_eigvals(partial_transpose_b(rho.matrix()))[3];
}

}  // namespace qent
