#include <cmath>
#include <random>

#include "doctest.h"
#include "qent/eigen.hpp"
#include "qent/errors.hpp"
#include "qent/quaternion.hpp"
#include "qent/verify/oracles.hpp"

using namespace qent;

namespace {

Quaternion random_quaternion(std::mt19937_64& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  return {g(gen), g(gen), g(gen), g(gen)};
}

bool near(const Quaternion& a, const Quaternion& b, double tol) {
  return std::abs(a.w - b.w) <= tol && std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol &&
         std::abs(a.z - b.z) <= tol;
}

Matrix4c random_hermitian(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix4c m;
  for (std::size_t i = 0; i < 4; ++i) {
    m(i, i) = u(gen);
    for (std::size_t j = i + 1; j < 4; ++j) {
      m(i, j) = Complex(u(gen), u(gen));
      m(j, i) = std::conj(m(i, j));
    }
  }
  return m;
}

Matrix4c random_psd(std::mt19937_64& gen) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix4c b;
  for (auto& v : b.data) v = Complex(g(gen), g(gen));
  Matrix4c h = b * adjoint(b);
  return h * (1.0 / trace(h).real());
}

// Product of Givens rotations in every coordinate plane.
Matrix4c random_rotation(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
  Matrix4c q = Matrix4c::identity();
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t r = p + 1; r < 4; ++r) {
      const double a = angle(gen);
      Matrix4c g = Matrix4c::identity();
      g(p, p) = g(r, r) = std::cos(a);
      g(p, r) = -std::sin(a);
      g(r, p) = std::sin(a);
      q = q * g;
    }
  return q;
}

Matrix4c sigma_yy_by_hand() {
  Matrix4c m;
  m(0, 3) = m(3, 0) = -1.0;
  m(1, 2) = m(2, 1) = 1.0;
  return m;
}

}  // namespace

TEST_CASE("quaternion units follow the Hamilton rules") {
  const auto i = Quaternion::i();
  const auto j = Quaternion::j();
  const auto k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * j == -i);
  CHECK(k * i == j);
  CHECK(i * k == -j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(j * j == Quaternion(-1.0));
  CHECK(k * k == Quaternion(-1.0));
  CHECK(i * j * k == Quaternion(-1.0));

  const Quaternion q(0.3, -1.2, 2.5, 0.7);
  CHECK(Quaternion(1.0) * q == q);
  CHECK(q * Quaternion(1.0) == q);
}

TEST_CASE("quaternion conjugate and norm") {
  const auto [ci, ni] = conj_norm(Quaternion::i());
  CHECK(ci == -Quaternion::i());
  CHECK(ni == 1.0);
  CHECK(norm(Quaternion(1.0, 1.0, 1.0, 1.0)) == doctest::Approx(2.0).epsilon(1e-15));

  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Quaternion q = random_quaternion(gen);
    // Componentwise expansion of q * conj(q).
    const double w = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
    const double x = -q.w * q.x + q.x * q.w - q.y * q.z + q.z * q.y;
    const double y = -q.w * q.y + q.x * q.z + q.y * q.w - q.z * q.x;
    const double z = -q.w * q.z - q.x * q.y + q.y * q.x + q.z * q.w;
    CHECK(near(q * conj(q), Quaternion(w, x, y, z), 1e-13));
    CHECK(near(q * conj(q), Quaternion(norm2(q)), 1e-12));
  }
}

TEST_CASE("quaternion product is associative and the norm multiplicative") {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> small(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const auto ri = [&] { return Quaternion(small(gen), small(gen), small(gen), small(gen)); };
    const Quaternion a = ri(), b = ri(), c = ri();
    CHECK((a * b) * c == a * (b * c));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const Quaternion a = random_quaternion(gen), b = random_quaternion(gen), c = random_quaternion(gen);
    CHECK(near((a * b) * c, a * (b * c), 1e-12));
    CHECK(std::abs(norm(a * b) - norm(a) * norm(b)) <= 1e-12 * std::max(1.0, norm(a) * norm(b)));
  }
  CHECK_FALSE(Quaternion::i() * Quaternion::j() == Quaternion::j() * Quaternion::i());
}

TEST_CASE("embeddings of reals and complexes are exact") {
  const Complex a(0.5, -2.0), b(1.5, 0.25);
  const Quaternion qa = Quaternion::from_complex(a), qb = Quaternion::from_complex(b);
  CHECK(qa * qb == Quaternion::from_complex(a * b));
  CHECK(Quaternion(2.0) * Quaternion(3.0) == Quaternion(6.0));
}

TEST_CASE("hermitian_eigvals examples") {
  CHECK(hermitian_eigvals(Matrix4c::diagonal({0.1, 0.4, 0.2, 0.3})) == std::array<double, 4>{0.4, 0.3, 0.2, 0.1});

  const auto ev = hermitian_eigvals(sigma_yy_by_hand());
  const std::array<double, 4> expected{1.0, 1.0, -1.0, -1.0};
  for (int k = 0; k < 4; ++k) CHECK(ev[k] == doctest::Approx(expected[k]).epsilon(1e-14));

  Matrix4c bad = Matrix4c::identity();
  bad(0, 1) = 1e-6;
  CHECK_THROWS_AS(hermitian_eigvals(bad), DomainError);
}

TEST_CASE("hermitian eigensystem of random complex matrices") {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix4c h = random_hermitian(gen);
    const auto es = hermitian_eigensystem(h);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) sum += es.values[k];
    CHECK(std::abs(sum - trace(h).real()) <= 1e-10);
    for (int k = 0; k + 1 < 4; ++k) CHECK(es.values[k] >= es.values[k + 1]);

    CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors, Matrix4c::identity()) <= 1e-10);
    CHECK(max_abs_diff(h * es.vectors, es.vectors * Matrix4c::diagonal(es.values)) <= 1e-10);
  }
}

TEST_CASE("spectrum is invariant under orthogonal conjugation") {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < 500; ++trial) {
    const Matrix4c h = random_hermitian(gen);
    const Matrix4c q = random_rotation(gen);
    const auto a = hermitian_eigvals(h);
    const auto b = hermitian_eigvals(q * h * transpose(q));
    for (int k = 0; k < 4; ++k) CHECK(std::abs(a[k] - b[k]) <= 1e-9);
  }
}

TEST_CASE("Jacobi agrees with the characteristic-polynomial oracle") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    oracle::RealMatrix4 a{};
    Matrix4c m;
    for (int i = 0; i < 4; ++i)
      for (int j = i; j < 4; ++j) m(i, j) = m(j, i) = a[i][j] = a[j][i] = u(gen);
    const auto ref = oracle::symmetric_eigenvalues(a);
    const auto got = hermitian_eigvals(m);
    for (int k = 0; k < 4; ++k) worst = std::max(worst, std::abs(ref[k] - got[k]));
  }
  CHECK(worst < 1e-10);

  // Repeated roots exercise the oracle's no-sign-change branch.
  const oracle::RealMatrix4 yy{{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}}};
  const auto ev = oracle::symmetric_eigenvalues(yy);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(ev[3] == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("psd_sqrt examples") {
  CHECK(max_abs_diff(psd_sqrt(Matrix4c::identity()), Matrix4c::identity()) <= 1e-15);
  CHECK(max_abs_diff(psd_sqrt(Matrix4c::diagonal({0.25, 0.25, 0.25, 0.25})),
                     Matrix4c::diagonal({0.5, 0.5, 0.5, 0.5})) <= 1e-15);
  CHECK_NOTHROW(psd_sqrt(Matrix4c::diagonal({0.5, 0.5, 0.0, -1e-12})));
  CHECK_THROWS_AS(psd_sqrt(Matrix4c::diagonal({0.5, 0.5, 0.1, -0.1})), DomainError);
}

TEST_CASE("psd_sqrt squares back and commutes with its input") {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const Matrix4c h = random_psd(gen);
    const Matrix4c s = psd_sqrt(h);
    CHECK(is_self_adjoint(s, 1e-12));
    CHECK(hermitian_eigvals(s)[3] >= -1e-12);
    CHECK(max_abs_diff(s * s, h) <= 1e-10);
    CHECK(max_abs_diff(s * h, h * s) <= 1e-9);
  }
}
