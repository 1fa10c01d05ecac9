#include "qent/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace qent::oracle {
namespace {

using Poly = std::function<long double(long double)>;

// Root of a function monotone on [lo, hi]; when the ends share a sign the
// endpoint closest to zero stands in for a repeated root.
long double monotone_root(const Poly& f, long double lo, long double hi) {
  long double flo = f(lo);
  const long double fhi = f(hi);
  if (flo == 0.0L) return lo;
  if (fhi == 0.0L) return hi;
  if ((flo < 0.0L) == (fhi < 0.0L)) return std::fabs(flo) < std::fabs(fhi) ? lo : hi;
  for (int it = 0; it < 400; ++it) {
    const long double mid = 0.5L * (lo + hi);
    if (mid == lo || mid == hi) break;
    const long double fm = f(mid);
    if (fm == 0.0L) return mid;
    if ((fm < 0.0L) == (flo < 0.0L)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5L * (lo + hi);
}

}  // namespace

std::array<long double, 4> characteristic_polynomial(const RealMatrix4& a) {
  using M = std::array<std::array<long double, 4>, 4>;
  M m{};
  std::array<long double, 5> c{};
  c[4] = 1.0L;
  for (int k = 1; k <= 4; ++k) {
    M next{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        long double s = 0.0L;
        for (int l = 0; l < 4; ++l) s += static_cast<long double>(a[i][l]) * m[l][j];
        next[i][j] = s + (i == j ? c[5 - k] : 0.0L);
      }
    m = next;
    long double tr = 0.0L;
    for (int i = 0; i < 4; ++i)
      for (int l = 0; l < 4; ++l) tr += static_cast<long double>(a[i][l]) * m[l][i];
    c[4 - k] = -tr / k;
  }
  return {c[0], c[1], c[2], c[3]};
}

std::array<double, 4> symmetric_eigenvalues(const RealMatrix4& a) {
  const auto c = characteristic_polynomial(a);
  const Poly p = [&](long double x) { return (((x + c[3]) * x + c[2]) * x + c[1]) * x + c[0]; };
  const Poly dp = [&](long double x) { return ((4.0L * x + 3.0L * c[3]) * x + 2.0L * c[2]) * x + c[1]; };

  long double bound = 0.0L;
  for (int i = 0; i < 4; ++i) {
    long double row = 0.0L;
    for (int j = 0; j < 4; ++j) row += std::fabs(static_cast<long double>(a[i][j]));
    bound = std::max(bound, row);
  }
  bound += 1.0L;

  // p'' = 12x² + 6 c3 x + 2 c2 is real-rooted because p is.
  const long double qa = 12.0L;
  const long double qb = 6.0L * c[3];
  const long double qc = 2.0L * c[2];
  const long double disc = std::max(0.0L, qb * qb - 4.0L * qa * qc);
  const long double r1 = (-qb - std::sqrt(disc)) / (2.0L * qa);
  const long double r2 = (-qb + std::sqrt(disc)) / (2.0L * qa);

  const long double s1 = monotone_root(dp, -bound, r1);
  const long double s2 = monotone_root(dp, r1, r2);
  const long double s3 = monotone_root(dp, r2, bound);

  std::array<double, 4> ev{static_cast<double>(monotone_root(p, s3, bound)),
                           static_cast<double>(monotone_root(p, s2, s3)),
                           static_cast<double>(monotone_root(p, s1, s2)),
                           static_cast<double>(monotone_root(p, -bound, s1))};
  std::sort(ev.begin(), ev.end(), std::greater<>());
  return ev;
}

double werner_concurrence(double p) {
  const long double big = (1.0L + 3.0L * p) / 4.0L;
  const long double small = (1.0L - p) / 4.0L;
  return static_cast<double>(std::max(0.0L, big - 3.0L * small));
}

double binary_entropy(double x) {
  const long double v = x;
  long double h = 0.0L;
  if (v > 0.0L) h -= v * std::log2(v);
  if (v < 1.0L) h -= (1.0L - v) * std::log2(1.0L - v);
  return static_cast<double>(h);
}

}  // namespace qent::oracle
