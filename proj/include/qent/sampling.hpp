#pragma once

#include <cstdint>
#include <thread>
#include <vector>

#include "qent/random.hpp"
#include "qent/states.hpp"

namespace qent {

struct SampleConfig {
  ScalarKind kind = ScalarKind::Complex;
  std::uint64_t seed = 42;
  std::uint64_t count = 100000;
  std::uint32_t workers = 1;

  /// Throws DomainError when count or workers is zero.
  void validate() const;
  /// Number of samples assigned to worker `w`; the first count % workers
  /// workers take one extra.
  std::uint64_t share(std::uint32_t w) const;
};

/// Flat (Lebesgue) point on the 3-simplex from normalised exponential spacings.
SimplexPoint sample_simplex(Rng& rng);

/// Haar-random element of O(4) (Real) or U(4) (Complex): Householder QR of a
/// Gaussian matrix with the diagonal of R rotated onto the positive axis.
Matrix4c sample_haar(ScalarKind kind, Rng& rng);

struct MixedSample {
  DensityMatrix rho;
  SimplexPoint spectrum;
};

/// ρ = Q diag(p) Q† with independent Q ~ Haar and p ~ flat simplex.
MixedSample sample_mixed_with_spectrum(ScalarKind kind, Rng& rng);
inline DensityMatrix sample_mixed(ScalarKind kind, Rng& rng) { return sample_mixed_with_spectrum(kind, rng).rho; }

/// Uniform unit vector in R⁴ (Real) or C⁴ (Complex).
PureState sample_pure(ScalarKind kind, Rng& rng);

/// Runs `fn(worker_index, rng, share)` once per worker on its own thread with
/// the worker's substream, returning the results in worker order.
template <class Fn>
auto run_workers(const SampleConfig& config, Fn&& fn) {
  config.validate();
  using Result = decltype(fn(std::uint32_t{0}, std::declval<Rng&>(), std::uint64_t{0}));
  std::vector<Result> results(config.workers);
  if (config.workers == 1) {
    Rng rng = derive_substream(config.seed, 0);
    results[0] = fn(std::uint32_t{0}, rng, config.share(0));
    return results;
  }
  std::vector<std::jthread> threads;
  threads.reserve(config.workers);
  for (std::uint32_t w = 0; w < config.workers; ++w)
    threads.emplace_back([&, w] {
      Rng rng = derive_substream(config.seed, w);
      results[w] = fn(w, rng, config.share(w));
    });
  threads.clear();
  return results;
}

}  // namespace qent
