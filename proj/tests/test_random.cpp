#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "qent/random.hpp"

using namespace qent;

static_assert(std::uniform_random_bit_generator<Philox4x32>);

TEST_CASE("Philox4x32-10 known-answer vectors") {
  // Random123 kat_vectors.
  CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == Philox4x32::Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::generate({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff}, {0xffffffff, 0xffffffff}) ==
        Philox4x32::Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::generate({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}) ==
        Philox4x32::Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("engine output is the block function over an incrementing counter") {
  Rng rng(0x0123456789abcdefull, 7);
  for (std::uint32_t block = 0; block < 4; ++block) {
    const auto b = Philox4x32::generate({block, 0, 7, 0}, {0x89abcdef, 0x01234567});
    CHECK(rng() == ((std::uint64_t{b[1]} << 32) | b[0]));
    CHECK(rng() == ((std::uint64_t{b[3]} << 32) | b[2]));
  }
}

TEST_CASE("substreams are reproducible") {
  Rng a = derive_substream(42, 3);
  Rng b = derive_substream(42, 3);
  for (int i = 0; i < 1000; ++i) CHECK(a() == b());

  Rng c = derive_substream(42, 3);
  Rng d = derive_substream(42, 3);
  for (int i = 0; i < 20; ++i) c();
  d.discard_blocks(10);
  CHECK(c() == d());
}

TEST_CASE("different workers produce disjoint leading outputs") {
  std::vector<std::set<std::uint64_t>> leading;
  for (std::uint64_t w = 0; w < 8; ++w) {
    Rng rng = derive_substream(42, w);
    std::set<std::uint64_t> s;
    for (int i = 0; i < 10000; ++i) s.insert(rng());
    leading.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < leading.size(); ++i)
    for (std::size_t j = i + 1; j < leading.size(); ++j) {
      std::vector<std::uint64_t> common;
      std::set_intersection(leading[i].begin(), leading[i].end(), leading[j].begin(), leading[j].end(),
                            std::back_inserter(common));
      CHECK(common.empty());
    }

  Rng s1 = derive_substream(1, 0);
  Rng s2 = derive_substream(2, 0);
  CHECK(s1() != s2());
}

TEST_CASE("uniform doubles from the engine have the right moments") {
  Rng rng(5, 0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double sum = 0.0;
  double sum2 = 0.0;
  constexpr int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = u(rng);
    sum += x;
    sum2 += x * x;
  }
  CHECK(sum / n == doctest::Approx(0.5).epsilon(0.005));
  CHECK(sum2 / n == doctest::Approx(1.0 / 3.0).epsilon(0.005));
}
