#include <doctest.h>

#include <algorithm>
#include <random>

#include "arena/morton.hpp"

using namespace arena;

TEST_CASE("encode/decode round trip, exhaustive low levels") {
  for (uint32_t level = 0; level <= 3; ++level) {
    const uint32_t n = 1u << level;
    for (uint32_t x = 0; x < n; ++x)
      for (uint32_t y = 0; y < n; ++y)
        for (uint32_t z = 0; z < n; ++z) {
          const MortonKey k = morton_encode(level, {x, y, z});
          auto [l, a] = morton_decode(k);
          CHECK(l == level);
          CHECK(a == std::array<uint32_t, 3>{x, y, z});
        }
  }
}

TEST_CASE("encode/decode round trip, randomized up to level 8 and at max depth") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 2000; ++trial) {
    const uint32_t level = (trial < 1000) ? uint32_t(rng() % 9) : kMaxDepth;
    const uint32_t n = 1u << level;
    const std::array<uint32_t, 3> a{uint32_t(rng() % n), uint32_t(rng() % n), uint32_t(rng() % n)};
    auto [l, b] = morton_decode(morton_encode(level, a));
    CHECK(l == level);
    CHECK(a == b);
  }
}

TEST_CASE("root key is minimal; first two level-1 children ordered") {
  const MortonKey root = morton_encode(0, {0, 0, 0});
  const MortonKey c0 = morton_encode(1, {0, 0, 0});
  const MortonKey c1 = morton_encode(1, {1, 0, 0});
  CHECK(root < c0);
  CHECK(c0 < c1);
}

TEST_CASE("level-2 sort equals recursive depth-first expansion") {
  // oracle: recursive preorder expansion to depth 2
  std::vector<MortonKey> dfs;
  std::function<void(const MortonKey&)> rec = [&](const MortonKey& k) {
    if (k.level == 2) {
      dfs.push_back(k);
      return;
    }
    for (int c = 0; c < 8; ++c) rec(k.child(c));
  };
  rec(MortonKey{});

  std::vector<MortonKey> keys;
  for (uint32_t x = 0; x < 4; ++x)
    for (uint32_t y = 0; y < 4; ++y)
      for (uint32_t z = 0; z < 4; ++z) keys.push_back(morton_encode(2, {x, y, z}));
  std::sort(keys.begin(), keys.end());

  REQUIRE(keys.size() == dfs.size());
  for (size_t i = 0; i < keys.size(); ++i) CHECK(keys[i] == dfs[i]);
}

TEST_CASE("out-of-range anchor rejected") {
  CHECK_THROWS_AS((void)morton_encode(1, {2, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)morton_encode(0, {1, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)morton_encode(kMaxDepth + 1, {0, 0, 0}), std::invalid_argument);
}

TEST_CASE("ancestor ordering and containment") {
  const MortonKey k = morton_encode(3, {5, 2, 7});
  MortonKey anc = k;
  while (anc.level > 0) {
    anc = anc.parent();
    CHECK(anc.is_ancestor_of(k));
    CHECK(anc < k);
  }
  CHECK(!k.is_ancestor_of(k));
}

TEST_CASE("neighbors and periodic wrap") {
  const MortonKey k = morton_encode(2, {0, 1, 3});
  auto n1 = k.neighbor({-1, 0, 0}, false);
  CHECK(!n1.has_value());
  auto n2 = k.neighbor({-1, 0, 0}, true);
  REQUIRE(n2.has_value());
  CHECK(n2->anchor == std::array<uint32_t, 3>{3, 1, 3});
  auto n3 = k.neighbor({0, 0, 1}, true);
  REQUIRE(n3.has_value());
  CHECK(n3->anchor == std::array<uint32_t, 3>{0, 1, 0});
}

TEST_CASE("touching across levels and wrap") {
  const MortonKey a = morton_encode(1, {0, 0, 0});
  const MortonKey b = morton_encode(2, {2, 0, 0});   // shares the face x=1/2
  CHECK(touches(a, b, false));
  const MortonKey c = morton_encode(2, {3, 3, 3});
  CHECK(!touches(a, c, false));
  CHECK(touches(a, c, true));   // corner-touches through the wrap
  CHECK(touches(a, a, false));
}
