#ifndef ARENA_MORTON_HPP
#define ARENA_MORTON_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <tuple>

#include "arena/common.hpp"

namespace arena {

// 3x21-bit anchors interleave into a 64-bit word; level is carried separately.
inline constexpr uint32_t kMaxDepth = 21;

namespace detail {

inline uint64_t spread3(uint64_t v) {
  v &= 0x1fffff;
  v = (v | v << 32) & 0x1f00000000ffffULL;
  v = (v | v << 16) & 0x1f0000ff0000ffULL;
  v = (v | v << 8) & 0x100f00f00f00f00fULL;
  v = (v | v << 4) & 0x10c30c30c30c30c3ULL;
  v = (v | v << 2) & 0x1249249249249249ULL;
  return v;
}

inline uint32_t compact3(uint64_t v) {
  v &= 0x1249249249249249ULL;
  v = (v ^ (v >> 2)) & 0x10c30c30c30c30c3ULL;
  v = (v ^ (v >> 4)) & 0x100f00f00f00f00fULL;
  v = (v ^ (v >> 8)) & 0x1f0000ff0000ffULL;
  v = (v ^ (v >> 16)) & 0x1f00000000ffffULL;
  v = (v ^ (v >> 32)) & 0x1fffff;
  return static_cast<uint32_t>(v);
}

} // namespace detail

/// Octant address: level plus integer anchor of the lower corner in units of 2^-level.
struct MortonKey {
  std::array<uint32_t, 3> anchor{0, 0, 0};
  uint32_t level = 0;

  /// Interleaved anchor bits shifted to the deepest level; primary sort key.
  uint64_t interleaved() const {
    const uint32_t s = kMaxDepth - level;
    return detail::spread3(uint64_t(anchor[0]) << s) | detail::spread3(uint64_t(anchor[1]) << s) << 1 |
           detail::spread3(uint64_t(anchor[2]) << s) << 2;
  }

  // Depth-first preorder: ancestors sort before their descendants.
  friend bool operator<(const MortonKey& a, const MortonKey& b) {
    const uint64_t ia = a.interleaved(), ib = b.interleaved();
    return ia != ib ? ia < ib : a.level < b.level;
  }
  friend bool operator==(const MortonKey& a, const MortonKey& b) {
    return a.level == b.level && a.anchor == b.anchor;
  }
  friend bool operator!=(const MortonKey& a, const MortonKey& b) { return !(a == b); }

  MortonKey parent() const {
    if (level == 0) throw std::invalid_argument("root has no parent");
    return {{anchor[0] >> 1, anchor[1] >> 1, anchor[2] >> 1}, level - 1};
  }

  /// Child c in 0..7, bit d of c selects the upper half along axis d.
  MortonKey child(int c) const {
    return {{(anchor[0] << 1) | uint32_t(c & 1), (anchor[1] << 1) | uint32_t((c >> 1) & 1),
             (anchor[2] << 1) | uint32_t((c >> 2) & 1)},
            level + 1};
  }

  int child_slot() const {
    return int(anchor[0] & 1) | int(anchor[1] & 1) << 1 | int(anchor[2] & 1) << 2;
  }

  bool is_ancestor_of(const MortonKey& k) const {
    if (k.level <= level) return false;
    const uint32_t s = k.level - level;
    return (k.anchor[0] >> s) == anchor[0] && (k.anchor[1] >> s) == anchor[1] && (k.anchor[2] >> s) == anchor[2];
  }

  double side() const { return std::ldexp(1.0, -int(level)); }
  Vec3 lower() const {
    const double h = side();
    return {anchor[0] * h, anchor[1] * h, anchor[2] * h};
  }
  Vec3 center() const {
    const double h = side();
    return {(anchor[0] + 0.5) * h, (anchor[1] + 0.5) * h, (anchor[2] + 0.5) * h};
  }

  bool contains(const Vec3& x) const {
    const Vec3 lo = lower();
    const double h = side();
    for (int d = 0; d < 3; ++d)
      if (x[d] < lo[d] || x[d] > lo[d] + h) return false;
    return true;
  }

  /// Same-level neighbor displaced by d (components in {-1,0,1}); wraps when periodic.
  std::optional<MortonKey> neighbor(const std::array<int, 3>& d, bool periodic) const {
    const int64_t n = int64_t(1) << level;
    std::array<uint32_t, 3> a;
    for (int k = 0; k < 3; ++k) {
      int64_t c = int64_t(anchor[k]) + d[k];
      if (c < 0 || c >= n) {
        if (!periodic) return std::nullopt;
        c = (c + n) % n;
      }
      a[k] = uint32_t(c);
    }
    return MortonKey{a, level};
  }
};

/// Closed cubes touch (26-connectivity), with wraparound on the unit torus if periodic.
inline bool touches(const MortonKey& a, const MortonKey& b, bool periodic) {
  const int64_t one = int64_t(1) << kMaxDepth;
  for (int d = 0; d < 3; ++d) {
    const int64_t alo = int64_t(a.anchor[d]) << (kMaxDepth - a.level);
    const int64_t blo = int64_t(b.anchor[d]) << (kMaxDepth - b.level);
    const int64_t ahi = alo + (one >> a.level);
    const int64_t bhi = blo + (one >> b.level);
    bool ok = alo <= bhi && blo <= ahi;
    if (periodic) ok = ok || (alo <= bhi - one && blo - one <= ahi) || (alo - one <= bhi && blo <= ahi - one);
    if (!ok) return false;
  }
  return true;
}

inline MortonKey morton_encode(uint32_t level, const std::array<uint32_t, 3>& anchor) {
  if (level > kMaxDepth) throw std::invalid_argument("morton_encode: level exceeds max depth");
  const uint64_t n = uint64_t(1) << level;
  for (int d = 0; d < 3; ++d)
    if (anchor[d] >= n) throw std::invalid_argument("morton_encode: anchor out of range for level");
  return MortonKey{anchor, level};
}

inline std::pair<uint32_t, std::array<uint32_t, 3>> morton_decode(const MortonKey& k) {
  const uint32_t s = kMaxDepth - k.level;
  const uint64_t iv = k.interleaved();
  std::array<uint32_t, 3> a{detail::compact3(iv) >> s, detail::compact3(iv >> 1) >> s, detail::compact3(iv >> 2) >> s};
  return {k.level, a};
}

} // namespace arena

#endif
