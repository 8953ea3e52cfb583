#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <span>
#include <unordered_set>
#include <vector>

#include "leaper/error.hpp"

namespace leaper {

/// Integer plane vector, also used for board points.
struct IntVec {
  std::int64_t x = 0;
  std::int64_t y = 0;

  constexpr IntVec() = default;
  constexpr IntVec(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

  constexpr IntVec& operator+=(IntVec o) { x += o.x; y += o.y; return *this; }
  constexpr IntVec& operator-=(IntVec o) { x -= o.x; y -= o.y; return *this; }

  friend constexpr IntVec operator+(IntVec a, IntVec b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr IntVec operator-(IntVec a, IntVec b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr IntVec operator-(IntVec a) { return {-a.x, -a.y}; }
  friend constexpr IntVec operator*(std::int64_t k, IntVec a) { return {k * a.x, k * a.y}; }

  friend constexpr bool operator==(IntVec, IntVec) = default;
  friend constexpr auto operator<=>(IntVec, IntVec) = default;

  friend std::ostream& operator<<(std::ostream& os, IntVec v) {
    return os << '(' << v.x << ',' << v.y << ')';
  }
};

constexpr std::int64_t cross(IntVec a, IntVec b) { return a.x * b.y - a.y * b.x; }

constexpr bool is_zero(IntVec v) { return v.x == 0 && v.y == 0; }

/// Quarter turn counterclockwise: (x, y) -> (-y, x).
constexpr IntVec rotate90(IntVec v) { return {-v.y, v.x}; }

struct IntVecHash {
  std::size_t operator()(IntVec v) const noexcept {
    auto h = static_cast<std::uint64_t>(v.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(v.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using VecSet = std::unordered_set<IntVec, IntVecHash>;

/// Closed integer box [x_min, x_max] x [y_min, y_max].
struct Box {
  std::int64_t x_min = 0, x_max = 0, y_min = 0, y_max = 0;

  constexpr std::int64_t size_x() const { return x_max - x_min + 1; }
  constexpr std::int64_t size_y() const { return y_max - y_min + 1; }
  constexpr IntVec corner() const { return {x_min, y_min}; }
  constexpr bool contains(IntVec v) const {
    return v.x >= x_min && v.x <= x_max && v.y >= y_min && v.y <= y_max;
  }

  friend constexpr bool operator==(const Box&, const Box&) = default;
};

/// Smallest box containing every point; the point list must be nonempty.
inline Box bounding_box(std::span<const IntVec> pts) {
  if (pts.empty()) throw Error(Errc::Degenerate, "bounding box of an empty set");
  Box b{pts[0].x, pts[0].x, pts[0].y, pts[0].y};
  for (IntVec p : pts) {
    b.x_min = std::min(b.x_min, p.x);
    b.x_max = std::max(b.x_max, p.x);
    b.y_min = std::min(b.y_min, p.y);
    b.y_max = std::max(b.y_max, p.y);
  }
  return b;
}

inline std::vector<IntVec> translated(std::span<const IntVec> pts, IntVec by) {
  std::vector<IntVec> out;
  out.reserve(pts.size());
  for (IntVec p : pts) out.push_back(p + by);
  return out;
}

inline bool all_distinct(std::span<const IntVec> pts) {
  VecSet seen;
  seen.reserve(pts.size() * 2);
  for (IntVec p : pts)
    if (!seen.insert(p).second) return false;
  return true;
}

}  // namespace leaper
