#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "leaper/error.hpp"
#include "leaper/figure.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Given a figure that realizes n*v, reports whether it realizes v. The
/// universal chord theorem says the answer is always yes, so `false` means
/// a bug in the figure code.
inline bool chord_check(const Figure& figure, IntVec v, std::int64_t n) {
  if (n < 1) throw Error(Errc::PreconditionUnmet, "n must be positive");
  if (!figure.realizes(n * v))
    throw Error(Errc::PreconditionUnmet, "figure does not realize n*v");
  return figure.realizes(v).has_value();
}

/// ABCD strictly convex with vertices in this cyclic order (either
/// orientation).
inline bool is_strictly_convex(IntVec a, IntVec b, IntVec c, IntVec d) {
  const std::array<IntVec, 4> q{a, b, c, d};
  int sign = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto t = cross(q[(i + 1) % 4] - q[i], q[(i + 2) % 4] - q[(i + 1) % 4]);
    if (t == 0) return false;
    const int s = t > 0 ? 1 : -1;
    if (sign != 0 && s != sign) return false;
    sign = s;
  }
  return true;
}

struct QuadSide {
  int index = 0;  ///< 0: A-B, 1: B-C, 2: C-D, 3: D-A
  IntVec side;
  Witness witness;
};

inline std::array<IntVec, 4> quad_sides(IntVec a, IntVec b, IntVec c, IntVec d) {
  return {a - b, b - c, c - d, d - a};
}

/// The diagonals of a convex quadrilateral force its sides: for a connected
/// figure realizing A - C and B - D, returns the first side it realizes.
/// An empty result would contradict the theorem.
inline std::optional<QuadSide> quad_check(const Figure& figure, IntVec a, IntVec b, IntVec c, IntVec d) {
  if (!is_strictly_convex(a, b, c, d)) throw Error(Errc::NotConvex, "ABCD is not strictly convex");
  if (!figure.realizes(a - c) || !figure.realizes(b - d))
    throw Error(Errc::PreconditionUnmet, "figure does not realize both diagonals");
  const auto sides = quad_sides(a, b, c, d);
  for (int i = 0; i < 4; ++i)
    if (auto w = figure.realizes(sides[static_cast<std::size_t>(i)])) return QuadSide{i, sides[static_cast<std::size_t>(i)], *w};
  return std::nullopt;
}

}  // namespace leaper
