#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "leaper/chord.hpp"
#include "leaper/error.hpp"
#include "leaper/figure.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Two non-parallel plane vectors; coefficient vector (a, b) stands for
/// a*u + b*v.
class Basis {
 public:
  Basis(IntVec u, IntVec v) : u_(u), v_(v) {
    if (cross(u, v) == 0) throw Error(Errc::Degenerate, "basis vectors are parallel");
  }
  IntVec u() const { return u_; }
  IntVec v() const { return v_; }
  IntVec to_plane(IntVec coeff) const { return coeff.x * u_ + coeff.y * v_; }

  friend bool operator==(const Basis&, const Basis&) = default;

 private:
  IntVec u_, v_;
};

/// Coefficient vectors (x, y) and (-z, t) with x, y, z, t > 0.
struct GoodPair {
  IntVec first;
  IntVec second;

  std::int64_t x() const { return first.x; }
  std::int64_t y() const { return first.y; }
  std::int64_t z() const { return -second.x; }
  std::int64_t t() const { return second.y; }
  std::int64_t weight() const { return x() + y() + z() + t(); }

  bool valid() const { return x() > 0 && y() > 0 && z() > 0 && t() > 0; }

  friend bool operator==(const GoodPair&, const GoodPair&) = default;
};

/// Flips signs so both second coordinates are positive and orders the pair
/// so the first coordinates read (+, -). Requires abcd < 0.
inline GoodPair normalize_fork_input(IntVec u1, IntVec u2) {
  if (u1.x * u1.y * u2.x * u2.y >= 0)
    throw Error(Errc::NotFork, "coefficients need abcd < 0");
  if (u1.y < 0) u1 = -u1;
  if (u2.y < 0) u2 = -u2;
  if (u1.x < 0) std::swap(u1, u2);
  return {u1, u2};
}

/// Side vectors A-B, B-C, C-D, D-A of the quadrilateral
/// A = (-w/2, 0), B = (w/2, 0), C = (x - w/2, y), D = (w/2 - z, t), w = min(x, z).
/// The half-integer corners cancel, so the sides are integral.
inline std::array<IntVec, 4> fork_quadrilateral(const GoodPair& gp) {
  const auto x = gp.x(), y = gp.y(), z = gp.z(), t = gp.t();
  const auto w = std::min(x, z);
  return {IntVec{-w, 0}, IntVec{w - x, -y}, IntVec{x + z - w, y - t}, IntVec{w - z, t}};
}

struct ForkStep {
  GoodPair pair;
  std::array<IntVec, 4> sides;          ///< coefficient vectors
  std::array<bool, 4> realized{};       ///< per side, tested in the plane
  int chosen = 0;                       ///< index into sides
  std::optional<GoodPair> next;         ///< absent on the terminating step
  bool regular = true;

  friend bool operator==(const ForkStep&, const ForkStep&) = default;
};

struct ForkConclusion {
  IntVec coefficient;  ///< (1, 0) for u or (0, 1) for v
  IntVec target;       ///< the plane vector u or v
  Witness witness;

  friend bool operator==(const ForkConclusion&, const ForkConclusion&) = default;
};

struct ForkCertificate {
  std::vector<ForkStep> steps;
  ForkConclusion conclusion;

  friend bool operator==(const ForkCertificate&, const ForkCertificate&) = default;

  std::size_t irregular_count() const {
    return static_cast<std::size_t>(std::count_if(steps.begin(), steps.end(), [](const ForkStep& s) { return !s.regular; }));
  }
};

namespace detail {

inline bool axis_aligned(IntVec c) { return c.x == 0 || c.y == 0; }

inline IntVec positive_second(IntVec c) { return c.y < 0 ? -c : c; }

/// x >= x', y >= y', z >= z', t >= t' with exactly one strict inequality.
inline bool is_regular(const GoodPair& before, const GoodPair& after) {
  const std::array<std::int64_t, 4> b{before.x(), before.y(), before.z(), before.t()};
  const std::array<std::int64_t, 4> a{after.x(), after.y(), after.z(), after.t()};
  int strict = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i] > b[i]) return false;
    if (a[i] < b[i]) ++strict;
  }
  return strict == 1;
}

}  // namespace detail

/// Runs the good-pair reduction on a figure realizing a*u + b*v and
/// c*u + d*v (abcd < 0) until a realized side is parallel to u or v, then
/// concludes via the chord theorem. Every realization test is made on plane
/// vectors.
///
/// Side choice: an axis-aligned realized side if one exists, otherwise the
/// lexicographically smallest realized side with positive second coordinate.
/// The replaced vector is the one whose slope has the same sign as the side.
inline ForkCertificate fork_trace(const Figure& figure, const Basis& basis, IntVec u1, IntVec u2) {
  if (!figure.realizes(basis.to_plane(u1)) || !figure.realizes(basis.to_plane(u2)))
    throw Error(Errc::PreconditionUnmet, "figure does not realize both input vectors");
  GoodPair gp = normalize_fork_input(u1, u2);
  const std::int64_t limit = 4 * gp.weight();

  ForkCertificate cert;
  for (std::int64_t iter = 0;; ++iter) {
    if (iter >= limit) throw Error(Errc::IterationLimit, "fork procedure exceeded " + std::to_string(limit) + " steps");
    ForkStep step{gp, fork_quadrilateral(gp), {}, -1, std::nullopt, true};
    for (std::size_t i = 0; i < 4; ++i) step.realized[i] = figure.realizes(basis.to_plane(step.sides[i])).has_value();

    for (int i = 0; i < 4; ++i)
      if (step.realized[static_cast<std::size_t>(i)] && detail::axis_aligned(step.sides[static_cast<std::size_t>(i)])) {
        step.chosen = i;
        break;
      }

    if (step.chosen >= 0) {
      const IntVec side = step.sides[static_cast<std::size_t>(step.chosen)];
      const IntVec unit = side.y == 0 ? IntVec{1, 0} : IntVec{0, 1};
      const std::int64_t multiple = std::llabs(side.x + side.y);
      const IntVec target = basis.to_plane(unit);
      if (!chord_check(figure, target, multiple))
        throw Error(Errc::PreconditionUnmet, "chord theorem failed; figure code is inconsistent");
      cert.conclusion = {unit, target, *figure.realizes(target)};
      cert.steps.push_back(step);
      return cert;
    }

    std::optional<IntVec> best;
    for (std::size_t i = 0; i < 4; ++i) {
      if (!step.realized[i]) continue;
      const IntVec s = detail::positive_second(step.sides[i]);
      if (!best || s < *best) {
        best = s;
        step.chosen = static_cast<int>(i);
      }
    }
    if (!best)
      throw Error(Errc::PreconditionUnmet, "no side of the quadrilateral is realized; figure code is inconsistent");

    GoodPair next = gp;
    if (best->x > 0)
      next.first = *best;
    else
      next.second = *best;
    step.next = next;
    step.regular = detail::is_regular(gp, next);
    cert.steps.push_back(step);
    gp = next;
  }
}

}  // namespace leaper
