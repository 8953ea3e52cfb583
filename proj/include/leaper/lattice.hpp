#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Full-rank lattice in Z^2, stored in row Hermite form
///   b1 = (a, b), b2 = (0, c)  with a > 0, c > 0, 0 <= b < c,
/// so two bases span the same lattice iff they compare equal.
class LatticeBasis {
 public:
  /// Lattice generated by two non-parallel vectors.
  LatticeBasis(IntVec g1, IntVec g2) : LatticeBasis(std::array<IntVec, 2>{g1, g2}) {}

  /// Lattice generated by an arbitrary list of vectors (must span the plane).
  explicit LatticeBasis(std::span<const IntVec> gens) {
    std::vector<IntVec> rows(gens.begin(), gens.end());
    // Euclid on the first coordinate until a single row keeps it nonzero.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].x != 0 && (pivot == rows.size() || std::llabs(rows[i].x) < std::llabs(rows[pivot].x)))
          pivot = i;
      if (pivot == rows.size()) throw Error(Errc::Degenerate, "generators do not span the plane");
      bool reduced = false;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == pivot || rows[i].x == 0) continue;
        rows[i] -= (rows[i].x / rows[pivot].x) * rows[pivot];
        reduced = true;
      }
      if (!reduced) {
        b1_ = rows[pivot].x < 0 ? -rows[pivot] : rows[pivot];
        rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot));
        break;
      }
    }
    std::int64_t c = 0;
    for (IntVec r : rows) c = std::gcd(c, std::llabs(r.y));
    if (c == 0) throw Error(Errc::Degenerate, "generators do not span the plane");
    b1_.y = ((b1_.y % c) + c) % c;
    b2_ = {0, c};
  }

  IntVec b1() const { return b1_; }
  IntVec b2() const { return b2_; }

  /// Fundamental area |det|.
  std::int64_t area() const { return b1_.x * b2_.y; }

  bool contains(IntVec v) const {
    if (v.x % b1_.x != 0) return false;
    const std::int64_t k = v.x / b1_.x;
    return (v.y - k * b1_.y) % b2_.y == 0;
  }

  bool contains(const LatticeBasis& sub) const { return contains(sub.b1_) && contains(sub.b2_); }

  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;

 private:
  LatticeBasis(std::array<IntVec, 2> g) : LatticeBasis(std::span<const IntVec>(g)) {}

  IntVec b1_, b2_;
};

/// Intersection of two lattices: solve u1*a1 + u2*a2 = v1*b1 + v2*b2 over the
/// integers (integer kernel of [a1 a2 -b1 -b2]) and map the kernel back.
inline LatticeBasis lattice_intersection(const LatticeBasis& a, const LatticeBasis& b) {
  using Row = std::array<std::int64_t, 6>;
  const std::array<IntVec, 4> cols{a.b1(), a.b2(), -b.b1(), -b.b2()};
  std::array<Row, 4> rows{};
  for (std::size_t i = 0; i < 4; ++i) {
    rows[i] = {cols[i].x, cols[i].y, 0, 0, 0, 0};
    rows[i][2 + i] = 1;
  }
  auto sub = [](Row& r, const Row& s, std::int64_t k) {
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= k * s[j];
  };
  for (std::size_t col = 0; col < 2; ++col) {
    for (;;) {
      std::size_t pivot = 4;
      for (std::size_t i = col; i < 4; ++i)
        if (rows[i][col] != 0 && (pivot == 4 || std::llabs(rows[i][col]) < std::llabs(rows[pivot][col])))
          pivot = i;
      if (pivot == 4) throw Error(Errc::Degenerate, "degenerate lattice");
      bool reduced = false;
      for (std::size_t i = col; i < 4; ++i) {
        if (i == pivot || rows[i][col] == 0) continue;
        sub(rows[i], rows[pivot], rows[i][col] / rows[pivot][col]);
        reduced = true;
      }
      if (!reduced) {
        std::swap(rows[col], rows[pivot]);
        break;
      }
    }
  }
  std::array<IntVec, 2> gens;
  for (std::size_t k = 0; k < 2; ++k) {
    const Row& r = rows[2 + k];
    gens[k] = r[2] * a.b1() + r[3] * a.b2();
  }
  return LatticeBasis(gens[0], gens[1]);
}

/// The lattice spanned by (h, h) and (-h, h).
inline LatticeBasis diagonal_lattice(std::int64_t h) { return LatticeBasis(IntVec{h, h}, IntVec{-h, h}); }

/// Index [outer : inner]; requires inner to be a sublattice of outer.
inline std::int64_t sublattice_index(const LatticeBasis& outer, const LatticeBasis& inner) {
  if (!outer.contains(inner)) throw Error(Errc::NotSublattice, "inner lattice is not contained in outer");
  return inner.area() / outer.area();
}

/// Checks that `a` splits into exactly h translates of the diagonal
/// lattice of parameter h.
inline bool partition_count_check(const LatticeBasis& a, std::int64_t h) {
  return sublattice_index(a, diagonal_lattice(h)) == h;
}

}  // namespace leaper
