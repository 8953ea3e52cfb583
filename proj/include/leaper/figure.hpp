#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/path.hpp"
#include "leaper/vec.hpp"

namespace leaper {

inline constexpr std::array<IntVec, 4> kUnitSteps{IntVec{1, 0}, IntVec{-1, 0}, IntVec{0, 1}, IntVec{0, -1}};

/// True iff the cells form a single component under unit horizontal and
/// vertical steps. The empty set counts as disconnected.
inline bool is_connected(std::span<const IntVec> cells) {
  if (cells.empty()) return false;
  VecSet all(cells.begin(), cells.end());
  VecSet seen{cells[0]};
  std::vector<IntVec> stack{cells[0]};
  while (!stack.empty()) {
    const IntVec c = stack.back();
    stack.pop_back();
    for (IntVec s : kUnitSteps) {
      const IntVec nb = c + s;
      if (all.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
  }
  return seen.size() == all.size();
}

struct Witness {
  IntVec a;
  IntVec b;  ///< b - a is the realized vector
  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Finite connected vertex set of the infinite grid graph. Edges are implied
/// between cells at unit distance.
class Figure {
 public:
  explicit Figure(std::vector<IntVec> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    if (!is_connected(cells_)) throw Error(Errc::PreconditionUnmet, "figure is empty or disconnected");
    lookup_.insert(cells_.begin(), cells_.end());
  }

  const std::vector<IntVec>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool contains(IntVec c) const { return lookup_.count(c) != 0; }
  Box box() const { return bounding_box(cells_); }

  /// First witness (in cell order) of two cells differing by u.
  std::optional<Witness> realizes(IntVec u) const {
    for (IntVec a : cells_)
      if (contains(a + u)) return Witness{a, a + u};
    return std::nullopt;
  }

  DiffSet realized_set() const { return DiffSet::of(cells_); }

  friend bool operator==(const Figure& a, const Figure& b) { return a.cells_ == b.cells_; }

 private:
  std::vector<IntVec> cells_;
  VecSet lookup_;
};

inline std::optional<Witness> realizes(const Figure& f, IntVec u) { return f.realizes(u); }
inline DiffSet realized_set(const Figure& f) { return f.realized_set(); }

/// Uniform draw from [0, bound) that does not depend on the standard
/// library's distribution implementation.
inline std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return r % bound;
}

inline std::int64_t draw_between(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(bounded_draw(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

/// Grows a connected figure from the centre of `bounds` by repeatedly adding
/// a uniformly chosen frontier cell. Capped at the box area.
inline Figure random_figure(std::uint64_t seed, std::size_t target_size, const Box& bounds) {
  if (target_size < 1) throw Error(Errc::PreconditionUnmet, "target size must be positive");
  std::mt19937_64 rng(seed);
  const IntVec start{bounds.x_min + (bounds.size_x() - 1) / 2, bounds.y_min + (bounds.size_y() - 1) / 2};
  std::vector<IntVec> cells{start};
  VecSet in{start};
  std::vector<IntVec> frontier;
  VecSet in_frontier;
  auto push_frontier = [&](IntVec c) {
    for (IntVec s : kUnitSteps) {
      const IntVec nb = c + s;
      if (bounds.contains(nb) && !in.count(nb) && in_frontier.insert(nb).second) frontier.push_back(nb);
    }
  };
  push_frontier(start);
  while (cells.size() < target_size && !frontier.empty()) {
    const auto i = bounded_draw(rng, frontier.size());
    const IntVec c = frontier[i];
    frontier[i] = frontier.back();
    frontier.pop_back();
    in_frontier.erase(c);
    cells.push_back(c);
    in.insert(c);
    push_frontier(c);
  }
  return Figure(std::move(cells));
}

/// Calls `visit` once for every fixed polyomino with at most `max_cells`
/// cells (Redelmeier's enumeration). Shapes are given up to translation.
inline void for_each_polyomino(std::size_t max_cells,
                               const std::function<void(std::span<const IntVec>)>& visit) {
  if (max_cells == 0) return;
  const auto n = static_cast<std::int64_t>(max_cells);
  // Cells with y > 0, or y == 0 and x >= 0, relative to the root cell.
  const std::int64_t width = 2 * n + 1;
  std::vector<char> reached(static_cast<std::size_t>(width * (n + 1)), 0);
  auto idx = [&](IntVec c) { return static_cast<std::size_t>(c.y * width + (c.x + n)); };
  auto admissible = [&](IntVec c) { return c.y > 0 || (c.y == 0 && c.x >= 0); };

  std::vector<IntVec> poly;
  std::function<void(std::vector<IntVec>)> grow = [&](std::vector<IntVec> untried) {
    while (!untried.empty()) {
      const IntVec c = untried.back();
      untried.pop_back();
      poly.push_back(c);
      visit(poly);
      if (poly.size() < max_cells) {
        std::vector<IntVec> next = untried;
        std::vector<IntVec> added;
        for (IntVec s : kUnitSteps) {
          const IntVec nb = c + s;
          if (admissible(nb) && nb.y <= n && std::llabs(nb.x) <= n && !reached[idx(nb)]) {
            reached[idx(nb)] = 1;
            next.push_back(nb);
            added.push_back(nb);
          }
        }
        grow(std::move(next));
        for (IntVec a : added) reached[idx(a)] = 0;
      }
      poly.pop_back();
    }
  };
  reached[idx({0, 0})] = 1;
  grow({IntVec{0, 0}});
}

}  // namespace leaper
