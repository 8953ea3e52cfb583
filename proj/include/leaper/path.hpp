#pragma once

#include <optional>
#include <sstream>
#include <span>
#include <string>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/leaper.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Nonzero pairwise differences of a point set; closed under negation.
class DiffSet {
 public:
  DiffSet() = default;

  static DiffSet of(std::span<const IntVec> pts) {
    DiffSet d;
    d.set_.reserve(pts.size() * pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = 0; j < pts.size(); ++j)
        if (i != j && pts[i] != pts[j]) d.set_.insert(pts[i] - pts[j]);
    return d;
  }

  bool contains(IntVec v) const { return set_.count(v) != 0; }
  std::size_t size() const { return set_.size(); }
  bool empty() const { return set_.empty(); }
  const VecSet& values() const { return set_; }

  /// Lexicographically smallest common element, if any.
  std::optional<IntVec> common_element(const DiffSet& other) const {
    const DiffSet& small = size() <= other.size() ? *this : other;
    const DiffSet& large = size() <= other.size() ? other : *this;
    std::optional<IntVec> best;
    for (IntVec v : small.set_)
      if (large.contains(v) && (!best || v < *best)) best = v;
    return best;
  }

  friend bool operator==(const DiffSet& a, const DiffSet& b) { return a.set_ == b.set_; }

 private:
  VecSet set_;
};

inline DiffSet difference_set(std::span<const IntVec> vertices) { return DiffSet::of(vertices); }

/// A self-avoiding walk whose steps are all leaps of one leaper.
class LeaperPath {
 public:
  LeaperPath(Leaper leaper, std::vector<IntVec> vertices)
      : leaper_(leaper), vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw Error(Errc::Degenerate, "path needs at least one vertex");
    for (std::size_t i = 1; i < vertices_.size(); ++i)
      if (!leaper_.is_leap(vertices_[i] - vertices_[i - 1]))
        throw Error(Errc::NotALeap, "step " + std::to_string(i) + " is not a leap");
    if (!all_distinct(vertices_)) throw Error(Errc::SelfIntersection, "repeated vertex");
  }

  const Leaper& leaper() const { return leaper_; }
  const std::vector<IntVec>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  IntVec operator[](std::size_t i) const { return vertices_[i]; }

  std::vector<IntVec> moves() const {
    std::vector<IntVec> out;
    for (std::size_t i = 1; i < vertices_.size(); ++i) out.push_back(vertices_[i] - vertices_[i - 1]);
    return out;
  }

  Box box() const { return bounding_box(vertices_); }
  DiffSet differences() const { return DiffSet::of(vertices_); }

  LeaperPath translated(IntVec by) const {
    return LeaperPath(leaper_, leaper::translated(vertices_, by));
  }

  friend bool operator==(const LeaperPath& a, const LeaperPath& b) {
    return a.leaper_.p == b.leaper_.p && a.leaper_.q == b.leaper_.q && a.vertices_ == b.vertices_;
  }

 private:
  Leaper leaper_;
  std::vector<IntVec> vertices_;
};

/// Partial sums start, start + m1, start + m1 + m2, ...
inline LeaperPath path_from_moves(IntVec start, std::span<const IntVec> moves, const Leaper& leaper) {
  std::vector<IntVec> v{start};
  v.reserve(moves.size() + 1);
  for (IntVec m : moves) {
    if (!leaper.is_leap(m)) {
      std::ostringstream os;
      os << m << " is not a (" << leaper.p << "," << leaper.q << ") leap";
      throw Error(Errc::NotALeap, os.str());
    }
    v.push_back(v.back() + m);
  }
  return LeaperPath(leaper, std::move(v));
}

inline LeaperPath rotate90(const LeaperPath& path) {
  std::vector<IntVec> v;
  v.reserve(path.size());
  for (IntVec p : path.vertices()) v.push_back(rotate90(p));
  return LeaperPath(path.leaper(), std::move(v));
}

}  // namespace leaper
