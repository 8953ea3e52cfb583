#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/path.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// An m x m array of plane points; entry (i, j) is the image of grid vertex
/// (i, j), zero-based, stored row-major.
class GridEmbedding {
 public:
  GridEmbedding(Leaper leaper, std::size_t m, std::vector<IntVec> points)
      : leaper_(leaper), m_(m), points_(std::move(points)) {
    if (m_ == 0 || points_.size() != m_ * m_)
      throw Error(Errc::LengthMismatch, "expected " + std::to_string(m_ * m_) + " points");
  }

  const Leaper& leaper() const { return leaper_; }
  std::size_t m() const { return m_; }
  const std::vector<IntVec>& points() const { return points_; }
  IntVec at(std::size_t i, std::size_t j) const { return points_[i * m_ + j]; }
  Box box() const { return bounding_box(points_); }

  /// Same embedding moved so that its bounding box starts at (1, 1).
  GridEmbedding placed_on_board() const {
    const IntVec shift = IntVec{1, 1} - box().corner();
    return {leaper_, m_, leaper::translated(points_, shift)};
  }

  /// Image of every grid edge, horizontal ones first.
  std::vector<std::pair<IntVec, IntVec>> edges() const {
    std::vector<std::pair<IntVec, IntVec>> out;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j + 1 < m_; ++j) out.emplace_back(at(i, j), at(i, j + 1));
    for (std::size_t i = 0; i + 1 < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j) out.emplace_back(at(i, j), at(i + 1, j));
    return out;
  }

  friend bool operator==(const GridEmbedding& a, const GridEmbedding& b) {
    return a.leaper_.p == b.leaper_.p && a.leaper_.q == b.leaper_.q && a.m_ == b.m_ &&
           a.points_ == b.points_;
  }

 private:
  Leaper leaper_;
  std::size_t m_;
  std::vector<IntVec> points_;
};

/// Outcome of the two-path embedding criterion: (i) the difference sets are
/// disjoint, (ii) a_X + b_X <= n + 1 and a_Y + b_Y <= n + 1.
struct VerificationReport {
  bool disjoint = false;
  bool box_ok = false;
  std::optional<IntVec> witness_overlap;
  std::int64_t a_x = 0, a_y = 0, b_x = 0, b_y = 0;
  std::int64_t min_n = 0;

  bool valid() const { return disjoint && box_ok; }
};

inline VerificationReport check_pair(const LeaperPath& alpha, const LeaperPath& beta, std::int64_t n) {
  if (alpha.size() != beta.size())
    throw Error(Errc::LengthMismatch, std::to_string(alpha.size()) + " vs " + std::to_string(beta.size()));
  VerificationReport r;
  r.witness_overlap = alpha.differences().common_element(beta.differences());
  r.disjoint = !r.witness_overlap.has_value();
  const Box a = alpha.box(), b = beta.box();
  r.a_x = a.size_x();
  r.a_y = a.size_y();
  r.b_x = b.size_x();
  r.b_y = b.size_y();
  r.min_n = std::max(r.a_x + r.b_x, r.a_y + r.b_y) - 1;
  r.box_ok = r.min_n <= n;
  return r;
}

/// P(i, j) = A_i + B_j.
inline GridEmbedding product(const LeaperPath& alpha, const LeaperPath& beta) {
  if (alpha.size() != beta.size())
    throw Error(Errc::LengthMismatch, std::to_string(alpha.size()) + " vs " + std::to_string(beta.size()));
  if (alpha.leaper().p != beta.leaper().p || alpha.leaper().q != beta.leaper().q)
    throw Error(Errc::WrongClass, "paths belong to different leapers");
  const std::size_t m = alpha.size();
  std::vector<IntVec> pts;
  pts.reserve(m * m);
  for (IntVec a : alpha.vertices())
    for (IntVec b : beta.vertices()) pts.push_back(a + b);
  if (!all_distinct(pts))
    throw Error(Errc::OverlapError, "difference sets of the two paths intersect");
  return {alpha.leaper(), m, std::move(pts)};
}

/// Inverse of product(), normalised so that A_1 = (0, 0) and B_j = P(1, j).
inline std::pair<LeaperPath, LeaperPath> factor(const GridEmbedding& e) {
  const std::size_t m = e.m();
  for (std::size_t i = 0; i + 1 < m; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j)
      if (e.at(i, j) + e.at(i + 1, j + 1) != e.at(i, j + 1) + e.at(i + 1, j))
        throw Error(Errc::RhombusViolation,
                    "cell (" + std::to_string(i) + "," + std::to_string(j) + ") is not a rhombus");
  std::vector<IntVec> a, b;
  for (std::size_t i = 0; i < m; ++i) a.push_back(e.at(i, 0) - e.at(0, 0));
  for (std::size_t j = 0; j < m; ++j) b.push_back(e.at(0, j));
  return {LeaperPath(e.leaper(), std::move(a)), LeaperPath(e.leaper(), std::move(b))};
}

/// Direct check of an embedding into the n x n leaper graph: distinct
/// points, bounding box within n x n, every grid edge a leap. Does not go
/// through factor().
inline bool verify_embedding(const GridEmbedding& e, const Leaper& leaper, std::int64_t n) {
  if (!all_distinct(e.points())) return false;
  const Box b = e.box();
  if (b.size_x() > n || b.size_y() > n) return false;
  for (auto [u, v] : e.edges())
    if (!leaper.is_leap(v - u)) return false;
  return true;
}

}  // namespace leaper
