#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/lattice.hpp"
#include "leaper/path.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Representatives of the four leap direction classes, each class being
/// {v, -v}: (p, q), (q, p), (-p, q), (-q, p).
inline std::array<IntVec, 4> direction_classes(const Leaper& l) {
  return {IntVec{l.p, l.q}, IntVec{l.q, l.p}, IntVec{-l.p, l.q}, IntVec{-l.q, l.p}};
}

inline int direction_class(const Leaper& l, IntVec move) {
  const auto reps = direction_classes(l);
  for (int i = 0; i < 4; ++i)
    if (move == reps[static_cast<std::size_t>(i)] || move == -reps[static_cast<std::size_t>(i)]) return i;
  throw Error(Errc::NotALeap, "move is not a leap");
}

enum class SlopeOwner { Neither, Alpha, Beta };

/// Two classes for each path; the fundamental parallelograms of both sides
/// have the same area.
struct TwoTwoSplit {
  std::array<IntVec, 2> alpha;
  std::array<IntVec, 2> beta;
};

struct SlopeSplit {
  Leaper leaper;
  std::array<SlopeOwner, 4> owner{};
  int alpha_classes = 0;
  int beta_classes = 0;

  friend bool operator==(const SlopeSplit&, const SlopeSplit&) = default;

  bool single_slope() const { return alpha_classes <= 1 || beta_classes <= 1; }

  /// Hands unused classes, in index order, to whichever side has fewer than
  /// two. Only meaningful when neither path is single-slope.
  TwoTwoSplit complete() const {
    std::array<int, 4> side{};
    int na = 0, nb = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      side[i] = owner[i] == SlopeOwner::Alpha ? 1 : owner[i] == SlopeOwner::Beta ? 2 : 0;
      na += side[i] == 1;
      nb += side[i] == 2;
    }
    for (std::size_t i = 0; i < 4; ++i)
      if (side[i] == 0) {
        if (na < 2) side[i] = 1, ++na;
        else side[i] = 2, ++nb;
      }
    const auto reps = direction_classes(leaper);
    TwoTwoSplit s;
    std::size_t ia = 0, ib = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      if (side[i] == 1) s.alpha[ia++] = reps[i];
      else s.beta[ib++] = reps[i];
    }
    return s;
  }
};

/// Which path uses which direction classes. Condition (i) forbids a class
/// in both paths.
inline SlopeSplit slope_split(const LeaperPath& alpha, const LeaperPath& beta) {
  SlopeSplit split{alpha.leaper(), {}, 0, 0};
  std::array<bool, 4> in_alpha{}, in_beta{};
  for (IntVec mv : alpha.moves()) in_alpha[static_cast<std::size_t>(direction_class(alpha.leaper(), mv))] = true;
  for (IntVec mv : beta.moves()) in_beta[static_cast<std::size_t>(direction_class(alpha.leaper(), mv))] = true;
  for (std::size_t i = 0; i < 4; ++i) {
    if (in_alpha[i] && in_beta[i])
      throw Error(Errc::SharedSlope, "direction class " + std::to_string(i) + " used by both paths");
    split.owner[i] = in_alpha[i] ? SlopeOwner::Alpha : in_beta[i] ? SlopeOwner::Beta : SlopeOwner::Neither;
    split.alpha_classes += in_alpha[i];
    split.beta_classes += in_beta[i];
  }
  return split;
}

/// All three ways to split the four classes two against two.
inline std::array<TwoTwoSplit, 3> all_splits(const Leaper& l) {
  const auto r = direction_classes(l);
  return {TwoTwoSplit{{r[0], r[2]}, {r[1], r[3]}},
          TwoTwoSplit{{r[0], r[1]}, {r[2], r[3]}},
          TwoTwoSplit{{r[0], r[3]}, {r[1], r[2]}}};
}

struct AreaPair {
  std::int64_t s = 0;
  std::int64_t h = 0;
};

inline AreaPair fundamental_area(const TwoTwoSplit& split) {
  const auto sa = std::llabs(cross(split.alpha[0], split.alpha[1]));
  const auto sb = std::llabs(cross(split.beta[0], split.beta[1]));
  if (sa == 0 || sa != sb) throw Error(Errc::Degenerate, "split sides have different fundamental areas");
  return {sa, sa / 2};
}

struct Multiplicities {
  std::size_t diagonal_pos = 0;     ///< vertices on one slope +1 diagonal of step (h, h)
  std::size_t diagonal_neg = 0;     ///< same for (-h, h)
  std::size_t zigzag_vertical = 0;  ///< vertices on one vertical zigzag
  std::size_t zigzag_horizontal = 0;

  friend bool operator==(const Multiplicities&, const Multiplicities&) = default;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - b * floor_div(a, b); }

template <class Key>
std::size_t largest_group(const std::vector<IntVec>& pts, Key key) {
  std::map<decltype(key(IntVec{})), std::size_t> count;
  std::size_t best = 0;
  for (IntVec v : pts) best = std::max(best, ++count[key(v)]);
  return best;
}

/// Largest number of values (with multiplicity) inside a window {c, c + 1},
/// grouped by coset.
template <class Coset, class Coord>
std::size_t largest_window(const std::vector<IntVec>& pts, Coset coset, Coord coord) {
  std::map<std::pair<decltype(coset(IntVec{})), std::int64_t>, std::size_t> count;
  for (IntVec v : pts) ++count[{coset(v), coord(v)}];
  std::size_t best = 0;
  for (const auto& [key, n] : count) {
    auto it = count.find({key.first, key.second + 1});
    best = std::max(best, n + (it == count.end() ? 0 : it->second));
  }
  return best;
}

}  // namespace detail

/// Vertex counts along the diagonals and zigzags of the lattice spanned by
/// (h, h) and (-h, h).
inline Multiplicities multiplicity_diagnostics(const LeaperPath& path, std::int64_t h) {
  if (h < 1) throw Error(Errc::Degenerate, "h must be positive");
  using detail::floor_div;
  using detail::floor_mod;
  const auto& v = path.vertices();
  Multiplicities out;
  out.diagonal_pos = detail::largest_group(v, [h](IntVec a) { return std::pair{a.x - a.y, floor_mod(a.x, h)}; });
  out.diagonal_neg = detail::largest_group(v, [h](IntVec a) { return std::pair{a.x + a.y, floor_mod(a.x, h)}; });
  auto coset = [h](IntVec a) {
    return std::tuple{floor_mod(a.x, h), floor_mod(a.y, h), floor_mod(floor_div(a.x, h) + floor_div(a.y, h), 2)};
  };
  out.zigzag_vertical = detail::largest_window(v, coset, [h](IntVec a) { return floor_div(a.x, h); });
  out.zigzag_horizontal = detail::largest_window(v, coset, [h](IntVec a) { return floor_div(a.y, h); });
  return out;
}

enum class HalfFreeCase { SingleSlope, Case1, Case2 };

inline const char* to_string(HalfFreeCase c) {
  switch (c) {
    case HalfFreeCase::SingleSlope: return "SingleSlope";
    case HalfFreeCase::Case1: return "Case1";
    case HalfFreeCase::Case2: return "Case2";
  }
  return "?";
}

struct HalfFreeDiagnostic {
  SlopeSplit split;
  HalfFreeCase kase = HalfFreeCase::SingleSlope;
  std::int64_t s = 0;  ///< zero for single-slope pairs
  std::int64_t h = 0;
  bool realized_hI_alpha = false, realized_hII_alpha = false;
  bool realized_hI_beta = false, realized_hII_beta = false;
  Multiplicities alpha_mult, beta_mult;
  std::int64_t m = 0;
  std::int64_t n = 0;
  double slack = 0.0;  ///< m - n/2

  friend bool operator==(const HalfFreeDiagnostic&, const HalfFreeDiagnostic&) = default;
};

/// Classifies a half-free path pair by how it shares out the slopes and the
/// vectors (h, h), (-h, h), and measures it against n/2.
inline HalfFreeDiagnostic halffree_bound_report(const LeaperPath& alpha, const LeaperPath& beta, std::int64_t n) {
  if (alpha.leaper().cls != LeaperClass::HalfFree)
    throw Error(Errc::WrongClass, "half-free diagnostics need a half-free leaper");
  HalfFreeDiagnostic d;
  d.split = slope_split(alpha, beta);
  d.m = static_cast<std::int64_t>(alpha.size());
  d.n = n;
  d.slack = static_cast<double>(d.m) - static_cast<double>(n) / 2.0;
  if (d.split.single_slope()) {
    d.kase = HalfFreeCase::SingleSlope;
    return d;
  }
  const AreaPair area = fundamental_area(d.split.complete());
  d.s = area.s;
  d.h = area.h;
  const IntVec hI{d.h, d.h}, hII{-d.h, d.h};
  const DiffSet da = alpha.differences(), db = beta.differences();
  d.realized_hI_alpha = da.contains(hI);
  d.realized_hII_alpha = da.contains(hII);
  d.realized_hI_beta = db.contains(hI);
  d.realized_hII_beta = db.contains(hII);
  const bool alpha_misses_both = !d.realized_hI_alpha && !d.realized_hII_alpha;
  const bool beta_misses_both = !d.realized_hI_beta && !d.realized_hII_beta;
  d.kase = (alpha_misses_both || beta_misses_both) ? HalfFreeCase::Case2 : HalfFreeCase::Case1;
  d.alpha_mult = multiplicity_diagnostics(alpha, d.h);
  d.beta_mult = multiplicity_diagnostics(beta, d.h);
  return d;
}

}  // namespace leaper
