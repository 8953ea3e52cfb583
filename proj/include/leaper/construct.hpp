#pragma once

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "leaper/embedding.hpp"
#include "leaper/error.hpp"
#include "leaper/leaper.hpp"
#include "leaper/path.hpp"

namespace leaper {

/// A path pair built by one of the explicit constructions. `p` and `q` are
/// the orientation actually used; `swapped` records whether they were
/// exchanged relative to the caller's leaper.
struct Construction {
  LeaperPath alpha;
  LeaperPath beta;
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t k = 0;
  bool swapped = false;
};

namespace detail {

inline void append_alternating(std::vector<IntVec>& seq, IntVec a, IntVec b, std::int64_t times) {
  for (std::int64_t i = 0; i < times; ++i) {
    seq.push_back(a);
    seq.push_back(b);
  }
}

inline void require_k(std::int64_t k) {
  if (k < 1) throw Error(Errc::PreconditionUnmet, "k must be positive, got " + std::to_string(k));
}

}  // namespace detail

/// Free leaper: 4kp leaps with p odd, q even; beta is alpha turned a quarter
/// turn. Embeds the (4kp+1)-grid into the (4kp+2pq+1)-board.
inline Construction free_construction(const Leaper& leaper, std::int64_t k) {
  if (leaper.cls != LeaperClass::Free)
    throw Error(Errc::WrongClass, std::string("free construction needs a free leaper, got ") +
                                      to_string(leaper.cls));
  detail::require_k(k);
  const bool swapped = leaper.p % 2 == 0;
  const std::int64_t p = swapped ? leaper.q : leaper.p;
  const std::int64_t q = swapped ? leaper.p : leaper.q;

  std::vector<IntVec> seq;
  seq.reserve(static_cast<std::size_t>(4 * k * p));
  for (std::int64_t block = 0; block < k; ++block) {
    detail::append_alternating(seq, {p, q}, {-p, q}, p - 1);
    seq.push_back({p, q});
    seq.push_back({p, q});
    detail::append_alternating(seq, {p, -q}, {-p, -q}, p - 1);
    seq.push_back({p, -q});
    seq.push_back({p, -q});
  }
  LeaperPath alpha = path_from_moves({0, 0}, seq, leaper);
  LeaperPath beta = rotate90(alpha);
  return {std::move(alpha), std::move(beta), 4 * k * p + 1, 4 * k * p + 2 * p * q + 1, p, q, k, swapped};
}

/// Half-free leaper: 2kp leaps with p >= 3. Embeds the (2kp+1)-grid into the
/// (4kp+pq+1)-board.
inline Construction halffree_construction(const Leaper& leaper, std::int64_t k) {
  if (leaper.cls != LeaperClass::HalfFree)
    throw Error(Errc::WrongClass, std::string("half-free construction needs a half-free leaper, got ") +
                                      to_string(leaper.cls));
  detail::require_k(k);
  const bool swapped = leaper.p < 3;
  const std::int64_t p = swapped ? leaper.q : leaper.p;
  const std::int64_t q = swapped ? leaper.p : leaper.q;

  std::vector<IntVec> seq;
  seq.reserve(static_cast<std::size_t>(2 * k * p));
  for (std::int64_t block = 0; block < k; ++block) {
    detail::append_alternating(seq, {p, q}, {-p, q}, (p - 3) / 2);
    seq.push_back({p, q});
    seq.push_back({p, q});
    detail::append_alternating(seq, {p, -q}, {-p, -q}, (p - 1) / 2);
    seq.push_back({p, -q});
    seq.push_back({p, q});
  }
  LeaperPath alpha = path_from_moves({0, 0}, seq, leaper);
  LeaperPath beta = rotate90(alpha);
  return {std::move(alpha), std::move(beta), 2 * k * p + 1, 4 * k * p + p * q + 1, p, q, k, swapped};
}

/// (x, y) -> (x - y, x + y): carries leaps of the derived free leaper onto
/// leaps of the half-free one.
constexpr IntVec phi(IntVec v) { return {v.x - v.y, v.x + v.y}; }

/// The free leaper (|p - q|/2, (p + q)/2) associated with a half-free one.
inline Leaper derived_free_leaper(const Leaper& leaper) {
  if (leaper.cls != LeaperClass::HalfFree)
    throw Error(Errc::WrongClass, std::string("needs a half-free leaper, got ") + to_string(leaper.cls));
  return classify(std::llabs(leaper.p - leaper.q) / 2, (leaper.p + leaper.q) / 2);
}

struct PhiEmbedding {
  GridEmbedding embedding;  ///< placed inside [1, n]^2
  Leaper derived;
  std::int64_t k = 0;
};

namespace detail {

inline GridEmbedding phi_image(const Leaper& target, const Leaper& derived, std::int64_t k) {
  const Construction c = free_construction(derived, k);
  const GridEmbedding base = product(c.alpha, c.beta);
  std::vector<IntVec> pts;
  pts.reserve(base.points().size());
  for (IntVec v : base.points()) pts.push_back(phi(v));
  return GridEmbedding(target, base.m(), std::move(pts)).placed_on_board();
}

}  // namespace detail

/// Grid embedding for a half-free leaper obtained by mapping the free
/// construction of the derived leaper through phi. Uses the largest k whose
/// image fits in an n x n box; the rest of the board stays empty.
inline PhiEmbedding phi_embed(const Leaper& leaper, std::int64_t n) {
  const Leaper derived = derived_free_leaper(leaper);
  auto fits = [&](const GridEmbedding& e) {
    const Box b = e.box();
    return b.size_x() <= n && b.size_y() <= n;
  };
  std::optional<GridEmbedding> best;
  std::int64_t best_k = 0;
  // Image width grows strictly with k, so stop at the first misfit.
  for (std::int64_t k = 1;; ++k) {
    GridEmbedding e = detail::phi_image(leaper, derived, k);
    if (!fits(e)) break;
    best = std::move(e);
    best_k = k;
  }
  if (!best)
    throw Error(Errc::BoardTooSmall, "no phi-embedding with k >= 1 fits a " + std::to_string(n) + " board");
  return {std::move(*best), derived, best_k};
}

}  // namespace leaper
