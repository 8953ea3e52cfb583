#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "leaper/error.hpp"
#include "leaper/vec.hpp"

namespace leaper {

enum class LeaperClass { NonSkew, Reducible, Free, HalfFree };

inline const char* to_string(LeaperClass c) {
  switch (c) {
    case LeaperClass::NonSkew: return "NonSkew";
    case LeaperClass::Reducible: return "Reducible";
    case LeaperClass::Free: return "Free";
    case LeaperClass::HalfFree: return "HalfFree";
  }
  return "?";
}

/// A (p, q)-leaper together with its classification. `divisor` is gcd(p, q)
/// and is meaningful for the Reducible class.
struct Leaper {
  std::int64_t p = 1;
  std::int64_t q = 2;
  LeaperClass cls = LeaperClass::Free;
  std::int64_t divisor = 1;

  bool is_skew() const { return cls != LeaperClass::NonSkew; }

  /// True iff {|d.x|, |d.y|} = {p, q}.
  bool is_leap(IntVec d) const {
    const auto ax = std::llabs(d.x), ay = std::llabs(d.y);
    return (ax == p && ay == q) || (ax == q && ay == p);
  }

  /// The eight leap vectors (four when p = q or one of them is zero),
  /// sorted lexicographically.
  std::vector<IntVec> moves() const {
    std::vector<IntVec> out;
    for (auto [a, b] : {std::pair{p, q}, std::pair{q, p}})
      for (int sx : {-1, 1})
        for (int sy : {-1, 1}) out.push_back({sx * a, sy * b});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  friend bool operator==(const Leaper& a, const Leaper& b) {
    return a.p == b.p && a.q == b.q && a.cls == b.cls && a.divisor == b.divisor;
  }
};

inline Leaper classify(std::int64_t p, std::int64_t q) {
  p = std::llabs(p);
  q = std::llabs(q);
  Leaper l{p, q, LeaperClass::NonSkew, std::gcd(p, q)};
  if (p == 0 || q == 0 || p == q) return l;
  if (l.divisor >= 2)
    l.cls = LeaperClass::Reducible;
  else if ((p + q) % 2 == 1)
    l.cls = LeaperClass::Free;
  else
    l.cls = LeaperClass::HalfFree;
  return l;
}

struct Reduction {
  std::int64_t p, q, n;
  friend bool operator==(const Reduction&, const Reduction&) = default;
};

/// Divides out d = gcd(p, q): the (p, q) problem of order n becomes the
/// (p/d, q/d) problem of order ceil(n/d).
inline Reduction reduce(std::int64_t p, std::int64_t q, std::int64_t n) {
  const Leaper l = classify(p, q);
  if (l.cls != LeaperClass::Reducible)
    throw Error(Errc::NotReducible,
                "(" + std::to_string(p) + "," + std::to_string(q) + ") is " + to_string(l.cls));
  const auto d = l.divisor;
  return {l.p / d, l.q / d, (n + d - 1) / d};
}

}  // namespace leaper
