#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "leaper/chord.hpp"
#include "leaper/error.hpp"
#include "leaper/figure.hpp"
#include "leaper/fork.hpp"

namespace leaper {

/// Tally of a property run over the forced-chord theorems. `cases` counts
/// checked instances; every failure is a bug in this code, never in the
/// theorems.
struct SuiteReport {
  std::uint64_t cases = 0;
  std::uint64_t counterexamples = 0;
  std::optional<std::vector<IntVec>> first_counterexample;
  std::string first_message;

  void fail(const Figure& f, std::string msg) {
    if (counterexamples++ == 0) {
      first_counterexample = f.cells();
      first_message = std::move(msg);
    }
  }
};

namespace detail {

inline std::vector<IntVec> sorted_differences(const Figure& f) {
  const DiffSet diffs = f.realized_set();
  std::vector<IntVec> v(diffs.values().begin(), diffs.values().end());
  std::sort(v.begin(), v.end());
  return v;
}

inline Figure random_case_figure(std::mt19937_64& rng, std::size_t max_size) {
  const auto size = static_cast<std::size_t>(draw_between(rng, 2, static_cast<std::int64_t>(max_size)));
  const auto side = draw_between(rng, 3, 20);
  return random_figure(rng(), size, Box{0, side - 1, 0, side - 1});
}

inline void chord_check_figure(const Figure& f, std::int64_t max_n, SuiteReport& report) {
  for (IntVec w : sorted_differences(f)) {
    for (std::int64_t n = 2; n <= max_n; ++n) {
      if (w.x % n != 0 || w.y % n != 0) continue;
      const IntVec v{w.x / n, w.y / n};
      ++report.cases;
      if (!chord_check(f, v, n)) {
        std::ostringstream os;
        os << "realizes " << w << " but not " << v;
        report.fail(f, os.str());
      }
    }
  }
}

}  // namespace detail

/// Every fixed polyomino up to `max_cells` cells, every realized vector
/// n*v with 2 <= n <= max_n: the figure must realize v.
inline SuiteReport chord_suite_exhaustive(std::size_t max_cells, std::int64_t max_n) {
  SuiteReport report;
  for_each_polyomino(max_cells, [&](std::span<const IntVec> cells) {
    const Figure f(std::vector<IntVec>(cells.begin(), cells.end()));
    detail::chord_check_figure(f, max_n, report);
  });
  return report;
}

inline SuiteReport chord_suite_random(std::uint64_t seed, std::size_t figures, std::size_t max_size,
                                      std::int64_t max_n) {
  std::mt19937_64 rng(seed);
  SuiteReport report;
  for (std::size_t i = 0; i < figures; ++i)
    detail::chord_check_figure(detail::random_case_figure(rng, max_size), max_n, report);
  return report;
}

/// Seeded random (figure, convex quadrilateral) pairs whose diagonals the
/// figure realizes; a realized side must always exist.
inline SuiteReport quad_suite_random(std::uint64_t seed, std::size_t count, std::size_t max_size = 60) {
  std::mt19937_64 rng(seed);
  SuiteReport report;
  while (report.cases < count) {
    const Figure f = detail::random_case_figure(rng, max_size);
    const auto diffs = detail::sorted_differences(f);
    if (diffs.size() < 2) continue;
    const IntVec d1 = diffs[bounded_draw(rng, diffs.size())];
    const IntVec d2 = diffs[bounded_draw(rng, diffs.size())];
    if (cross(d1, d2) == 0) continue;
    const std::int64_t r = std::max({std::llabs(d1.x), std::llabs(d1.y), std::llabs(d2.x), std::llabs(d2.y)}) + 1;
    const IntVec shift{draw_between(rng, -5, 5), draw_between(rng, -5, 5)};
    const IntVec a = shift, c = a - d1;
    std::optional<IntVec> b;
    for (int tries = 0; tries < 200 && !b; ++tries) {
      const IntVec cand = shift + IntVec{draw_between(rng, -r, r), draw_between(rng, -r, r)};
      if (is_strictly_convex(a, cand, c, cand - d2)) b = cand;
    }
    if (!b) continue;
    ++report.cases;
    if (!quad_check(f, a, *b, c, *b - d2)) {
      std::ostringstream os;
      os << "quadrilateral " << a << *b << c << (*b - d2) << " has no realized side";
      report.fail(f, os.str());
    }
  }
  return report;
}

/// Structural checks on one certificate: conclusion witness, at most one
/// irregular step, equal first coordinates from the irregular step on, and
/// strictly decreasing weight on regular steps. Returns an empty string when
/// the certificate is sound.
inline std::string audit_fork_certificate(const Figure& f, const Basis& basis, const ForkCertificate& cert) {
  const auto& w = cert.conclusion.witness;
  if (!f.contains(w.a) || !f.contains(w.b) || w.b - w.a != cert.conclusion.target)
    return "conclusion witness does not realize the target";
  if (cert.conclusion.target != basis.u() && cert.conclusion.target != basis.v())
    return "conclusion is neither u nor v";
  if (!f.realizes(cert.conclusion.target)) return "target not realized";
  if (cert.irregular_count() > 1) return "more than one irregular step";
  bool after_irregular = false;
  for (const ForkStep& s : cert.steps) {
    if (after_irregular && s.pair.x() != s.pair.z()) return "first coordinates diverged after irregular step";
    if (!s.realized[static_cast<std::size_t>(s.chosen)]) return "chosen side not realized";
    if (!f.realizes(basis.to_plane(s.sides[static_cast<std::size_t>(s.chosen)]))) return "chosen side not realized";
    if (!s.next) continue;
    if (!s.next->valid()) return "replacement pair is not good";
    if (s.regular) {
      if (s.next->weight() >= s.pair.weight()) return "regular step did not decrease weight";
    } else {
      if (s.next->x() != s.next->z()) return "irregular step left unequal first coordinates";
      after_irregular = true;
    }
  }
  return {};
}

/// Seeded random valid fork inputs over random figures and bases.
inline SuiteReport fork_suite_random(std::uint64_t seed, std::size_t count, std::size_t max_size = 60) {
  std::mt19937_64 rng(seed);
  SuiteReport report;
  auto nonzero = [&](std::int64_t lim) {
    std::int64_t v = 0;
    while (v == 0) v = draw_between(rng, -lim, lim);
    return v;
  };
  while (report.cases < count) {
    const Figure f = detail::random_case_figure(rng, max_size);
    const IntVec u{draw_between(rng, -2, 2), draw_between(rng, -2, 2)};
    const IntVec v{draw_between(rng, -2, 2), draw_between(rng, -2, 2)};
    if (cross(u, v) == 0) continue;
    const Basis basis(u, v);
    // Several coefficient draws per figure keep the acceptance rate sane.
    for (int tries = 0; tries < 20 && report.cases < count; ++tries) {
      const IntVec c1{nonzero(4), nonzero(4)};
      IntVec c2{nonzero(4), nonzero(4)};
      if (c1.x * c1.y * c2.x * c2.y > 0) c2.x = -c2.x;
      if (!f.realizes(basis.to_plane(c1)) || !f.realizes(basis.to_plane(c2))) continue;
      ++report.cases;
      try {
        const ForkCertificate cert = fork_trace(f, basis, c1, c2);
        if (auto msg = audit_fork_certificate(f, basis, cert); !msg.empty()) report.fail(f, msg);
      } catch (const Error& e) {
        report.fail(f, e.what());
      }
    }
  }
  return report;
}

}  // namespace leaper
