#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "leaper/chord.hpp"
#include "leaper/figure.hpp"
#include "leaper/fork.hpp"
#include "leaper/suites.hpp"

namespace leaper {
namespace {

const Figure kL({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});

// Brute force over all ordered cell pairs, kept apart from Figure::realizes.
bool brute_realizes(const std::vector<IntVec>& cells, IntVec u) {
  for (IntVec a : cells)
    for (IntVec b : cells)
      if (b - a == u) return true;
  return false;
}

TEST(IsConnected, Examples) {
  const std::vector<IntVec> pair{{0, 0}, {1, 0}};
  const std::vector<IntVec> diag{{0, 0}, {1, 1}};
  const std::vector<IntVec> one{{0, 0}};
  EXPECT_TRUE(is_connected(pair));
  EXPECT_FALSE(is_connected(diag));
  EXPECT_TRUE(is_connected(one));
  EXPECT_FALSE(is_connected(std::vector<IntVec>{}));
}

TEST(Figure, RejectsDisconnected) {
  try {
    Figure f({{0, 0}, {2, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionUnmet);
  }
}

TEST(Realizes, LFigure) {
  const auto w = realizes(kL, {0, 2});
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, (Witness{{2, 0}, {2, 2}}));
  EXPECT_TRUE(realizes(kL, {1, 1}).has_value());
  EXPECT_FALSE(realizes(kL, {0, 3}).has_value());
  const auto zero = realizes(kL, {0, 0});
  ASSERT_TRUE(zero.has_value());
  EXPECT_EQ(zero->a, zero->b);
}

TEST(Realizes, SymmetricAndMatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Figure f = random_figure(seed, 1 + seed % 15, Box{0, 5, 0, 5});
    for (std::int64_t x = -6; x <= 6; ++x)
      for (std::int64_t y = -6; y <= 6; ++y) {
        const IntVec u{x, y};
        const auto w = f.realizes(u);
        EXPECT_EQ(w.has_value(), f.realizes(-u).has_value());
        EXPECT_EQ(w.has_value(), brute_realizes(f.cells(), u));
        if (w) {
          EXPECT_TRUE(f.contains(w->a));
          EXPECT_TRUE(f.contains(w->b));
          EXPECT_EQ(w->b - w->a, u);
        }
      }
  }
}

TEST(RealizedSet, Examples) {
  EXPECT_EQ(realized_set(Figure({{0, 0}})).size(), 0u);
  const DiffSet two = realized_set(Figure({{0, 0}, {1, 0}}));
  EXPECT_EQ(two.size(), 2u);
  EXPECT_TRUE(two.contains({1, 0}));
  EXPECT_TRUE(two.contains({-1, 0}));
  // 2x2 square: 8 nonzero differences.
  EXPECT_EQ(realized_set(Figure({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).size(), 8u);
}

TEST(ChordCheck, Examples) {
  EXPECT_TRUE(chord_check(kL, {0, 1}, 2));
  const Figure bar({{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 0}});
  EXPECT_TRUE(chord_check(bar, {2, 0}, 2));
  EXPECT_TRUE(chord_check(bar, {1, 0}, 5));
  try {
    chord_check(bar, {1, 1}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionUnmet);
  }
}

TEST(ChordCheck, ExhaustiveSmallPolyominoes) {
  const SuiteReport r = chord_suite_exhaustive(9, 5);
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.counterexamples, 0u) << r.first_message;
}

TEST(ChordCheck, RandomFigures) {
  const SuiteReport r = chord_suite_random(3, 300, 40, 6);
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.counterexamples, 0u) << r.first_message;
}

TEST(Convexity, Examples) {
  EXPECT_TRUE(is_strictly_convex({0, 0}, {2, 0}, {2, 2}, {0, 2}));
  EXPECT_TRUE(is_strictly_convex({0, 2}, {2, 2}, {2, 0}, {0, 0}));
  EXPECT_FALSE(is_strictly_convex({0, 0}, {2, 2}, {2, 0}, {0, 2}));
  EXPECT_FALSE(is_strictly_convex({0, 0}, {1, 0}, {2, 0}, {0, 2}));
  EXPECT_FALSE(is_strictly_convex({0, 0}, {4, 0}, {1, 1}, {0, 4}));
}

TEST(QuadCheck, UnitSquare) {
  // Diagonals (0,0)-(1,1) and (1,0)-(0,1); the 2x2 block realizes both.
  const Figure sq({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto s = quad_check(sq, {0, 0}, {1, 0}, {1, 1}, {0, 1});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->index, 0);
  EXPECT_EQ(s->side, (IntVec{-1, 0}));
  EXPECT_EQ(s->witness.b - s->witness.a, s->side);
}

TEST(QuadCheck, Errors) {
  const Figure sq({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  try {
    quad_check(sq, {0, 0}, {1, 1}, {1, 0}, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotConvex);
  }
  try {
    quad_check(sq, {0, 0}, {3, 0}, {3, 3}, {0, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionUnmet);
  }
}

// Every polyomino up to 5 cells, every pair of realized diagonals, every
// small choice of the remaining corners that yields a convex quadrilateral.
TEST(QuadCheck, ExhaustiveSmall) {
  std::uint64_t cases = 0;
  for_each_polyomino(5, [&](std::span<const IntVec> cells) {
    const Figure f(std::vector<IntVec>(cells.begin(), cells.end()));
    const DiffSet ds = f.realized_set();
    std::vector<IntVec> diffs(ds.values().begin(), ds.values().end());
    std::sort(diffs.begin(), diffs.end());
    for (IntVec ac : diffs)
      for (IntVec bd : diffs) {
        if (cross(ac, bd) == 0) continue;
        const IntVec a{0, 0};
        const IntVec c = a - ac;
        for (std::int64_t bx = -3; bx <= 3; ++bx)
          for (std::int64_t by = -3; by <= 3; ++by) {
            const IntVec b{bx, by};
            const IntVec d = b - bd;
            if (!is_strictly_convex(a, b, c, d)) continue;
            ++cases;
            const auto s = quad_check(f, a, b, c, d);
            ASSERT_TRUE(s.has_value());
            const auto sides = quad_sides(a, b, c, d);
            EXPECT_TRUE(brute_realizes(f.cells(), sides[static_cast<std::size_t>(s->index)]));
          }
      }
  });
  EXPECT_GT(cases, 1000u);
}

TEST(QuadCheck, RandomSuite) {
  const SuiteReport r = quad_suite_random(5, 2000, 40);
  EXPECT_EQ(r.cases, 2000u);
  EXPECT_EQ(r.counterexamples, 0u) << r.first_message;
}

TEST(NormalizeForkInput, Examples) {
  const GoodPair gp = normalize_fork_input({1, 1}, {1, -1});
  EXPECT_EQ(gp.first, (IntVec{1, 1}));
  EXPECT_EQ(gp.second, (IntVec{-1, 1}));
  EXPECT_TRUE(gp.valid());

  const GoodPair g2 = normalize_fork_input({-2, 3}, {-1, -4});
  EXPECT_EQ(g2.first, (IntVec{1, 4}));
  EXPECT_EQ(g2.second, (IntVec{-2, 3}));

  for (auto [a, b] : {std::pair{IntVec{1, 1}, IntVec{1, 1}}, {IntVec{1, 0}, IntVec{1, -1}}}) {
    try {
      normalize_fork_input(a, b);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotFork);
    }
  }
}

TEST(ForkQuadrilateral, Examples) {
  const auto s = fork_quadrilateral({{2, 1}, {-1, 1}});
  EXPECT_EQ(s[0], (IntVec{-1, 0}));
  EXPECT_EQ(s[1], (IntVec{-1, -1}));
  EXPECT_EQ(s[2], (IntVec{2, 0}));
  EXPECT_EQ(s[3], (IntVec{0, 1}));
}

TEST(ForkQuadrilateral, ClosesAndHasGoodPairDiagonals) {
  for (std::int64_t x = 1; x <= 6; ++x)
    for (std::int64_t y = 1; y <= 6; ++y)
      for (std::int64_t z = 1; z <= 6; ++z)
        for (std::int64_t t = 1; t <= 6; ++t) {
          const GoodPair gp{{x, y}, {-z, t}};
          const auto s = fork_quadrilateral(gp);
          EXPECT_EQ(s[0] + s[1] + s[2] + s[3], (IntVec{0, 0}));
          EXPECT_EQ(s[0] + s[1], -gp.first);
          EXPECT_EQ(s[1] + s[2], -gp.second);
          EXPECT_EQ(s[0].y, 0);  // A-B lies on the first axis
        }
}

TEST(ForkTrace, LFigure) {
  const Basis basis({1, 1}, {-1, 1});
  const ForkCertificate cert = fork_trace(kL, basis, {1, 1}, {1, -1});
  ASSERT_FALSE(cert.steps.empty());
  EXPECT_EQ(cert.steps.size(), 1u);
  EXPECT_EQ(cert.conclusion.coefficient, (IntVec{1, 0}));
  EXPECT_EQ(cert.conclusion.target, (IntVec{1, 1}));
  EXPECT_EQ(cert.conclusion.witness, (Witness{{1, 0}, {2, 1}}));
  EXPECT_TRUE(cert.steps.back().regular);
}

TEST(ForkTrace, Errors) {
  const Figure sq({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  try {
    fork_trace(sq, Basis({1, 0}, {0, 1}), {2, 3}, {-1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PreconditionUnmet);
  }
  EXPECT_THROW(Basis({1, 2}, {2, 4}), Error);
}

TEST(ForkTrace, Deterministic) {
  const Figure f = random_figure(99, 30, Box{0, 9, 0, 9});
  const Basis basis({1, 0}, {0, 1});
  const ForkCertificate a = fork_trace(f, basis, {1, 1}, {-1, 1});
  const ForkCertificate b = fork_trace(f, basis, {1, 1}, {-1, 1});
  EXPECT_EQ(a, b);
}

// Independent audit of every certificate on small figures: realization
// flags against brute force, chosen side realized, each next pair good and
// lighter, conclusion witness valid. Also checks the fork conclusion itself
// directly: u or v must be realized.
TEST(ForkTrace, ExhaustiveAudit) {
  const std::vector<Basis> bases{Basis({1, 0}, {0, 1}), Basis({1, 1}, {-1, 1}), Basis({2, 1}, {-1, 1})};
  std::uint64_t traced = 0;
  for_each_polyomino(6, [&](std::span<const IntVec> cells) {
    const std::vector<IntVec> cv(cells.begin(), cells.end());
    const Figure f(cv);
    for (const Basis& basis : bases)
      for (std::int64_t a = 1; a <= 3; ++a)
        for (std::int64_t b = 1; b <= 3; ++b)
          for (std::int64_t c = 1; c <= 3; ++c)
            for (std::int64_t d = 1; d <= 3; ++d) {
              const IntVec u1{a, b}, u2{-c, d};
              if (!brute_realizes(cv, basis.to_plane(u1)) || !brute_realizes(cv, basis.to_plane(u2))) continue;
              ++traced;
              EXPECT_TRUE(brute_realizes(cv, basis.u()) || brute_realizes(cv, basis.v()));
              const ForkCertificate cert = fork_trace(f, basis, u1, u2);
              for (std::size_t i = 0; i < cert.steps.size(); ++i) {
                const ForkStep& s = cert.steps[i];
                for (std::size_t k = 0; k < 4; ++k)
                  EXPECT_EQ(s.realized[k], brute_realizes(cv, basis.to_plane(s.sides[k])));
                ASSERT_GE(s.chosen, 0);
                EXPECT_TRUE(s.realized[static_cast<std::size_t>(s.chosen)]);
                if (i + 1 < cert.steps.size()) {
                  ASSERT_TRUE(s.next.has_value());
                  EXPECT_TRUE(s.next->valid());
                  EXPECT_LT(s.next->weight(), s.pair.weight());
                  EXPECT_EQ(cert.steps[i + 1].pair, *s.next);
                } else {
                  EXPECT_FALSE(s.next.has_value());
                }
              }
              EXPECT_LE(cert.irregular_count(), 1u);
              bool after_irregular = false;
              for (const ForkStep& s : cert.steps) {
                if (after_irregular) {
                  EXPECT_EQ(s.pair.first.x, -s.pair.second.x);
                }
                if (!s.regular) after_irregular = true;
              }
              const ForkConclusion& k = cert.conclusion;
              EXPECT_TRUE(k.target == basis.u() || k.target == basis.v());
              EXPECT_EQ(k.witness.b - k.witness.a, k.target);
              EXPECT_TRUE(f.contains(k.witness.a) && f.contains(k.witness.b));
            }
  });
  EXPECT_GT(traced, 1000u);
}

TEST(ForkTrace, RandomSuite) {
  const SuiteReport r = fork_suite_random(8, 1000, 40);
  EXPECT_EQ(r.counterexamples, 0u) << r.first_message;
}

TEST(RandomFigure, DeterministicConnectedAndBounded) {
  const Box box{0, 7, 0, 7};
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Figure a = random_figure(seed, 20, box);
    EXPECT_EQ(a, random_figure(seed, 20, box));
    EXPECT_EQ(a.size(), 20u);
    EXPECT_TRUE(is_connected(a.cells()));
    for (IntVec c : a.cells()) EXPECT_TRUE(box.contains(c));
  }
  EXPECT_EQ(random_figure(1, 500, Box{0, 2, 0, 2}).size(), 9u);
  EXPECT_NE(random_figure(1, 20, box), random_figure(2, 20, box));
}

// Breadth-first growth with translation-normalised deduplication.
std::vector<std::size_t> oracle_polyomino_counts(std::size_t max_cells) {
  using Shape = std::vector<IntVec>;
  auto normalise = [](Shape s) {
    const Box b = bounding_box(s);
    for (IntVec& c : s) c = c - b.corner();
    std::sort(s.begin(), s.end());
    return s;
  };
  std::vector<std::size_t> counts;
  std::set<Shape> level{Shape{{0, 0}}};
  while (!level.empty() && counts.size() < max_cells) {
    counts.push_back(level.size());
    std::set<Shape> next;
    for (const Shape& s : level)
      for (IntVec c : s)
        for (IntVec st : kUnitSteps) {
          const IntVec nb = c + st;
          if (std::find(s.begin(), s.end(), nb) != s.end()) continue;
          Shape g = s;
          g.push_back(nb);
          next.insert(normalise(std::move(g)));
        }
    level = std::move(next);
  }
  return counts;
}

TEST(Polyominoes, CountsMatchOracle) {
  const std::size_t max_cells = 8;
  std::vector<std::size_t> counts(max_cells, 0);
  std::set<std::vector<IntVec>> distinct;
  for_each_polyomino(max_cells, [&](std::span<const IntVec> cells) {
    ++counts[cells.size() - 1];
    std::vector<IntVec> s(cells.begin(), cells.end());
    EXPECT_TRUE(is_connected(s));
    const Box b = bounding_box(s);
    for (IntVec& c : s) c = c - b.corner();
    std::sort(s.begin(), s.end());
    distinct.insert(s);
  });
  EXPECT_EQ(counts, oracle_polyomino_counts(max_cells));
  EXPECT_EQ(distinct.size(), std::accumulate(counts.begin(), counts.end(), std::size_t{0}));
  EXPECT_EQ(counts[0], 1u);
  EXPECT_EQ(counts[1], 2u);
  EXPECT_EQ(counts[2], 6u);
  EXPECT_EQ(counts[3], 19u);
}

}  // namespace
}  // namespace leaper
