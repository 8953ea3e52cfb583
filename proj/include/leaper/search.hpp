#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <future>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "leaper/embedding.hpp"
#include "leaper/error.hpp"
#include "leaper/leaper.hpp"
#include "leaper/path.hpp"

namespace leaper {

struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;
  std::int64_t max_m = 1'000;
  double time_budget = 600.0;  ///< seconds
  unsigned threads = 1;
};

/// Largest m with an m x m grid embedding in the n x n board. When the
/// budget runs out, m_star is the best size found and m_upper the best
/// proven bound; otherwise m_star == m_upper.
struct SearchResult {
  std::int64_t n = 0;
  std::int64_t m_star = 0;
  std::int64_t m_upper = 0;
  std::optional<std::pair<LeaperPath, LeaperPath>> witness;
  bool exhausted = false;
  std::uint64_t nodes = 0;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// Smallest vertex sequence, in lexicographic order, among the 16 images of
/// `v` under the square's symmetries and reversal, each translated to start
/// at the origin.
inline std::vector<IntVec> canonical_path(std::span<const IntVec> v) {
  std::vector<IntVec> best, cur(v.size());
  for (int sym = 0; sym < 8; ++sym) {
    for (int dir = 0; dir < 2; ++dir) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        IntVec p = dir == 0 ? v[i] : v[v.size() - 1 - i];
        if (sym & 4) p = {p.y, p.x};
        if (sym & 1) p.x = -p.x;
        if (sym & 2) p.y = -p.y;
        cur[i] = p;
      }
      const IntVec base = cur[0];
      for (IntVec& p : cur) p -= base;
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

namespace detail {

enum class Outcome { Found, Infeasible, Budget };

/// Dense bitmap over the square [-r, r]^2.
class PlaneBits {
 public:
  explicit PlaneBits(std::int64_t r) : r_(r), w_(2 * r + 1), bits_(static_cast<std::size_t>(w_ * w_), 0) {}
  bool in_range(IntVec v) const { return std::llabs(v.x) <= r_ && std::llabs(v.y) <= r_; }
  bool test(IntVec v) const { return in_range(v) && bits_[idx(v)]; }
  void set(IntVec v, char b) { bits_[idx(v)] = b; }
  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }

 private:
  std::size_t idx(IntVec v) const { return static_cast<std::size_t>((v.y + r_) * w_ + (v.x + r_)); }
  std::int64_t r_, w_;
  std::vector<char> bits_;
};

struct SharedBudget {
  std::uint64_t max_nodes;
  std::chrono::steady_clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out{false};

  bool charge(std::uint64_t k) {
    const auto total = nodes.fetch_add(k, std::memory_order_relaxed) + k;
    if (total > max_nodes || ((total & 0x3FFF) < k && std::chrono::steady_clock::now() > deadline))
      out.store(true, std::memory_order_relaxed);
    return !out.load(std::memory_order_relaxed);
  }
};

/// Enumerates alpha paths whose first two moves are fixed (one worker per
/// second move), and for each canonical alpha looks for a compatible beta.
class PairSearch {
 public:
  PairSearch(const Leaper& leaper, std::int64_t n, std::int64_t m, SharedBudget& budget,
             const std::atomic<int>& best_prefix)
      : leaper_(leaper),
        n_(n),
        m_(static_cast<std::size_t>(m)),
        moves_(leaper.moves()),
        budget_(budget),
        best_prefix_(best_prefix),
        visited_(n),
        alpha_diff_(n) {
    const auto lo = std::min(leaper.p, leaper.q);
    max_ax_ = n - lo;
    max_ay_ = n - lo;
    max_sum_ = 2 * n - leaper.p - leaper.q;
  }

  std::size_t prefix_count() const { return moves_.size(); }

  Outcome run(int prefix) {
    prefix_ = prefix;
    alpha_.assign(1, IntVec{0, 0});
    visited_.clear();
    visited_.set({0, 0}, 1);
    const IntVec first = moves_.front();
    if (!extend_alpha_with(first, Box{0, 0, 0, 0})) return aborted_ ? Outcome::Budget : Outcome::Infeasible;
    return found_ ? Outcome::Found : aborted_ ? Outcome::Budget : Outcome::Infeasible;
  }

  std::pair<LeaperPath, LeaperPath> witness() const {
    return {LeaperPath(leaper_, alpha_), LeaperPath(leaper_, beta_)};
  }

 private:
  bool stop() {
    if (budget_.out.load(std::memory_order_relaxed)) aborted_ = true;
    return aborted_ || best_prefix_.load(std::memory_order_relaxed) < prefix_;
  }

  static Box grow(Box b, IntVec p) {
    return {std::min(b.x_min, p.x), std::max(b.x_max, p.x), std::min(b.y_min, p.y), std::max(b.y_max, p.y)};
  }

  // Returns true when the search should unwind (found or aborted).
  bool extend_alpha_with(IntVec mv, Box box) {
    const IntVec nxt = alpha_.back() + mv;
    if (!visited_.in_range(nxt) || visited_.test(nxt)) return false;
    const Box nb = grow(box, nxt);
    if (nb.size_x() > max_ax_ || nb.size_y() > max_ay_ || nb.size_x() + nb.size_y() > max_sum_) return false;
    if (!budget_.charge(1)) aborted_ = true;
    if (stop()) return true;
    alpha_.push_back(nxt);
    visited_.set(nxt, 1);
    bool unwind = false;
    if (alpha_.size() == m_) {
      unwind = try_alpha(nb);
    } else if (alpha_.size() == 2) {
      unwind = extend_alpha_with(moves_[static_cast<std::size_t>(prefix_)], nb);
    } else {
      for (IntVec m : moves_)
        if ((unwind = extend_alpha_with(m, nb))) break;
    }
    if (!found_) {
      visited_.set(nxt, 0);
      alpha_.pop_back();
    }
    return unwind;
  }

  bool try_alpha(const Box& abox) {
    if (canonical_path(alpha_) != alpha_) return false;
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        if (i != j) alpha_diff_.set(alpha_[i] - alpha_[j], 1);
    bmax_x_ = n_ + 1 - abox.size_x();
    bmax_y_ = n_ + 1 - abox.size_y();
    beta_moves_.clear();
    for (IntVec mv : moves_)
      if (!alpha_diff_.test(mv)) beta_moves_.push_back(mv);
    bool unwind = false;
    if (!beta_moves_.empty()) {
      beta_.assign(1, IntVec{0, 0});
      for (IntVec mv : beta_moves_)
        if ((unwind = extend_beta_with(mv, Box{0, 0, 0, 0}))) break;
    }
    for (std::size_t i = 0; i < m_; ++i)
      for (std::size_t j = 0; j < m_; ++j)
        if (i != j) alpha_diff_.set(alpha_[i] - alpha_[j], 0);
    return unwind;
  }

  bool extend_beta_with(IntVec mv, Box box) {
    const IntVec nxt = beta_.back() + mv;
    const Box nb = grow(box, nxt);
    if (nb.size_x() > bmax_x_ || nb.size_y() > bmax_y_) return false;
    for (std::size_t i = 0; i + 1 < beta_.size(); ++i) {
      const IntVec d = nxt - beta_[i];
      if (is_zero(d) || alpha_diff_.test(d)) return false;
    }
    if (!budget_.charge(1)) aborted_ = true;
    if (stop()) return true;
    beta_.push_back(nxt);
    if (beta_.size() == m_) {
      found_ = true;
      return true;
    }
    bool unwind = false;
    for (IntVec m : beta_moves_)
      if ((unwind = extend_beta_with(m, nb))) break;
    if (!found_) beta_.pop_back();
    return unwind;
  }

  Leaper leaper_;
  std::int64_t n_;
  std::size_t m_;
  std::vector<IntVec> moves_;
  SharedBudget& budget_;
  const std::atomic<int>& best_prefix_;
  int prefix_ = 0;
  PlaneBits visited_;
  PlaneBits alpha_diff_;
  std::vector<IntVec> alpha_, beta_, beta_moves_;
  std::int64_t max_ax_ = 0, max_ay_ = 0, max_sum_ = 0, bmax_x_ = 0, bmax_y_ = 0;
  bool found_ = false;
  bool aborted_ = false;
};

struct FeasibilityAnswer {
  Outcome outcome;
  std::optional<std::pair<LeaperPath, LeaperPath>> witness;
};

inline FeasibilityAnswer feasible(const Leaper& leaper, std::int64_t n, std::int64_t m, SharedBudget& budget,
                                  unsigned threads) {
  std::atomic<int> best_prefix{std::numeric_limits<int>::max()};
  const std::size_t prefixes = leaper.moves().size();
  std::vector<Outcome> outcome(prefixes, Outcome::Infeasible);
  std::vector<std::optional<std::pair<LeaperPath, LeaperPath>>> wit(prefixes);

  auto work = [&](std::size_t i) {
    PairSearch s(leaper, n, m, budget, best_prefix);
    outcome[i] = s.run(static_cast<int>(i));
    if (outcome[i] == Outcome::Found) {
      wit[i] = s.witness();
      int cur = best_prefix.load();
      while (static_cast<int>(i) < cur && !best_prefix.compare_exchange_weak(cur, static_cast<int>(i))) {
      }
    }
  };
  if (threads <= 1) {
    for (std::size_t i = 0; i < prefixes && best_prefix.load() == std::numeric_limits<int>::max(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.push_back(std::async(std::launch::async, [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < prefixes;) work(i);
      }));
    for (auto& f : pool) f.get();
  }
  // Prefixes are resolved in order: a witness at i counts only when every
  // earlier prefix was fully refuted.
  for (std::size_t i = 0; i < prefixes; ++i) {
    if (outcome[i] == Outcome::Found) return {Outcome::Found, wit[i]};
    if (outcome[i] == Outcome::Budget) {
      for (std::size_t j = i + 1; j < prefixes; ++j)
        if (outcome[j] == Outcome::Found) return {Outcome::Found, wit[j]};
      return {Outcome::Budget, std::nullopt};
    }
  }
  return {Outcome::Infeasible, std::nullopt};
}

}  // namespace detail

/// Exact maximum grid size for the n x n leaper graph by iterative deepening
/// on m over path pairs (alpha, beta) meeting the two-path criterion. Alpha
/// is enumerated up to the square's symmetries and reversal; beta is
/// searched against alpha's stored difference set within the remaining box
/// budget (n + 1 - a_X, n + 1 - a_Y).
inline SearchResult max_grid_exact(const Leaper& leaper, std::int64_t n, const SearchLimits& limits = {}) {
  if (n < 1) throw Error(Errc::PreconditionUnmet, "n must be positive");
  detail::SharedBudget budget{limits.max_nodes,
                              std::chrono::steady_clock::now() +
                                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                      std::chrono::duration<double>(limits.time_budget))};
  SearchResult r;
  r.n = n;
  r.m_star = 1;
  r.m_upper = n;
  const std::vector<IntVec> origin{IntVec{0, 0}};
  r.witness.emplace(LeaperPath(leaper, origin), LeaperPath(leaper, origin));
  r.exhausted = true;
  for (std::int64_t m = 2;; ++m) {
    if (m > n) break;  // m^2 points cannot fit in n^2 cells
    if (m > limits.max_m) {
      r.exhausted = false;
      break;
    }
    auto ans = detail::feasible(leaper, n, m, budget, limits.threads);
    if (ans.outcome == detail::Outcome::Found) {
      r.m_star = m;
      r.witness = std::move(ans.witness);
    } else if (ans.outcome == detail::Outcome::Infeasible) {
      r.m_upper = m - 1;
      break;
    } else {
      r.exhausted = false;
      break;
    }
  }
  if (r.exhausted) r.m_upper = r.m_star;
  r.nodes = budget.nodes.load();
  return r;
}

/// No n x n grid fits into the n x n board for n >= 2. Checked by search;
/// throws BudgetExceeded when the search cannot decide.
inline bool no_perfect_embedding(const Leaper& leaper, std::int64_t n, const SearchLimits& limits = {}) {
  if (n < 2) throw Error(Errc::PreconditionUnmet, "needs n >= 2");
  const SearchResult r = max_grid_exact(leaper, n, limits);
  if (r.m_upper < n) return true;
  if (!r.exhausted) throw Error(Errc::BudgetExceeded, "search budget exhausted before deciding");
  return r.m_star < n;
}

/// One search row per board size 1..n_max.
inline std::vector<SearchResult> search_table(const Leaper& leaper, std::int64_t n_max, const SearchLimits& limits = {}) {
  std::vector<SearchResult> rows;
  for (std::int64_t n = 1; n <= n_max; ++n) rows.push_back(max_grid_exact(leaper, n, limits));
  return rows;
}

/// Aligned plain-text rendering of a search table.
inline std::string format_search_table(std::span<const SearchResult> rows) {
  std::ostringstream os;
  os << "   n  m_star  m_upper  exhausted         nodes\n";
  for (const SearchResult& r : rows) {
    char line[96];
    std::snprintf(line, sizeof line, "%4lld  %6lld  %7lld  %9s  %12llu\n", static_cast<long long>(r.n),
                  static_cast<long long>(r.m_star), static_cast<long long>(r.m_upper), r.exhausted ? "yes" : "no",
                  static_cast<unsigned long long>(r.nodes));
    os << line;
  }
  return os.str();
}

}  // namespace leaper
