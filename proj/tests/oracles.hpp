#pragma once

#include <cstdint>
#include <vector>

#include "leaper/leaper.hpp"
#include "leaper/vec.hpp"

namespace leaper::test_oracles {

// Direct placement of an m x m grid on the n x n board, one vertex at a
// time in row-major order. Shares nothing with the two-path search.
class DirectPlacement {
 public:
  DirectPlacement(const Leaper& l, std::int64_t n, std::size_t m) : l_(l), n_(n), m_(m), grid_(m * m) {}

  bool feasible() { return place(0); }

 private:
  bool on_board(IntVec v) const { return v.x >= 1 && v.x <= n_ && v.y >= 1 && v.y <= n_; }

  bool place(std::size_t k) {
    if (k == m_ * m_) return true;
    const std::size_t i = k / m_, j = k % m_;
    std::vector<IntVec> candidates;
    if (k == 0) {
      for (std::int64_t x = 1; x <= n_; ++x)
        for (std::int64_t y = 1; y <= n_; ++y) candidates.push_back({x, y});
    } else {
      const IntVec anchor = j > 0 ? grid_[k - 1] : grid_[k - m_];
      for (IntVec mv : l_.moves()) candidates.push_back(anchor + mv);
    }
    for (IntVec c : candidates) {
      if (!on_board(c) || used_.count(c)) continue;
      if (j > 0 && !l_.is_leap(c - grid_[k - 1])) continue;
      if (i > 0 && !l_.is_leap(c - grid_[k - m_])) continue;
      grid_[k] = c;
      used_.insert(c);
      if (place(k + 1)) return true;
      used_.erase(c);
    }
    return false;
  }

  Leaper l_;
  std::int64_t n_;
  std::size_t m_;
  std::vector<IntVec> grid_;
  VecSet used_;
};

}  // namespace leaper::test_oracles
