#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "leaper/embedding.hpp"
#include "leaper/path.hpp"
#include "leaper/vec.hpp"

namespace leaper {

/// Points and segments to draw on an n x n board, in board coordinates
/// 1..n. Labels are the indices printed by the ASCII renderer.
struct Scene {
  std::int64_t n = 1;
  std::vector<IntVec> points;
  std::vector<std::size_t> labels;
  std::vector<std::pair<IntVec, IntVec>> segments;
};

namespace detail {

inline std::int64_t scene_board(std::int64_t n, const Box& b) { return std::max({n, b.size_x(), b.size_y()}); }

}  // namespace detail

/// A path drawn vertex by vertex, with one segment per leap.
inline Scene scene_of(const LeaperPath& path, std::int64_t n = 0) {
  const IntVec shift = IntVec{1, 1} - path.box().corner();
  Scene s;
  s.n = detail::scene_board(n, path.box());
  for (std::size_t i = 0; i < path.size(); ++i) {
    s.points.push_back(path[i] + shift);
    s.labels.push_back(i);
    if (i > 0) s.segments.emplace_back(path[i - 1] + shift, path[i] + shift);
  }
  return s;
}

/// The images of the grid vertices, labelled i*m + j, and of its edges.
inline Scene scene_of(const GridEmbedding& e, std::int64_t n = 0) {
  const GridEmbedding placed = e.placed_on_board();
  Scene s;
  s.n = detail::scene_board(n, e.box());
  s.points = placed.points();
  for (std::size_t i = 0; i < s.points.size(); ++i) s.labels.push_back(i);
  s.segments = placed.edges();
  return s;
}

/// Board with y increasing upward; empty cells print as '.'.
inline std::string render_ascii(const Scene& s) {
  std::size_t width = 1;
  for (std::size_t l : s.labels) width = std::max(width, std::to_string(l).size());
  std::vector<std::string> cell(static_cast<std::size_t>(s.n * s.n), ".");
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const IntVec p = s.points[i];
    cell[static_cast<std::size_t>((p.y - 1) * s.n + (p.x - 1))] = std::to_string(s.labels[i]);
  }
  std::ostringstream os;
  for (std::int64_t y = s.n; y >= 1; --y) {
    for (std::int64_t x = 1; x <= s.n; ++x) {
      const std::string& c = cell[static_cast<std::size_t>((y - 1) * s.n + (x - 1))];
      os << std::string(width - c.size() + (x > 1 ? 1 : 0), ' ') << c;
    }
    os << '\n';
  }
  return os.str();
}

/// SVG at 20 px per board unit, y axis upward. Board cells are small grey
/// dots, embedded points filled circles, edges line segments.
inline std::string render_svg(const Scene& s) {
  constexpr std::int64_t unit = 20;
  const std::int64_t size = (s.n + 1) * unit;
  auto px = [&](IntVec p) { return std::pair{p.x * unit, (s.n + 1 - p.y) * unit}; };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
     << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  os << "<rect width=\"" << size << "\" height=\"" << size << "\" fill=\"white\"/>\n";
  os << "<g class=\"board\" fill=\"#bbbbbb\">\n";
  for (std::int64_t y = 1; y <= s.n; ++y)
    for (std::int64_t x = 1; x <= s.n; ++x) {
      auto [cx, cy] = px({x, y});
      os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"2\"/>\n";
    }
  os << "</g>\n<g class=\"edges\" stroke=\"black\" stroke-width=\"2\">\n";
  for (auto [a, b] : s.segments) {
    auto [x1, y1] = px(a);
    auto [x2, y2] = px(b);
    os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2 << "\"/>\n";
  }
  os << "</g>\n<g class=\"points\" fill=\"black\">\n";
  for (IntVec p : s.points) {
    auto [cx, cy] = px(p);
    os << "<circle class=\"point\" cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace leaper
