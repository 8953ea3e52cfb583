// Runs the fork procedure on a small L-shaped figure that realizes (0, 2)
// and (2, 0), expressed in the basis u = (1, 1), v = (-1, 1).

#include <iostream>

#include "leaper/all.hpp"

int main() {
  using namespace leaper;
  const Figure fig({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}});
  const Basis basis({1, 1}, {-1, 1});
  const ForkCertificate cert = fork_trace(fig, basis, {1, 1}, {1, -1});
  for (const ForkStep& s : cert.steps) {
    std::cout << "pair " << s.pair.first << " " << s.pair.second << " -> side " << s.sides[s.chosen];
    std::cout << (s.regular ? "" : " (irregular)") << "\n";
  }
  const auto& c = cert.conclusion;
  std::cout << "realizes " << c.target << ": " << c.witness.a << " -> " << c.witness.b << "\n";
}
