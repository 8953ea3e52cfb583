// Builds the 37 x 37 grid embedding into the 49 x 49 zebra graph, checks it
// both ways, and prints it as ASCII.

#include <iostream>

#include "leaper/all.hpp"

int main() {
  using namespace leaper;
  const Leaper zebra = classify(3, 2);
  const Construction c = free_construction(zebra, 3);
  const VerificationReport r = check_pair(c.alpha, c.beta, c.n);
  const GridEmbedding e = product(c.alpha, c.beta).placed_on_board();

  std::cout << "m=" << c.m << " n=" << c.n << " disjoint=" << r.disjoint << " box_ok=" << r.box_ok
            << " verified=" << verify_embedding(e, zebra, c.n) << "\n\n";
  std::cout << render_ascii(scene_of(c.alpha));
  return r.valid() ? 0 : 1;
}
