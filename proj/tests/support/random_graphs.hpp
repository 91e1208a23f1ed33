#pragma once

#include <random>
#include <string>

#include "groundkit/digraph.hpp"

namespace groundkit::testing {

// Seeded Erdos-Renyi style digraph, labels "n0".."n<k-1>".
inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, double density,
                              double self_loop_p = 0.0) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.intern("n" + std::to_string(i));
  std::bernoulli_distribution arc(density);
  std::bernoulli_distribution self(self_loop_p);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u == v ? self(rng) : arc(rng)) g.add_arc(u, v);
  return g;
}

// All digraphs on n vertices (one bit per ordered pair, self-loops
// included): mask runs over [0, 2^(n*n)).
inline Digraph digraph_from_mask(std::size_t n, std::uint64_t mask) {
  Digraph g;
  for (std::size_t i = 0; i < n; ++i) g.intern("n" + std::to_string(i));
  std::size_t bit = 0;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v, ++bit)
      if (mask >> bit & 1) g.add_arc(u, v);
  return g;
}

}  // namespace groundkit::testing
