#pragma once

#include <cstdint>

#include "twoclub/graph.hpp"

namespace twoclub {

// SplitMix64. Fixed, documented constants so seeded fixtures can be
// reproduced by other implementations.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform in [0,1): top 53 bits of next()
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

// G(n,p): pairs (u,v), u<v, visited in lexicographic order; the edge is kept
// when the next unit draw is < p.
Graph random_graph(int n, double p, std::uint64_t seed);

// Uniform random tree from a Pruefer sequence: n-2 symbols, each
// next() % n, decoded with the smallest-leaf-first rule.
Graph random_tree(int n, std::uint64_t seed);

}  // namespace twoclub
