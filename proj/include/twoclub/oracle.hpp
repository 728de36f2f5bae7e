#pragma once

#include <cstdint>
#include <optional>

#include "twoclub/edit.hpp"
#include "twoclub/graph.hpp"

namespace twoclub {

struct SolveResult {
  int value = 0;
  EditScript script;
};

// Iterative-deepening exhaustive search over edit sequences. Ground truth at
// small sizes; throws when g exceeds `n_bound`. Branches only on ops that
// touch the distance-2 ball around some length-3 geodesic (ops elsewhere
// cannot resolve it since edits never shorten distances).
std::optional<SolveResult> iddfs_optimum(const Graph& g, Problem problem,
                                         int kmax, bool exclusive = false,
                                         std::uint64_t* nodes = nullptr,
                                         int n_bound = 7);

// All connected graphs with up to nmax vertices, one representative per
// isomorphism class (canonical = minimum adjacency bitmask over vertex
// permutations). Ordered by vertex count, then by canonical mask.
std::vector<Graph> catalog_small_graphs(int nmax);

}  // namespace twoclub
