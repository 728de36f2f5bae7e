#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace twoclub {

inline constexpr int kInfDist = std::numeric_limits<int>::max();

// Simple undirected graph. Vertex ids are contiguous, 0-based. `label[v]`
// traces a vertex back to the original it is a copy of; it starts out as the
// identity and is inherited by copies created by vertex splits.
struct Graph {
  std::vector<std::vector<int>> adj;  // sorted neighbor lists
  std::vector<int> label;

  int n() const { return static_cast<int>(adj.size()); }
  int m() const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
};

// A path x-u-v-y whose endpoints are at distance exactly 3.
struct Obstruction {
  int x, u, v, y;
  bool operator==(const Obstruction&) const = default;
};

Graph make_graph(int n);

// Builds a graph from an edge list; rejects self-loops, duplicates and
// out-of-range endpoints.
Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

bool has_edge(const Graph& g, int u, int v);
void add_edge(Graph& g, int u, int v);
void remove_edge(Graph& g, int u, int v);
std::vector<std::pair<int, int>> edge_list(const Graph& g);

// Checks symmetry, absence of loops/duplicates and id ranges; throws on
// violation. Used by parsers and tests.
void validate(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int src);
int distance(const Graph& g, int u, int v);

// Distances are measured inside the subgraph induced by `s`, not in g.
bool is_two_club(const Graph& g, const std::vector<int>& s);
bool is_two_club_graph(const Graph& g);

// Components ordered by their minimum vertex id; each sorted ascending.
std::vector<std::vector<int>> connected_components(const Graph& g);

// Smallest (x,u,v,y) in lexicographic id order such that x-u-v-y is a path,
// d(x,y) = 3 and neither interior vertex is marked.
std::optional<Obstruction> find_obstruction(const Graph& g,
                                            const std::vector<char>& marked);
std::optional<Obstruction> find_obstruction(const Graph& g);

// Induced subgraph on `verts` (sorted). New ids are positions in `verts`;
// labels are carried over. `orig_of_new`, when given, receives the remap
// table back to ids of g.
Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* orig_of_new = nullptr);

bool is_forest(const Graph& g);

}  // namespace twoclub
