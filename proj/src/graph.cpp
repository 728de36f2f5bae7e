#include "twoclub/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace twoclub {

int Graph::m() const {
  std::size_t deg_sum = 0;
  for (const auto& nb : adj) deg_sum += nb.size();
  return static_cast<int>(deg_sum / 2);
}

Graph make_graph(int n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adj.resize(n);
  g.label.resize(n);
  for (int v = 0; v < n; ++v) g.label[v] = v;
  return g;
}

Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g = make_graph(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop");
    if (has_edge(g, u, v)) throw std::invalid_argument("duplicate edge");
    add_edge(g, u, v);
  }
  return g;
}

bool has_edge(const Graph& g, int u, int v) {
  const auto& nb = g.adj[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

void add_edge(Graph& g, int u, int v) {
  auto insert_sorted = [](std::vector<int>& nb, int w) {
    nb.insert(std::upper_bound(nb.begin(), nb.end(), w), w);
  };
  insert_sorted(g.adj[u], v);
  insert_sorted(g.adj[v], u);
}

void remove_edge(Graph& g, int u, int v) {
  auto erase_sorted = [](std::vector<int>& nb, int w) {
    auto it = std::lower_bound(nb.begin(), nb.end(), w);
    nb.erase(it);
  };
  erase_sorted(g.adj[u], v);
  erase_sorted(g.adj[v], u);
}

std::vector<std::pair<int, int>> edge_list(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < g.n(); ++u)
    for (int v : g.adj[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;
}

void validate(const Graph& g) {
  const int n = g.n();
  if (static_cast<int>(g.label.size()) != n)
    throw std::runtime_error("label table size mismatch");
  for (int u = 0; u < n; ++u) {
    const auto& nb = g.adj[u];
    if (!std::is_sorted(nb.begin(), nb.end()))
      throw std::runtime_error("neighbor list not sorted");
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::runtime_error("parallel edge");
    for (int v : nb) {
      if (v < 0 || v >= n) throw std::runtime_error("neighbor id out of range");
      if (v == u) throw std::runtime_error("self-loop");
      if (!has_edge(g, v, u)) throw std::runtime_error("asymmetric adjacency");
    }
  }
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.n(), kInfDist);
  std::deque<int> queue;
  dist[src] = 0;
  queue.push_back(src);
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.adj[u]) {
      if (dist[v] == kInfDist) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

int distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
    throw std::out_of_range("vertex id out of range");
  if (u == v) return 0;
  return bfs_distances(g, u)[v];
}

bool is_two_club(const Graph& g, const std::vector<int>& s) {
  if (s.size() <= 1) return true;
  std::vector<int> verts = s;
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  Graph h = induced_subgraph(g, verts);
  const int k = h.n();
  for (int u = 0; u < k; ++u) {
    auto dist = bfs_distances(h, u);
    for (int v = 0; v < k; ++v)
      if (dist[v] > 2) return false;
  }
  return true;
}

bool is_two_club_graph(const Graph& g) {
  // Distances within a component equal distances in g, so one BFS per vertex
  // suffices: everything in the component must lie within two steps.
  std::vector<int> comp(g.n(), -1);
  int ncomp = 0;
  std::vector<int> comp_size;
  for (int s = 0; s < g.n(); ++s) {
    if (comp[s] != -1) continue;
    int id = ncomp++;
    comp_size.push_back(0);
    std::deque<int> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      ++comp_size[id];
      for (int v : g.adj[u])
        if (comp[v] == -1) {
          comp[v] = id;
          queue.push_back(v);
        }
    }
  }
  for (int u = 0; u < g.n(); ++u) {
    int reached = 1;
    std::vector<int> dist(g.n(), -1);
    dist[u] = 0;
    std::deque<int> queue{u};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      if (dist[a] == 2) continue;
      for (int b : g.adj[a])
        if (dist[b] == -1) {
          dist[b] = dist[a] + 1;
          ++reached;
          queue.push_back(b);
        }
    }
    if (reached < comp_size[comp[u]]) return false;
  }
  return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  std::vector<char> seen(g.n(), 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      comp.push_back(u);
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::optional<Obstruction> find_obstruction(const Graph& g,
                                            const std::vector<char>& marked) {
  for (int x = 0; x < g.n(); ++x) {
    auto dist = bfs_distances(g, x);
    bool has_far = false;
    for (int w = 0; w < g.n() && !has_far; ++w)
      has_far = dist[w] == 3;
    if (!has_far) continue;
    for (int u : g.adj[x]) {
      if (marked[u]) continue;
      for (int v : g.adj[u]) {
        if (marked[v] || dist[v] != 2) continue;
        for (int y : g.adj[v]) {
          if (dist[y] == 3) return Obstruction{x, u, v, y};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> find_obstruction(const Graph& g) {
  return find_obstruction(g, std::vector<char>(g.n(), 0));
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                       std::vector<int>* orig_of_new) {
  std::vector<int> new_id(g.n(), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) new_id[verts[i]] = static_cast<int>(i);
  Graph h = make_graph(static_cast<int>(verts.size()));
  for (std::size_t i = 0; i < verts.size(); ++i) {
    h.label[i] = g.label[verts[i]];
    for (int w : g.adj[verts[i]])
      if (new_id[w] > static_cast<int>(i)) add_edge(h, static_cast<int>(i), new_id[w]);
  }
  if (orig_of_new) *orig_of_new = verts;
  return h;
}

bool is_forest(const Graph& g) {
  // acyclic iff every component has exactly size-1 edges
  std::vector<char> seen(g.n(), 0);
  for (int s = 0; s < g.n(); ++s) {
    if (seen[s]) continue;
    int nverts = 0;
    std::size_t deg_sum = 0;
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      ++nverts;
      deg_sum += g.adj[u].size();
      for (int v : g.adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
    }
    if (deg_sum / 2 != static_cast<std::size_t>(nverts) - 1) return false;
  }
  return true;
}

}  // namespace twoclub
