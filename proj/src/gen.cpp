#include "twoclub/gen.hpp"

#include <set>
#include <stdexcept>

namespace twoclub {

Graph random_graph(int n, double p, std::uint64_t seed) {
  if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("bad G(n,p) parameters");
  SplitMix64 rng(seed);
  Graph g = make_graph(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.next_unit() < p) add_edge(g, u, v);
  return g;
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("tree needs at least one vertex");
  Graph g = make_graph(n);
  if (n == 1) return g;
  if (n == 2) {
    add_edge(g, 0, 1);
    return g;
  }
  SplitMix64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (auto& s : pruefer) s = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));

  std::vector<int> deg(n, 1);
  for (int s : pruefer) ++deg[s];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int s : pruefer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    add_edge(g, leaf, s);
    if (--deg[s] == 1) leaves.insert(s);
  }
  int a = *leaves.begin();
  int b = *std::next(leaves.begin());
  add_edge(g, a, b);
  return g;
}

}  // namespace twoclub
