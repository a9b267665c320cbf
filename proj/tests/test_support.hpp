// Fixtures and brute-force oracles shared by the test binaries. Nothing here
// calls the matching or factor-analysis code it is used to check.
#ifndef CFACTOR_TEST_SUPPORT_HPP
#define CFACTOR_TEST_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor::testing {

/// C_3 with one pendant per triangle vertex (6 vertices, 6 edges).
inline Graph net_graph() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
}

/// Components of G[within] by plain DFS over the adjacency relation.
inline std::vector<std::vector<Vertex>> dfs_components(const Graph& g,
                                                       const std::vector<bool>& within) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (!within[s] || seen[s]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w = 0; w < n; ++w) {
        if (within[w] && !seen[w] && g.adjacent(v, w)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    out.push_back(comp);
  }
  return out;
}

/// Tutte-Berge: n - 2 nu(G) = max over X of (odd(G - X) - |X|).
inline int tutte_berge_matching_number(const Graph& g) {
  const int n = g.order();
  int best_deficiency = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    std::vector<bool> within(n);
    int removed = 0;
    for (Vertex v = 0; v < n; ++v) {
      within[v] = !((x >> v) & 1);
      removed += !within[v];
    }
    int odd = 0;
    for (const auto& comp : dfs_components(g, within)) odd += comp.size() % 2;
    best_deficiency = std::max(best_deficiency, odd - removed);
  }
  return (n - best_deficiency) / 2;
}

/// Largest matching by exhaustive recursion over the edge list.
inline int enumerate_matching_number(const Graph& g) {
  const auto edges = g.edges();
  int best = 0;
  std::vector<bool> used(g.order(), false);
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    best = std::max(best, size);
    for (std::size_t j = i; j < edges.size(); ++j) {
      auto [u, v] = edges[j];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = true;
      self(self, j + 1, size + 1);
      used[u] = used[v] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

/// Perfect matching of G restricted to `keep`, by enumeration.
inline bool enumerate_perfect_matching(const Graph& g, std::vector<bool> keep) {
  Vertex first = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[v]) {
      first = v;
      break;
    }
  }
  if (first < 0) return true;
  keep[first] = false;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (keep[w] && g.adjacent(first, w)) {
      keep[w] = false;
      if (enumerate_perfect_matching(g, keep)) return true;
      keep[w] = true;
    }
  }
  return false;
}

inline bool enumerate_factor_critical(const Graph& g, const std::vector<bool>& keep) {
  bool any = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!keep[v]) continue;
    any = true;
    std::vector<bool> rest = keep;
    rest[v] = false;
    if (!enumerate_perfect_matching(g, rest)) return false;
  }
  return any;
}

/// Definition-level sun test for a connected graph: K_1, K_2, or some choice
/// of pendant set U of size n/2 such that each u in U has exactly one
/// neighbor, these neighbors are distinct and outside U, and V - U induces a
/// factor-critical graph.
inline bool brute_force_is_sun(const Graph& g) {
  const int n = g.order();
  if (n == 1) return true;
  if (n == 2) return g.adjacent(0, 1);
  if (n % 2 != 0) return false;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n); ++u) {
    if (std::popcount(u) != n / 2) continue;
    std::vector<bool> in_u(n);
    for (Vertex v = 0; v < n; ++v) in_u[v] = (u >> v) & 1;
    std::vector<int> hits(n, 0);
    bool ok = true;
    for (Vertex p = 0; p < n && ok; ++p) {
      if (!in_u[p]) continue;
      if (g.degree(p) != 1) {
        ok = false;
        break;
      }
      Vertex w = g.neighbors(p).first();
      if (in_u[w] || hits[w]++) ok = false;
    }
    if (!ok) continue;
    std::vector<bool> base(n);
    for (Vertex v = 0; v < n; ++v) base[v] = !in_u[v];
    if (enumerate_factor_critical(g, base)) return true;
  }
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline std::vector<Vertex> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace cfactor::testing

#endif  // CFACTOR_TEST_SUPPORT_HPP
