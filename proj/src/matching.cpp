#include "cfactor/matching.hpp"

#include <algorithm>
#include <deque>

namespace cfactor {

namespace {

// Edmonds' blossom algorithm with explicit base tracking (O(n^3)).
class Blossom {
 public:
  Blossom(const Graph& g, VertexSet within)
      : g_(g), within_(within), n_(g.order()),
        mate_(n_, -1), parent_(n_, -1), base_(n_), used_(n_), in_blossom_(n_) {}

  int run() {
    int size = 0;
    // Greedy warm start keeps the augmenting phase short.
    for (Vertex v : within_) {
      if (mate_[v] != -1) continue;
      for (Vertex w : g_.neighbors(v) & within_) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          ++size;
          break;
        }
      }
    }
    for (Vertex root : within_) {
      if (mate_[root] != -1) continue;
      Vertex end = find_augmenting_path(root);
      if (end == -1) continue;
      ++size;
      while (end != -1) {
        Vertex pv = parent_[end];
        Vertex next = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = next;
      }
    }
    return size;
  }

 private:
  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = true;
      in_blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v) & within_) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          Vertex cur_base = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (Vertex i : within_) {
            if (in_blossom_[base_[i]]) {
              base_[i] = cur_base;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexSet within_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> used_;
  std::vector<bool> in_blossom_;
};

}  // namespace

int matching_number(const Graph& g, VertexSet within) {
  g.check_subset(within);
  return Blossom(g, within).run();
}

Matching max_matching(const Graph& g) {
  // Self-reduction: take each edge, in lexicographic order, whenever some
  // maximum matching of the remaining graph contains it.
  Matching out;
  VertexSet free = g.vertices();
  int remaining = matching_number(g, free);
  for (const Edge& e : g.edges()) {
    if (remaining == 0) break;
    if (!free.contains(e.first) || !free.contains(e.second)) continue;
    VertexSet rest = free - VertexSet{e.first, e.second};
    if (matching_number(g, rest) == remaining - 1) {
      out.push_back(e);
      free = rest;
      --remaining;
    }
  }
  return out;
}

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet covered;
  for (const Edge& e : m) {
    if (e.first < 0 || e.second >= g.order() || e.first == e.second) return false;
    if (!g.adjacent(e.first, e.second)) return false;
    if (covered.contains(e.first) || covered.contains(e.second)) return false;
    covered |= VertexSet{e.first, e.second};
  }
  return true;
}

bool has_perfect_matching(const Graph& g, VertexSet within) {
  if (within.size() % 2 != 0) return false;
  return 2 * matching_number(g, within) == within.size();
}

bool is_factor_critical(const Graph& g, VertexSet within) {
  g.check_subset(within);
  if (within.empty() || within.size() % 2 == 0) return false;
  for (Vertex v : within) {
    if (!has_perfect_matching(g, within - VertexSet::singleton(v))) return false;
  }
  return true;
}

}  // namespace cfactor
