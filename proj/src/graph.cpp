#include "cfactor/graph.hpp"

#include <algorithm>
#include <numeric>

#include "cfactor/graph_io.hpp"

namespace cfactor {

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
    if (*ia != *ib) return *ia < *ib;
  }
  return ia == a.end() && ib != b.end();
}

std::string to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw CapExceeded("graph order " + std::to_string(order) +
                      " outside [0, 64]");
  }
  adjacency_.assign(order, VertexSet{});
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) add_edge(e.first, e.second);
}

int Graph::size() const {
  int twice = 0;
  for (VertexSet nb : adjacency_) twice += nb.size();
  return twice / 2;
}

void Graph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= order() || v >= order()) {
    throw std::out_of_range("edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} outside graph of order " +
                            std::to_string(order()));
  }
  if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
  adjacency_[u].insert(v);
  adjacency_[v].insert(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  adjacency_.at(u).erase(v);
  adjacency_.at(v).erase(u);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

void Graph::check_subset(VertexSet s) const {
  if (!s.is_subset_of(vertices())) {
    throw std::out_of_range("vertex set " + to_string(s) +
                            " not contained in graph of order " +
                            std::to_string(order()));
  }
}

Graph make_named_graph(GraphKind kind, int size) {
  if (size < 1) throw Error("named graph size must be at least 1");
  switch (kind) {
    case GraphKind::Complete: {
      Graph g(size);
      for (Vertex u = 0; u < size; ++u)
        for (Vertex v = u + 1; v < size; ++v) g.add_edge(u, v);
      return g;
    }
    case GraphKind::Path: {
      Graph g(size);
      for (Vertex v = 0; v + 1 < size; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case GraphKind::Cycle: {
      if (size < 3) throw Error("cycle needs at least 3 vertices");
      Graph g = make_named_graph(GraphKind::Path, size);
      g.add_edge(size - 1, 0);
      return g;
    }
    case GraphKind::Star: {
      Graph g(size + 1);
      for (Vertex v = 1; v <= size; ++v) g.add_edge(0, v);
      return g;
    }
    case GraphKind::Empty:
      return Graph(size);
  }
  throw Error("unknown graph kind");
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error("minimum degree of the empty graph is undefined");
  int best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep) {
  g.check_subset(keep);
  InducedSubgraph out{Graph(keep.size()), keep.members()};
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) index[out.original[i]] = static_cast<Vertex>(i);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    Vertex u = out.original[i];
    for (Vertex w : g.neighbors(u) & keep) {
      if (w > u) out.graph.add_edge(static_cast<Vertex>(i), index[w]);
    }
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet x) {
  g.check_subset(x);
  return induced_subgraph(g, g.vertices() - x);
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::singleton(rest.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      next = (next & within) - comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected(const Graph& g) {
  return components(g).size() == 1;
}

int isolated_count(const Graph& g, VertexSet x) {
  g.check_subset(x);
  int count = 0;
  for (Vertex v : g.vertices() - x) {
    if ((g.neighbors(v) - x).empty()) ++count;
  }
  return count;
}

VertexSet neighborhood_of_set(const Graph& g, VertexSet s) {
  g.check_subset(s);
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

bool is_independent(const Graph& g, VertexSet s) {
  g.check_subset(s);
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

namespace {

// Extends `chosen` to an independent set of size `need` using vertices of
// `pool` (all greater than anything already chosen).
bool extend_independent(const Graph& g, VertexSet pool, int need,
                        std::vector<Vertex>& chosen) {
  if (need == 0) return true;
  if (pool.size() < need) return false;
  for (Vertex v : pool) {
    chosen.push_back(v);
    VertexSet rest = pool - VertexSet::range(v + 1) - g.neighbors(v);
    if (extend_independent(g, rest, need - 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<K1rWitness> find_induced_star(const Graph& g, int r) {
  if (r < 2) throw Error("induced star search needs r >= 2");
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> leaves;
    if (extend_independent(g, g.neighbors(v), r, leaves)) {
      return K1rWitness{v, std::move(leaves)};
    }
  }
  return std::nullopt;
}

bool is_valid_witness(const Graph& g, const K1rWitness& w, int r) {
  if (static_cast<int>(w.leaves.size()) != r) return false;
  if (w.center < 0 || w.center >= g.order()) return false;
  VertexSet leaves;
  for (Vertex leaf : w.leaves) {
    if (leaf < 0 || leaf >= g.order() || leaves.contains(leaf)) return false;
    leaves.insert(leaf);
  }
  return !leaves.contains(w.center) && leaves.is_subset_of(g.neighbors(w.center)) &&
         is_independent(g, leaves);
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.order();
  Graph out(n1 + g2.order());
  for (const Edge& e : g1.edges()) out.add_edge(e.first, e.second);
  for (const Edge& e : g2.edges()) out.add_edge(e.first + n1, e.second + n1);
  for (Vertex u = 0; u < n1; ++u)
    for (Vertex v = 0; v < g2.order(); ++v) out.add_edge(u, v + n1);
  return out;
}

Graph disjoint_union(std::span<const Graph> parts) {
  int total = 0;
  for (const Graph& p : parts) total += p.order();
  Graph out(total);
  int offset = 0;
  for (const Graph& p : parts) {
    for (const Edge& e : p.edges()) out.add_edge(e.first + offset, e.second + offset);
    offset += p.order();
  }
  return out;
}

Graph copies(const Graph& g, int m) {
  std::vector<Graph> parts(static_cast<std::size_t>(std::max(m, 0)), g);
  return disjoint_union(parts);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    throw Error("permutation length does not match graph order");
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.first], perm[e.second]);
  return out;
}

namespace {

// Branch-and-bound over vertex orders. Position j is filled by a vertex whose
// column (adjacency to positions 0..j-1, position 0 most significant) is
// minimal; any other choice yields a strictly larger bit string. Candidates
// that are twins of an already explored candidate are skipped, since the
// transposition swapping them is an automorphism fixing the placed prefix.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g), n_(g.order()), order_(n_), best_(n_, 0), current_(n_, 0) {}

  std::vector<Vertex> run() {
    have_best_ = false;
    place(0, g_.vertices());
    return best_order_;
  }

 private:
  std::uint32_t column(Vertex w, int placed) const {
    std::uint32_t col = 0;
    for (int i = 0; i < placed; ++i) {
      col = (col << 1) | static_cast<std::uint32_t>(g_.adjacent(order_[i], w));
    }
    return col;
  }

  bool twins(Vertex u, Vertex w) const {
    VertexSet pair = VertexSet::singleton(u) | VertexSet::singleton(w);
    return (g_.neighbors(u) - pair) == (g_.neighbors(w) - pair);
  }

  bool prefix_worse_than_best(int len) const {
    return std::lexicographical_compare(best_.begin(), best_.begin() + len,
                                        current_.begin(), current_.begin() + len);
  }

  void place(int pos, VertexSet unplaced) {
    if (pos == n_) {
      if (!have_best_ || current_ < best_) {
        best_ = current_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::uint32_t min_col = ~std::uint32_t{0};
    for (Vertex w : unplaced) min_col = std::min(min_col, column(w, pos));
    current_[pos] = min_col;
    if (have_best_ && prefix_worse_than_best(pos + 1)) return;

    std::vector<Vertex> explored;
    for (Vertex w : unplaced) {
      if (column(w, pos) != min_col) continue;
      bool redundant = false;
      for (Vertex e : explored) {
        if (twins(e, w)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      explored.push_back(w);
      order_[pos] = w;
      current_[pos] = min_col;
      place(pos + 1, unplaced - VertexSet::singleton(w));
      if (have_best_ && prefix_worse_than_best(pos + 1)) return;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> current_;
  std::vector<Vertex> best_order_;
  bool have_best_ = false;
};

}  // namespace

std::string canonical_form(const Graph& g) {
  if (g.order() > kCanonicalFormMaxOrder) {
    throw CapExceeded("canonical_form supports at most " +
                      std::to_string(kCanonicalFormMaxOrder) + " vertices, got " +
                      std::to_string(g.order()));
  }
  CanonicalSearch search(g);
  std::vector<Vertex> order = search.run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
  return write_graph6(relabel(g, perm));
}

}  // namespace cfactor
