#ifndef CFACTOR_GRAPH_HPP
#define CFACTOR_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cfactor {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an input graph is too large for an exhaustive routine.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

using Vertex = int;

/// An unordered pair {first, second}, normalized so that first < second.
struct Edge {
  Vertex first = 0;
  Vertex second = 0;

  Edge() = default;
  Edge(Vertex u, Vertex v) : first(u < v ? u : v), second(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Set of vertex indices in [0, 64), stored as a bitmask.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<Vertex> members) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet from_members(std::span<const Vertex> members) {
    VertexSet s;
    for (Vertex v : members) s.insert(v);
    return s;
  }
  /// {0, 1, ..., n-1}
  static constexpr VertexSet range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet singleton(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
  /// Smallest member; the set must be nonempty.
  constexpr Vertex first() const { return std::countr_zero(bits_); }
  /// Largest member; the set must be nonempty.
  constexpr Vertex last() const { return 63 - std::countl_zero(bits_); }

  void insert(Vertex v) {
    check_index(v);
    bits_ |= std::uint64_t{1} << v;
  }
  void erase(Vertex v) {
    check_index(v);
    bits_ &= ~(std::uint64_t{1} << v);
  }

  constexpr bool is_subset_of(VertexSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  std::vector<Vertex> members() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ | b.bits_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & b.bits_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.bits_ & ~b.bits_);
  }
  VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;

  /// Lexicographic order on the sorted member lists.
  static bool lex_less(VertexSet a, VertexSet b);

  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  static void check_index(Vertex v) {
    if (v < 0 || v >= kCapacity) {
      throw std::out_of_range("vertex index " + std::to_string(v) +
                              " outside [0, 64)");
    }
  }

  std::uint64_t bits_ = 0;
};

std::string to_string(VertexSet s);

/// Undirected simple graph on vertices 0..order()-1 (at most 64).
class Graph {
 public:
  static constexpr int kMaxOrder = VertexSet::kCapacity;

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);
  Graph(int order, std::initializer_list<Edge> edges)
      : Graph(order, std::span<const Edge>(edges.begin(), edges.size())) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const;

  bool adjacent(Vertex u, Vertex v) const {
    return adjacency_[u].contains(v);
  }
  VertexSet neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return adjacency_[v].size(); }
  VertexSet vertices() const { return VertexSet::range(order()); }

  /// Adds {u, v}; self-loops and out-of-range indices throw. Re-adding an
  /// existing edge is a no-op.
  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// Throws std::out_of_range unless every member of s is a vertex.
  void check_subset(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> adjacency_;
};

enum class GraphKind { Complete, Path, Cycle, Star, Empty };

/// Standard graph of the given kind. Path and cycle vertices are numbered in
/// traversal order; the star K_{1,size} has center 0.
Graph make_named_graph(GraphKind kind, int size);

inline Graph complete_graph(int m) { return make_named_graph(GraphKind::Complete, m); }
inline Graph path_graph(int k) { return make_named_graph(GraphKind::Path, k); }
inline Graph cycle_graph(int k) { return make_named_graph(GraphKind::Cycle, k); }
inline Graph star_graph(int r) { return make_named_graph(GraphKind::Star, r); }
inline Graph empty_graph(int m) { return make_named_graph(GraphKind::Empty, m); }

int min_degree(const Graph& g);

/// G[V - X] together with the original index of each retained vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;
};

InducedSubgraph delete_vertices(const Graph& g, VertexSet x);
InducedSubgraph induced_subgraph(const Graph& g, VertexSet keep);

/// Connected components of G, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
/// Connected components of G[within], in G's labeling.
std::vector<VertexSet> components_within(const Graph& g, VertexSet within);
bool is_connected(const Graph& g);

/// i(G - X)
int isolated_count(const Graph& g, VertexSet x);

VertexSet neighborhood_of_set(const Graph& g, VertexSet s);
bool is_independent(const Graph& g, VertexSet s);

/// An induced K_{1,r}: the center is adjacent to every leaf and the leaves
/// are pairwise non-adjacent.
struct K1rWitness {
  Vertex center = 0;
  std::vector<Vertex> leaves;
};

/// Returns an induced K_{1,r} if one exists. Requires r >= 2.
std::optional<K1rWitness> find_induced_star(const Graph& g, int r);
inline bool is_k1r_free(const Graph& g, int r) {
  return !find_induced_star(g, r).has_value();
}
bool is_valid_witness(const Graph& g, const K1rWitness& w, int r);

/// G1 v G2. Vertices of G1 keep their indices; G2 is shifted past them.
Graph join(const Graph& g1, const Graph& g2);
Graph disjoint_union(std::span<const Graph> parts);
inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}
/// m disjoint copies of g.
Graph copies(const Graph& g, int m);

/// Graph obtained by sending vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

inline constexpr int kCanonicalFormMaxOrder = 10;

/// Canonical label: the graph6 string of the relabeling whose upper-triangle
/// bit string (graph6 column order) is lexicographically smallest over all
/// vertex permutations. Two graphs get equal labels iff they are isomorphic.
/// Throws CapExceeded above kCanonicalFormMaxOrder vertices.
std::string canonical_form(const Graph& g);

}  // namespace cfactor

#endif  // CFACTOR_GRAPH_HPP
