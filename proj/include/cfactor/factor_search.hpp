#ifndef CFACTOR_FACTOR_SEARCH_HPP
#define CFACTOR_FACTOR_SEARCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor {

enum class ComponentKind { Path, Star };

/// One component of a factor. Paths list vertices in path order; stars list
/// the center first.
struct FactorComponent {
  ComponentKind kind = ComponentKind::Path;
  std::vector<Vertex> vertices;

  /// Edges of the component (consecutive pairs, or center-leaf pairs).
  std::vector<Edge> edges() const;
  friend bool operator==(const FactorComponent&, const FactorComponent&) = default;
};

/// Allowed component family: S_n stars, paths of order >= k, or {P_2, P_3}.
struct Family {
  enum class Kind { Stars, PathsAtLeast, P2P3 };
  Kind kind = Kind::Stars;
  int parameter = 2;

  static Family stars(int n) { return {Kind::Stars, n}; }
  static Family paths_at_least(int k) { return {Kind::PathsAtLeast, k}; }
  static Family p2p3() { return {Kind::P2P3, 0}; }

  /// Whether a component of this kind and order belongs to the family.
  bool admits(ComponentKind kind, int order) const;
  friend bool operator==(const Family&, const Family&) = default;
};

std::string to_string(const Family& f);

struct Factor {
  std::vector<FactorComponent> components;
  Family family;
};

struct SearchOptions {
  /// Largest graph order the partition search accepts.
  int max_order = 16;
};

/// Backtracking over the lowest-index uncovered vertex. Deterministic: the
/// same graph always yields the same first factor.
std::optional<Factor> find_factor(const Graph& g, const Family& family,
                                  const SearchOptions& options = {});

/// Stars K_{1,j}, 1 <= j <= n. Requires n >= 2.
std::optional<Factor> find_sn_factor(const Graph& g, int n,
                                     const SearchOptions& options = {});
/// Paths of order >= k, k in {2, 3}.
std::optional<Factor> find_pgek_factor(const Graph& g, int k,
                                       const SearchOptions& options = {});

/// A factor of `family` in which `e` is a component edge. Throws if e is not
/// an edge of G.
std::optional<Factor> find_factor_covering_edge(const Graph& g, const Family& family,
                                                Edge e, const SearchOptions& options = {});

/// True iff G has a factor of `family` and every edge lies in one. Throws on
/// disconnected input.
bool is_covered_bruteforce(const Graph& g, const Family& family,
                           const SearchOptions& options = {});

/// Checks the partition, adjacency, and family-membership invariants.
bool verify_factor(const Graph& g, const Factor& f);

}  // namespace cfactor

#endif  // CFACTOR_FACTOR_SEARCH_HPP
