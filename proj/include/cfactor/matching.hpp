#ifndef CFACTOR_MATCHING_HPP
#define CFACTOR_MATCHING_HPP

#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor {

/// Set of pairwise vertex-disjoint edges, sorted lexicographically.
using Matching = std::vector<Edge>;

/// Size of a maximum matching of G[within] (Edmonds' blossom algorithm).
int matching_number(const Graph& g, VertexSet within);
inline int matching_number(const Graph& g) {
  return matching_number(g, g.vertices());
}

/// A maximum matching of G. Among all maximum matchings, returns the one whose
/// sorted edge list is lexicographically smallest.
Matching max_matching(const Graph& g);

bool is_matching(const Graph& g, const Matching& m);

bool has_perfect_matching(const Graph& g, VertexSet within);
inline bool has_perfect_matching(const Graph& g) {
  return has_perfect_matching(g, g.vertices());
}

/// True iff G[within] - v has a perfect matching for every v in `within`.
/// K_1 is factor-critical; the empty graph is not.
bool is_factor_critical(const Graph& g, VertexSet within);
inline bool is_factor_critical(const Graph& g) {
  return is_factor_critical(g, g.vertices());
}

}  // namespace cfactor

#endif  // CFACTOR_MATCHING_HPP
