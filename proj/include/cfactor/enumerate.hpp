#ifndef CFACTOR_ENUMERATE_HPP
#define CFACTOR_ENUMERATE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor {

inline constexpr int kEnumerationMaxOrder = 9;

struct SweepConfig {
  int min_vertices = 1;
  int max_vertices = 6;
  /// One representative per isomorphism class instead of every labeled graph.
  bool dedup = true;
  bool connected_only = false;
};

/// Throws on an invalid range or max_vertices above kEnumerationMaxOrder.
void validate(const SweepConfig& config);

/// Isomorphism class representatives on exactly n vertices, sorted by
/// canonical label. Built by adding a vertex with every possible neighborhood
/// to each class on n - 1 vertices. Results are cached per process.
const std::vector<Graph>& isomorphism_classes(int n);

/// Labeled graph on n vertices whose graph6 adjacency bits (column order)
/// are the low n(n-1)/2 bits of `mask`, bit 0 being the pair (0,1).
Graph graph_from_mask(int n, std::uint64_t mask);

/// Indexable, deterministic view of the graphs selected by a SweepConfig.
/// Labeled populations are generated on demand; at(i) is empty for graphs
/// removed by the connected_only filter.
class GraphPopulation {
 public:
  explicit GraphPopulation(const SweepConfig& config);

  std::uint64_t size() const { return total_; }
  std::optional<Graph> at(std::uint64_t index) const;

 private:
  SweepConfig config_;
  std::vector<Graph> classes_;              // dedup mode
  std::vector<std::uint64_t> offsets_;      // labeled mode, per order
  std::uint64_t total_ = 0;
};

/// Every graph the population yields, in order.
std::vector<Graph> enumerate_graphs(const SweepConfig& config);

}  // namespace cfactor

#endif  // CFACTOR_ENUMERATE_HPP
