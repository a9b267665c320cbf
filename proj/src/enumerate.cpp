#include "cfactor/enumerate.hpp"

#include <map>
#include <mutex>
#include <set>

#include "cfactor/graph_io.hpp"

namespace cfactor {

void validate(const SweepConfig& config) {
  if (config.min_vertices < 1 || config.max_vertices < config.min_vertices) {
    throw Error("sweep needs 1 <= min_vertices <= max_vertices");
  }
  if (config.max_vertices > kEnumerationMaxOrder) {
    throw CapExceeded("built-in enumeration is capped at " +
                      std::to_string(kEnumerationMaxOrder) +
                      " vertices; supply larger populations as graph6");
  }
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) g.add_edge(i, j);
    }
  }
  return g;
}

const std::vector<Graph>& isomorphism_classes(int n) {
  if (n < 1 || n > kEnumerationMaxOrder) {
    throw CapExceeded("isomorphism classes are available for 1 <= n <= " +
                      std::to_string(kEnumerationMaxOrder));
  }
  static std::mutex mutex;
  static std::map<int, std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (cache.empty()) cache.emplace(1, std::vector<Graph>{Graph(1)});
  for (int order = 2; order <= n; ++order) {
    if (cache.contains(order)) continue;
    // Every graph on `order` vertices is a smaller class plus one vertex.
    std::set<std::string> labels;
    for (const Graph& base : cache.at(order - 1)) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (order - 1)); ++nb) {
        Graph g = disjoint_union({base, Graph(1)});
        for (Vertex v : VertexSet(nb)) g.add_edge(v, order - 1);
        labels.insert(canonical_form(g));
      }
    }
    std::vector<Graph> classes;
    classes.reserve(labels.size());
    for (const std::string& label : labels) {
      classes.push_back(parse_graph6(label));
    }
    cache.emplace(order, std::move(classes));
  }
  return cache.at(n);
}

GraphPopulation::GraphPopulation(const SweepConfig& config) : config_(config) {
  validate(config);
  if (config.dedup) {
    for (int n = config.min_vertices; n <= config.max_vertices; ++n) {
      for (const Graph& g : isomorphism_classes(n)) {
        if (!config.connected_only || is_connected(g)) classes_.push_back(g);
      }
    }
    total_ = classes_.size();
    return;
  }
  for (int n = config.min_vertices; n <= config.max_vertices; ++n) {
    offsets_.push_back(total_);
    total_ += std::uint64_t{1} << (n * (n - 1) / 2);
  }
}

std::optional<Graph> GraphPopulation::at(std::uint64_t index) const {
  if (index >= total_) throw std::out_of_range("population index out of range");
  if (config_.dedup) return classes_[index];
  std::size_t slot = offsets_.size() - 1;
  while (offsets_[slot] > index) --slot;
  const int n = config_.min_vertices + static_cast<int>(slot);
  Graph g = graph_from_mask(n, index - offsets_[slot]);
  if (config_.connected_only && !is_connected(g)) return std::nullopt;
  return g;
}

std::vector<Graph> enumerate_graphs(const SweepConfig& config) {
  GraphPopulation population(config);
  std::vector<Graph> out;
  for (std::uint64_t i = 0; i < population.size(); ++i) {
    if (auto g = population.at(i)) out.push_back(std::move(*g));
  }
  return out;
}

}  // namespace cfactor
