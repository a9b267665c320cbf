#ifndef CFACTOR_GRAPH_IO_HPP
#define CFACTOR_GRAPH_IO_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor {

/// Malformed graph6 or edge-list input. offset() is the byte offset of the
/// offending character for graph6, or the 1-based line number for edge lists.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr int kGraph6MaxOrder = 62;

/// Parses one graph6 line (single-byte order header, n <= 62). A trailing
/// newline is tolerated; any other trailing byte is an error.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Parses every non-empty line of a graph6 file.
std::vector<Graph> parse_graph6_lines(std::string_view text);

/// "n m" header followed by m lines "u v". Duplicate edges are collapsed and
/// reported through `warnings` when it is non-null.
Graph parse_edge_list(std::string_view text,
                      std::vector<std::string>* warnings = nullptr);
std::string write_edge_list(const Graph& g);

}  // namespace cfactor

#endif  // CFACTOR_GRAPH_IO_HPP
