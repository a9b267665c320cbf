#include "cfactor/graph_io.hpp"

#include <charconv>
#include <set>

namespace cfactor {

namespace {

constexpr int kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const int header = static_cast<unsigned char>(text[0]) - kBias;
  if (header < 0 || header > kGraph6MaxOrder) {
    throw ParseError("graph6: order byte outside single-byte range", 0);
  }
  const int n = header;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) {
    throw ParseError("graph6: truncated adjacency data", text.size());
  }
  if (text.size() > 1 + body) {
    throw ParseError("graph6: trailing bytes", 1 + body);
  }
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < body; ++i) {
    const int value = static_cast<unsigned char>(text[1 + i]) - kBias;
    if (value < 0 || value > 63) {
      throw ParseError("graph6: byte outside [63, 126]", 1 + i);
    }
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (value >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bit", 1 + i);
        continue;
      }
      if (set) {
        // Column order: (0,1), (0,2), (1,2), (0,3), ...
        int col = 1;
        std::size_t start = 0;
        while (start + col <= k) {
          start += col;
          ++col;
        }
        g.add_edge(static_cast<Vertex>(k - start), col);
      }
    }
  }
  return g;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw CapExceeded("graph6 writer supports at most 62 vertices");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | static_cast<int>(g.adjacent(i, j));
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> parse_graph6_lines(std::string_view text) {
  std::vector<Graph> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(e.what(), pos + e.offset());
      }
    }
    pos = end + 1;
  }
  return out;
}

namespace {

struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  // Next non-blank line, or false at end of input.
  bool next(std::string_view& line) {
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string_view::npos) return true;
    }
    return false;
  }
};

std::vector<long> parse_ints(std::string_view line, std::size_t line_no) {
  std::vector<long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long value = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), value);
    if (ec != std::errc{}) throw ParseError("edge list: expected integer", line_no);
    i = static_cast<std::size_t>(ptr - line.data());
    if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
      throw ParseError("edge list: malformed token", line_no);
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  LineReader reader{text};
  std::string_view line;
  if (!reader.next(line)) throw ParseError("edge list: missing header", 1);
  auto header = parse_ints(line, reader.line_no);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw ParseError("edge list: header must be \"n m\"", reader.line_no);
  }
  if (header[0] > Graph::kMaxOrder) {
    throw CapExceeded("edge list: order exceeds 64 vertices");
  }
  const int n = static_cast<int>(header[0]);
  Graph g(n);
  std::set<Edge> seen;
  for (long i = 0; i < header[1]; ++i) {
    if (!reader.next(line)) {
      throw ParseError("edge list: fewer edges than declared", reader.line_no + 1);
    }
    auto uv = parse_ints(line, reader.line_no);
    if (uv.size() != 2) throw ParseError("edge list: edge line must be \"u v\"", reader.line_no);
    if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n) {
      throw ParseError("edge list: vertex index out of range", reader.line_no);
    }
    if (uv[0] == uv[1]) throw ParseError("edge list: self-loop", reader.line_no);
    Edge e(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
    if (!seen.insert(e).second) {
      if (warnings) {
        warnings->push_back("duplicate edge " + std::to_string(e.first) + " " +
                            std::to_string(e.second) + " on line " +
                            std::to_string(reader.line_no));
      }
      continue;
    }
    g.add_edge(e.first, e.second);
  }
  if (reader.next(line)) throw ParseError("edge list: trailing content", reader.line_no);
  return g;
}

std::string write_edge_list(const Graph& g) {
  auto edges = g.edges();
  std::string out = std::to_string(g.order()) + " " + std::to_string(edges.size()) + "\n";
  for (const Edge& e : edges) {
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  }
  return out;
}

}  // namespace cfactor
