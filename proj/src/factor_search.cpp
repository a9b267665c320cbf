#include "cfactor/factor_search.hpp"

#include <algorithm>
#include <unordered_set>

namespace cfactor {

std::vector<Edge> FactorComponent::edges() const {
  std::vector<Edge> out;
  if (vertices.size() < 2) return out;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    out.emplace_back(kind == ComponentKind::Path ? vertices[i - 1] : vertices[0],
                     vertices[i]);
  }
  return out;
}

bool Family::admits(ComponentKind component, int order) const {
  switch (kind) {
    case Kind::Stars:
      return component == ComponentKind::Star && order >= 2 && order <= parameter + 1;
    case Kind::PathsAtLeast:
      return component == ComponentKind::Path && order >= std::max(parameter, 2);
    case Kind::P2P3:
      return component == ComponentKind::Path && (order == 2 || order == 3);
  }
  return false;
}

std::string to_string(const Family& f) {
  switch (f.kind) {
    case Family::Kind::Stars: return "S" + std::to_string(f.parameter);
    case Family::Kind::PathsAtLeast: return "P>=" + std::to_string(f.parameter);
    case Family::Kind::P2P3: return "{P2,P3}";
  }
  return "?";
}

namespace {

void check_family(const Family& f) {
  if (f.kind == Family::Kind::Stars && f.parameter < 2) {
    throw Error("star family needs n >= 2");
  }
  if (f.kind == Family::Kind::PathsAtLeast && f.parameter < 2) {
    throw Error("path family needs k >= 2");
  }
}

void check_order(const Graph& g, const SearchOptions& options) {
  if (g.order() > options.max_order) {
    throw CapExceeded("factor search cap is " + std::to_string(options.max_order) +
                      " vertices, graph has " + std::to_string(g.order()));
  }
}

FactorComponent star(Vertex center, VertexSet leaves) {
  FactorComponent c{ComponentKind::Star, {center}};
  for (Vertex v : leaves) c.vertices.push_back(v);
  return c;
}

// Calls fn(submask) for every nonempty submask of `mask` in increasing order
// with popcount in [lo, hi]; stops when fn returns true.
template <typename Fn>
bool for_each_submask(VertexSet mask, int lo, int hi, Fn&& fn) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  do {
    s = (s - m) & m;
    if (s == 0) break;
    const int c = std::popcount(s);
    if (c >= lo && c <= hi && fn(VertexSet(s))) return true;
  } while (s != 0);
  return false;
}

class FactorSearch {
 public:
  FactorSearch(const Graph& g, const Family& family) : g_(g), family_(family) {}

  bool solve(VertexSet uncovered) {
    if (uncovered.empty()) return true;
    if (failed_.contains(uncovered.bits())) return false;
    for (Vertex v : uncovered) {
      if (!g_.neighbors(v).intersects(uncovered)) {
        failed_.insert(uncovered.bits());
        return false;
      }
    }
    const Vertex v = uncovered.first();
    bool found = for_each_component(v, uncovered, [&](FactorComponent comp) {
      chosen_.push_back(comp);
      VertexSet used = VertexSet::from_members(comp.vertices);
      if (solve(uncovered - used)) return true;
      chosen_.pop_back();
      return false;
    });
    if (!found) failed_.insert(uncovered.bits());
    return found;
  }

  // Tries every family component in which `e` is a component edge, then
  // completes the rest of the graph.
  bool solve_covering(Edge e) {
    const VertexSet all = g_.vertices();
    auto attempt = [&](FactorComponent comp) {
      chosen_.push_back(comp);
      if (solve(all - VertexSet::from_members(comp.vertices))) return true;
      chosen_.pop_back();
      return false;
    };
    if (family_.kind == Family::Kind::Stars) {
      const int n = family_.parameter;
      const auto [a, b] = e;
      if (attempt(star(a, VertexSet::singleton(b)))) return true;
      if (for_each_submask(g_.neighbors(a) - VertexSet::singleton(b), 1, n - 1,
                           [&](VertexSet extra) {
                             return attempt(star(a, extra | VertexSet::singleton(b)));
                           })) {
        return true;
      }
      return for_each_submask(g_.neighbors(b) - VertexSet::singleton(a), 1, n - 1,
                              [&](VertexSet extra) {
                                return attempt(star(b, extra | VertexSet::singleton(a)));
                              });
    }
    // Paths through e: an arm from e.first away from e.second, and an arm
    // from e.second away from e.first.
    std::vector<Vertex> left{e.first};
    std::vector<Vertex> right{e.second};
    const VertexSet start = VertexSet{e.first, e.second};
    return extend_arm(left, start, all, [&](VertexSet used) {
      return extend_arm(right, used, all, [&](VertexSet) {
        return emit_path(left, right, attempt);
      });
    });
  }

  std::vector<FactorComponent> take() { return std::move(chosen_); }

 private:
  int max_path_order() const {
    return family_.kind == Family::Kind::P2P3 ? 3 : g_.order();
  }

  template <typename Fn>
  bool for_each_component(Vertex v, VertexSet uncovered, Fn&& fn) {
    if (family_.kind == Family::Kind::Stars) {
      const int n = family_.parameter;
      const VertexSet around = g_.neighbors(v) & uncovered;
      if (for_each_submask(around, 1, n, [&](VertexSet leaves) { return fn(star(v, leaves)); })) {
        return true;
      }
      // v as a leaf of a star with at least two leaves; K_2 was tried above.
      for (Vertex c : around) {
        VertexSet others = (g_.neighbors(c) & uncovered) - VertexSet::singleton(v);
        if (for_each_submask(others, 1, n - 1, [&](VertexSet leaves) {
              return fn(star(c, leaves | VertexSet::singleton(v)));
            })) {
          return true;
        }
      }
      return false;
    }
    // Paths through v: a right arm, then a left arm on the unused vertices.
    // Each unordered path is produced once: the reversal is skipped by
    // requiring the right arm to start below the left arm.
    std::vector<Vertex> right{v};
    std::vector<Vertex> left{v};
    const VertexSet start = VertexSet::singleton(v);
    return extend_arm(right, start, uncovered, [&](VertexSet used) {
      return extend_arm(left, used, uncovered, [&](VertexSet) {
        if (left.size() > 1 && (right.size() == 1 || right[1] > left[1])) return false;
        return emit_path(left, right, fn, /*shared_root=*/true);
      });
    });
  }

  // Visits every extension of `arm` (including the arm itself) by simple
  // paths inside `allowed` avoiding `used`.
  template <typename Fn>
  bool extend_arm(std::vector<Vertex>& arm, VertexSet used, VertexSet allowed, Fn&& fn) {
    if (fn(used)) return true;
    if (static_cast<int>(used.size()) >= max_path_order()) return false;
    for (Vertex w : (g_.neighbors(arm.back()) & allowed) - used) {
      arm.push_back(w);
      if (extend_arm(arm, used | VertexSet::singleton(w), allowed, fn)) return true;
      arm.pop_back();
    }
    return false;
  }

  // Path = reverse(left) followed by right; with a shared root the first
  // vertex of `right` repeats the first of `left` and is dropped.
  template <typename Fn>
  bool emit_path(const std::vector<Vertex>& left, const std::vector<Vertex>& right, Fn&& fn,
                 bool shared_root = false) {
    FactorComponent comp{ComponentKind::Path, {left.rbegin(), left.rend()}};
    comp.vertices.insert(comp.vertices.end(), right.begin() + (shared_root ? 1 : 0),
                         right.end());
    if (!family_.admits(ComponentKind::Path, static_cast<int>(comp.vertices.size()))) {
      return false;
    }
    return fn(std::move(comp));
  }

  const Graph& g_;
  Family family_;
  std::unordered_set<std::uint64_t> failed_;
  std::vector<FactorComponent> chosen_;
};

}  // namespace

std::optional<Factor> find_factor(const Graph& g, const Family& family,
                                  const SearchOptions& options) {
  check_family(family);
  check_order(g, options);
  FactorSearch search(g, family);
  if (!search.solve(g.vertices())) return std::nullopt;
  return Factor{search.take(), family};
}

std::optional<Factor> find_sn_factor(const Graph& g, int n, const SearchOptions& options) {
  return find_factor(g, Family::stars(n), options);
}

std::optional<Factor> find_pgek_factor(const Graph& g, int k, const SearchOptions& options) {
  if (k != 2 && k != 3) throw Error("path factor search supports k = 2 or k = 3");
  return find_factor(g, Family::paths_at_least(k), options);
}

std::optional<Factor> find_factor_covering_edge(const Graph& g, const Family& family, Edge e,
                                                const SearchOptions& options) {
  check_family(family);
  check_order(g, options);
  if (e.first < 0 || e.second >= g.order() || !g.adjacent(e.first, e.second)) {
    throw Error("{" + std::to_string(e.first) + "," + std::to_string(e.second) +
                "} is not an edge of the graph");
  }
  FactorSearch search(g, family);
  if (!search.solve_covering(e)) return std::nullopt;
  return Factor{search.take(), family};
}

bool is_covered_bruteforce(const Graph& g, const Family& family, const SearchOptions& options) {
  if (!is_connected(g)) throw Error("covered-graph search expects a connected graph");
  if (!find_factor(g, family, options)) return false;
  for (const Edge& e : g.edges()) {
    if (!find_factor_covering_edge(g, family, e, options)) return false;
  }
  return true;
}

bool verify_factor(const Graph& g, const Factor& f) {
  VertexSet covered;
  for (const FactorComponent& c : f.components) {
    const int order = static_cast<int>(c.vertices.size());
    if (!f.family.admits(c.kind, order)) return false;
    for (Vertex v : c.vertices) {
      if (v < 0 || v >= g.order() || covered.contains(v)) return false;
      covered.insert(v);
    }
    for (const Edge& e : c.edges()) {
      if (!g.adjacent(e.first, e.second)) return false;
    }
  }
  return covered == g.vertices();
}

}  // namespace cfactor
