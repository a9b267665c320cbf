#include "cfactor/factor_analysis.hpp"

#include <algorithm>
#include <unordered_map>

#include "cfactor/matching.hpp"

namespace cfactor {

std::string to_string(SunKind kind) {
  switch (kind) {
    case SunKind::K1: return "K1";
    case SunKind::K2: return "K2";
    case SunKind::BigSun: return "big-sun";
  }
  return "?";
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::SnFactor: return "sn-factor";
    case Criterion::SnFactorIndependent: return "sn-factor-independent";
    case Criterion::P2Factor: return "p2-factor";
    case Criterion::P3Factor: return "p3-factor";
    case Criterion::P2Covered: return "p2-covered";
    case Criterion::P3Covered: return "p3-covered";
    case Criterion::P2P3Covered: return "p2p3-covered";
  }
  return "?";
}

std::optional<SunDecomposition> sun_decomposition(const Graph& g, VertexSet component) {
  g.check_subset(component);
  const int size = component.size();
  if (size == 1) return SunDecomposition{SunKind::K1, {}, {}};
  if (size == 2) {
    if (!g.adjacent(component.first(), component.last())) return std::nullopt;
    return SunDecomposition{SunKind::K2, {}, {}};
  }
  if (size == 0 || size % 2 != 0) return std::nullopt;

  // In a big sun the pendant vertices are exactly the degree-1 vertices: a
  // factor-critical base of order >= 3 has minimum degree >= 2.
  VertexSet pendants;
  for (Vertex v : component) {
    if ((g.neighbors(v) & component).size() == 1) pendants.insert(v);
  }
  if (pendants.size() != size / 2) return std::nullopt;
  const VertexSet base = component - pendants;

  SunDecomposition d{SunKind::BigSun, base, {}};
  VertexSet hit;
  for (Vertex u : pendants) {
    const Vertex v = (g.neighbors(u) & component).first();
    if (!base.contains(v) || hit.contains(v)) return std::nullopt;
    hit.insert(v);
    d.pendants.emplace_back(v, u);
  }
  if (!is_factor_critical(g, base)) return std::nullopt;
  std::sort(d.pendants.begin(), d.pendants.end());
  return d;
}

std::optional<SunDecomposition> is_sun(const Graph& g) {
  if (!is_connected(g)) throw Error("is_sun expects a connected graph");
  return sun_decomposition(g, g.vertices());
}

bool is_valid_sun_decomposition(const Graph& g, VertexSet component,
                                const SunDecomposition& d) {
  switch (d.kind) {
    case SunKind::K1:
      return component.size() == 1 && d.base.empty() && d.pendants.empty();
    case SunKind::K2:
      return component.size() == 2 && d.base.empty() && d.pendants.empty() &&
             g.adjacent(component.first(), component.last());
    case SunKind::BigSun:
      break;
  }
  if (d.base.size() < 3 || d.base.size() % 2 == 0) return false;
  if (static_cast<int>(d.pendants.size()) != d.base.size()) return false;
  VertexSet bases;
  VertexSet leaves;
  for (auto [v, u] : d.pendants) {
    if (!d.base.contains(v) || bases.contains(v)) return false;
    if (d.base.contains(u) || leaves.contains(u) || !component.contains(u)) return false;
    if ((g.neighbors(u) & component) != VertexSet::singleton(v)) return false;
    bases.insert(v);
    leaves.insert(u);
  }
  return bases == d.base && (d.base | leaves) == component &&
         is_factor_critical(g, d.base);
}

namespace {

// Sun status of components, memoized by vertex set over one decider call.
class SunCache {
 public:
  explicit SunCache(const Graph& g) : g_(g) {}

  bool is_sun(VertexSet component) {
    auto [it, inserted] = cache_.try_emplace(component.bits(), false);
    if (inserted) it->second = sun_decomposition(g_, component).has_value();
    return it->second;
  }

  int count(VertexSet x) {
    int total = 0;
    for (VertexSet comp : components_within(g_, g_.vertices() - x)) {
      if (is_sun(comp)) ++total;
    }
    return total;
  }

  bool has_non_sun_component(VertexSet x) {
    for (VertexSet comp : components_within(g_, g_.vertices() - x)) {
      if (!is_sun(comp)) return true;
    }
    return false;
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, bool> cache_;
};

bool has_nontrivial_component(const Graph& g, VertexSet x) {
  for (VertexSet comp : components_within(g, g.vertices() - x)) {
    if (comp.size() >= 2) return true;
  }
  return false;
}

ViolationWitness evaluate(const Graph& g, Criterion criterion, VertexSet set, int n,
                          SunCache& suns) {
  ViolationWitness w{set, 0, 0, std::nullopt};
  const int k = set.size();
  switch (criterion) {
    case Criterion::SnFactor:
      w.deficiency = isolated_count(g, set);
      w.bound = n * k;
      break;
    case Criterion::SnFactorIndependent:
      w.deficiency = k;
      w.bound = n * neighborhood_of_set(g, set).size();
      break;
    case Criterion::P2Factor:
      w.deficiency = isolated_count(g, set);
      w.bound = 2 * k;
      break;
    case Criterion::P3Factor:
      w.deficiency = suns.count(set);
      w.bound = 2 * k;
      break;
    case Criterion::P2Covered: {
      const int eps = epsilon1(g, set);
      w.deficiency = isolated_count(g, set);
      w.bound = 2 * k - eps;
      w.epsilon = eps;
      break;
    }
    case Criterion::P3Covered: {
      int eps = 0;
      if (!set.empty()) {
        if (!is_independent(g, set)) {
          eps = 2;
        } else if (suns.has_non_sun_component(set)) {
          eps = 1;
        }
      }
      w.deficiency = suns.count(set);
      w.bound = 2 * k - eps;
      w.epsilon = eps;
      break;
    }
    case Criterion::P2P3Covered: {
      const int eps = epsilon3(g, set);
      w.deficiency = isolated_count(g, set);
      w.bound = 2 * k - eps;
      w.epsilon = eps;
      break;
    }
  }
  return w;
}

bool uses_star_parameter(Criterion c) {
  return c == Criterion::SnFactor || c == Criterion::SnFactorIndependent;
}

bool is_covered_criterion(Criterion c) {
  return c == Criterion::P2Covered || c == Criterion::P3Covered ||
         c == Criterion::P2P3Covered;
}

}  // namespace

int sun_count(const Graph& g, VertexSet x) {
  g.check_subset(x);
  SunCache suns(g);
  return suns.count(x);
}

int epsilon1(const Graph& g, VertexSet s) {
  if (s.empty()) return 0;
  if (!is_independent(g, s)) return 2;
  return has_nontrivial_component(g, s) ? 1 : 0;
}

int epsilon2(const Graph& g, VertexSet s) {
  if (s.empty()) return 0;
  if (!is_independent(g, s)) return 2;
  SunCache suns(g);
  return suns.has_non_sun_component(s) ? 1 : 0;
}

int epsilon3(const Graph& g, VertexSet s) {
  if (s.empty()) return 0;
  return is_independent(g, s) ? 0 : 3;
}

ViolationWitness evaluate_criterion(const Graph& g, Criterion criterion, VertexSet set,
                                    int n) {
  g.check_subset(set);
  SunCache suns(g);
  return evaluate(g, criterion, set, n, suns);
}

bool revalidate(const Graph& g, Criterion criterion, const ViolationWitness& w, int n) {
  if (!w.set.is_subset_of(g.vertices())) return false;
  if (criterion == Criterion::SnFactorIndependent && !is_independent(g, w.set)) {
    return false;
  }
  return w.violates() && evaluate_criterion(g, criterion, w.set, n) == w;
}

Decision decide(const Graph& g, Criterion criterion, int n, const DecideOptions& options) {
  if (uses_star_parameter(criterion) && n < 2) {
    throw Error("star factor parameter n must be at least 2");
  }
  if (g.order() > options.max_order) {
    throw CapExceeded("subset enumeration cap is " + std::to_string(options.max_order) +
                      " vertices, graph has " + std::to_string(g.order()));
  }
  if (is_covered_criterion(criterion) && !is_connected(g)) {
    throw Error(to_string(criterion) + " is only defined for connected graphs");
  }

  SunCache suns(g);
  const int order = g.order();
  std::vector<Vertex> idx;
  for (int k = 0; k <= order; ++k) {
    // k-subsets of {0..order-1} in lexicographic order.
    idx.resize(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
      VertexSet set = VertexSet::from_members(idx);
      if (criterion != Criterion::SnFactorIndependent || is_independent(g, set)) {
        ViolationWitness w = evaluate(g, criterion, set, n, suns);
        if (w.violates()) return Decision{false, w};
      }
      int i = k - 1;
      while (i >= 0 && idx[i] == order - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return Decision{true, std::nullopt};
}

Decision has_sn_factor(const Graph& g, int n, const DecideOptions& options) {
  return decide(g, Criterion::SnFactor, n, options);
}

Decision has_sn_factor_independent_form(const Graph& g, int n,
                                        const DecideOptions& options) {
  return decide(g, Criterion::SnFactorIndependent, n, options);
}

Decision has_p2_factor(const Graph& g, const DecideOptions& options) {
  return decide(g, Criterion::P2Factor, 2, options);
}

Decision has_p3_factor(const Graph& g, const DecideOptions& options) {
  return decide(g, Criterion::P3Factor, 2, options);
}

Decision is_p2_covered(const Graph& g, const DecideOptions& options) {
  return decide(g, Criterion::P2Covered, 2, options);
}

Decision is_p3_covered(const Graph& g, const DecideOptions& options) {
  return decide(g, Criterion::P3Covered, 2, options);
}

Decision is_p2p3_covered(const Graph& g, const DecideOptions& options) {
  return decide(g, Criterion::P2P3Covered, 2, options);
}

}  // namespace cfactor
