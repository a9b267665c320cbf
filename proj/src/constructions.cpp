#include "cfactor/constructions.hpp"

#include "cfactor/matching.hpp"

namespace cfactor {

std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return "T1-1";
    case TheoremId::T1_2: return "T1-2";
    case TheoremId::T2_1: return "T2-1";
    case TheoremId::T2_2: return "T2-2";
    case TheoremId::T2_3: return "T2-3";
    case TheoremId::C1_1: return "C1-1";
  }
  return "?";
}

TheoremId parse_theorem_id(const std::string& text) {
  for (TheoremId id : {TheoremId::T1_1, TheoremId::T1_2, TheoremId::T2_1, TheoremId::T2_2,
                       TheoremId::T2_3, TheoremId::C1_1}) {
    if (to_string(id) == text) return id;
  }
  throw Error("unknown theorem id '" + text + "'");
}

bool is_covered_theorem(TheoremId id) {
  return id == TheoremId::T2_1 || id == TheoremId::T2_2 || id == TheoremId::T2_3;
}

int degree_bound(TheoremId id, int r, int n) {
  if (r < 3) throw Error("r must be at least 3");
  switch (id) {
    case TheoremId::T1_1:
      if (n < 2) throw Error("n must be at least 2");
      return (r + n - 2) / n;
    case TheoremId::T1_2:
    case TheoremId::T2_1:
      return r / 2 + 1;
    case TheoremId::T2_2:
      return r / 2 + 2;
    case TheoremId::T2_3:
      return (r + 1) / 2 + 1;
    case TheoremId::C1_1:
      return r / 2;
  }
  throw Error("unknown theorem id");
}

Criterion conclusion_criterion(TheoremId id) {
  switch (id) {
    case TheoremId::T1_1: return Criterion::SnFactor;
    case TheoremId::T1_2: return Criterion::P3Factor;
    case TheoremId::T2_1: return Criterion::P2Covered;
    case TheoremId::T2_2: return Criterion::P3Covered;
    case TheoremId::T2_3: return Criterion::P2P3Covered;
    case TheoremId::C1_1: return Criterion::P2Factor;
  }
  throw Error("unknown theorem id");
}

namespace {

struct JoinShape {
  bool k2_side;  // (r-1)K_2 instead of (r-1)K_1
  int clique;    // order of the clique side
};

JoinShape shape_of(TheoremId id, int r, int n) {
  switch (id) {
    case TheoremId::T1_1: return {false, degree_bound(id, r, n) - 1};
    case TheoremId::T1_2: return {true, r / 2 - 1};
    case TheoremId::T2_1: return {false, r / 2};
    case TheoremId::T2_2: return {true, r / 2};
    case TheoremId::T2_3: return {false, (r + 1) / 2};
    case TheoremId::C1_1: break;
  }
  throw Error("no sharpness construction for " + to_string(id));
}

}  // namespace

int sharpness_order(TheoremId id, int r, int n) {
  if (r < 3) throw Error("r must be at least 3");
  JoinShape shape = shape_of(id, r, n);
  return (shape.k2_side ? 2 : 1) * (r - 1) + shape.clique;
}

SharpnessCase sharpness_graph(TheoremId id, int r, std::optional<int> n) {
  if (r < 3) throw Error("r must be at least 3");
  if (takes_star_parameter(id) != n.has_value()) {
    throw Error(to_string(id) + (n ? " does not take n" : " requires n"));
  }
  const int star_n = n.value_or(2);
  const JoinShape shape = shape_of(id, r, star_n);

  const Graph side = shape.k2_side ? copies(complete_graph(2), r - 1) : empty_graph(r - 1);
  const Graph clique = shape.clique > 0 ? complete_graph(shape.clique) : Graph(0);
  SharpnessCase out;
  out.theorem = id;
  out.r = r;
  out.n = n;
  out.graph = join(side, clique);
  out.expected_delta = degree_bound(id, r, star_n) - 1;
  const VertexSet core = VertexSet::range(out.graph.order()) - VertexSet::range(side.order());
  // Stated values, not evaluated: deleting the core leaves the r - 1 side
  // pieces (isolated vertices or K_2 suns) and nothing else.
  ViolationWitness& w = out.expected_witness;
  w.set = core;
  w.deficiency = r - 1;
  const int c = shape.clique;
  switch (id) {
    case TheoremId::T1_1: w.bound = star_n * c; break;
    case TheoremId::T1_2: w.bound = 2 * c; break;
    case TheoremId::T2_1:
    case TheoremId::T2_2: w.epsilon = c >= 2 ? 2 : 0; break;
    case TheoremId::T2_3: w.epsilon = c >= 2 ? 3 : 0; break;
    case TheoremId::C1_1: break;
  }
  if (w.epsilon) w.bound = 2 * c - *w.epsilon;
  out.witness_violates = w.violates();
  return out;
}

Graph big_sun(const Graph& h) {
  if (!is_factor_critical(h)) throw Error("big_sun needs a factor-critical base");
  const int k = h.order();
  Graph out = disjoint_union({h, empty_graph(k)});
  for (Vertex v = 0; v < k; ++v) out.add_edge(v, k + v);
  return out;
}

Graph odd_cycle(int k) {
  if (k < 3 || k % 2 == 0) throw Error("odd_cycle needs odd k >= 3");
  return cycle_graph(k);
}

}  // namespace cfactor
