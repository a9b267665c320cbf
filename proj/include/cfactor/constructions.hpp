#ifndef CFACTOR_CONSTRUCTIONS_HPP
#define CFACTOR_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "cfactor/factor_analysis.hpp"
#include "cfactor/graph.hpp"

namespace cfactor {

/// The minimum-degree theorems for K_{1,r}-free graphs.
///   T1_1: delta >= floor((r+n-2)/n)  =>  S_n-factor
///   T1_2: delta >= floor(r/2) + 1    =>  P>=3-factor
///   T2_1: delta >= floor(r/2) + 1    =>  P>=2-factor covered
///   T2_2: delta >= floor(r/2) + 2    =>  P>=3-factor covered
///   T2_3: delta >= ceil(r/2) + 1     =>  {P2,P3}-factor covered
///   C1_1: delta >= floor(r/2)        =>  P>=2-factor
enum class TheoremId { T1_1, T1_2, T2_1, T2_2, T2_3, C1_1 };

std::string to_string(TheoremId id);
/// Accepts "T1-1", "T1-2", "T2-1", "T2-2", "T2-3", "C1-1".
TheoremId parse_theorem_id(const std::string& text);

/// Whether the theorem takes the star parameter n.
inline bool takes_star_parameter(TheoremId id) { return id == TheoremId::T1_1; }
/// Whether the conclusion is a covered-graph property (connected graphs only).
bool is_covered_theorem(TheoremId id);

/// Minimum-degree bound in the hypothesis. Throws on r < 3, or n < 2 for T1_1.
int degree_bound(TheoremId id, int r, int n = 2);

/// Characterization whose satisfaction is the theorem's conclusion.
Criterion conclusion_criterion(TheoremId id);

/// A sharpness graph with minimum degree one below the bound, together with
/// the vertex set (always the last block of indices) that is supposed to
/// violate the characterization.
struct SharpnessCase {
  TheoremId theorem = TheoremId::T1_1;
  int r = 3;
  std::optional<int> n;
  Graph graph;
  int expected_delta = 0;
  ViolationWitness expected_witness;
  /// False when the stated set does not actually violate the condition
  /// (T2_1 and T2_2 at r = 3).
  bool witness_violates = true;
};

/// Builds the sharpness construction. `n` is required for T1_1 and rejected
/// otherwise; C1_1 is not a construction of its own and is rejected.
SharpnessCase sharpness_graph(TheoremId id, int r, std::optional<int> n = std::nullopt);

/// Order of the sharpness graph, without building it.
int sharpness_order(TheoremId id, int r, int n = 2);

/// H plus a pendant vertex |H| + i attached to each vertex i of H. Throws
/// unless H is factor-critical.
Graph big_sun(const Graph& h);

/// C_k for odd k >= 3.
Graph odd_cycle(int k);

}  // namespace cfactor

#endif  // CFACTOR_CONSTRUCTIONS_HPP
