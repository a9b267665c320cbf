#ifndef CFACTOR_FACTOR_ANALYSIS_HPP
#define CFACTOR_FACTOR_ANALYSIS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cfactor/graph.hpp"

namespace cfactor {

enum class SunKind { K1, K2, BigSun };

std::string to_string(SunKind kind);

/// Proof that a connected graph is a sun. For BigSun, `base` induces a
/// factor-critical graph of odd order >= 3 and each pair (v, u) attaches the
/// degree-1 vertex u to the base vertex v. For K1 and K2 both are empty.
struct SunDecomposition {
  SunKind kind = SunKind::K1;
  VertexSet base;
  std::vector<std::pair<Vertex, Vertex>> pendants;
};

/// Recognizes a sun. Throws if G is not connected.
std::optional<SunDecomposition> is_sun(const Graph& g);

/// Sun recognition for the subgraph induced by `component`, which must be
/// connected in G. The decomposition uses G's labels.
std::optional<SunDecomposition> sun_decomposition(const Graph& g, VertexSet component);

/// Whether `d` is a valid decomposition of G[component].
bool is_valid_sun_decomposition(const Graph& g, VertexSet component,
                                const SunDecomposition& d);

/// sun(G - X): number of components of G - X that are suns.
int sun_count(const Graph& g, VertexSet x);

int epsilon1(const Graph& g, VertexSet s);
int epsilon2(const Graph& g, VertexSet s);
int epsilon3(const Graph& g, VertexSet s);

/// The Tutte-type conditions the deciders enumerate.
enum class Criterion {
  SnFactor,             // i(G-X) <= n|X|
  SnFactorIndependent,  // |S| <= n|N(S)| for independent S
  P2Factor,             // i(G-X) <= 2|X|
  P3Factor,             // sun(G-X) <= 2|X|
  P2Covered,            // i(G-S) <= 2|S| - eps1(S)
  P3Covered,            // sun(G-S) <= 2|S| - eps2(S)
  P2P3Covered,          // i(G-S) <= 2|S| - eps3(S)
};

std::string to_string(Criterion c);

/// A vertex set with the two sides of a condition evaluated on it. The set
/// violates the condition when deficiency > bound.
struct ViolationWitness {
  VertexSet set;
  int deficiency = 0;
  int bound = 0;
  std::optional<int> epsilon;

  bool violates() const { return deficiency > bound; }
  friend bool operator==(const ViolationWitness&, const ViolationWitness&) = default;
};

struct Decision {
  bool verdict = true;
  std::optional<ViolationWitness> witness;
};

struct DecideOptions {
  /// Largest graph order accepted by the exhaustive subset scan.
  int max_order = 24;
};

/// Both sides of `criterion` for the given set. `n` is the star-size
/// parameter for the SnFactor criteria and ignored otherwise.
ViolationWitness evaluate_criterion(const Graph& g, Criterion criterion, VertexSet set,
                                    int n = 2);

/// True iff `w` is a violation of `criterion` whose stored values match a
/// fresh evaluation.
bool revalidate(const Graph& g, Criterion criterion, const ViolationWitness& w,
                int n = 2);

/// Scans all sets by increasing cardinality, lexicographically within each
/// cardinality, and reports the first violation.
Decision decide(const Graph& g, Criterion criterion, int n = 2,
                const DecideOptions& options = {});

Decision has_sn_factor(const Graph& g, int n, const DecideOptions& options = {});
Decision has_sn_factor_independent_form(const Graph& g, int n,
                                        const DecideOptions& options = {});
Decision has_p2_factor(const Graph& g, const DecideOptions& options = {});
Decision has_p3_factor(const Graph& g, const DecideOptions& options = {});

/// The covered-graph deciders throw on disconnected input.
Decision is_p2_covered(const Graph& g, const DecideOptions& options = {});
Decision is_p3_covered(const Graph& g, const DecideOptions& options = {});
Decision is_p2p3_covered(const Graph& g, const DecideOptions& options = {});

}  // namespace cfactor

#endif  // CFACTOR_FACTOR_ANALYSIS_HPP
