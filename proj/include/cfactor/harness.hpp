#ifndef CFACTOR_HARNESS_HPP
#define CFACTOR_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cfactor/constructions.hpp"
#include "cfactor/enumerate.hpp"
#include "cfactor/factor_analysis.hpp"
#include "cfactor/factor_search.hpp"

namespace cfactor {

inline constexpr const char* kToolVersion = "0.3.0";

struct Counterexample {
  std::string graph6;
  ViolationWitness witness;
};

struct TheoremReport {
  TheoremId theorem = TheoremId::T1_1;
  int r = 3;
  std::optional<int> n;
  SweepConfig config;
  int degree_bound = 0;  // bound actually applied (after weakening)
  int weaken = 0;
  std::uint64_t graphs_enumerated = 0;
  std::uint64_t hypothesis_matches = 0;
  std::vector<Counterexample> counterexamples;
  double wall_time = 0.0;  // seconds; not part of the serialized report

  bool holds() const { return counterexamples.empty(); }
};

struct VerifyOptions {
  /// Subtracted from the hypothesis bound (clamped at 0).
  int weaken = 0;
  int jobs = 1;
  DecideOptions decide;
};

/// Runs the conclusion's decider on every enumerated graph that is
/// K_{1,r}-free with minimum degree at least the (weakened) bound. Covered
/// theorems only see connected graphs.
TheoremReport verify_theorem(TheoremId id, int r, std::optional<int> n,
                             const SweepConfig& config, const VerifyOptions& options = {});

/// The library routines the cross-check compares. Replaceable so the harness
/// can be tested against a deliberately broken decider.
struct Deciders {
  std::function<Decision(const Graph&, Criterion, int)> decide =
      [](const Graph& g, Criterion c, int n) { return cfactor::decide(g, c, n); };
  std::function<std::optional<Factor>(const Graph&, const Family&)> find =
      [](const Graph& g, const Family& f) { return find_factor(g, f); };
  std::function<bool(const Graph&, const Family&)> covered =
      [](const Graph& g, const Family& f) { return is_covered_bruteforce(g, f); };
};

struct CrosscheckConfig {
  /// Existence checks run on every graph up to this order.
  int max_vertices = 6;
  /// Covered checks run on connected graphs up to this order (0 = skip).
  int covered_max_vertices = 5;
  bool dedup = true;
  int jobs = 1;
};

struct Disagreement {
  std::string graph6;
  std::string check;
  std::string detail;
};

struct CrosscheckReport {
  CrosscheckConfig config;
  std::uint64_t graphs_checked = 0;
  std::uint64_t connected_checked = 0;
  std::uint64_t comparisons = 0;
  std::vector<Disagreement> disagreements;
  double wall_time = 0.0;

  bool clean() const { return disagreements.empty(); }
};

/// Compares every characterization decider with the brute-force factor
/// search, and checks the equivalences between deciders.
CrosscheckReport oracle_crosscheck(const CrosscheckConfig& config,
                                   const Deciders& deciders = {});

/// Line-oriented "key: value" report. Deterministic for a fixed config.
std::string to_text(const TheoremReport& report);
std::string to_text(const CrosscheckReport& report);
/// JSON document with the same content.
std::string to_json(const TheoremReport& report);
std::string to_json(const CrosscheckReport& report);

}  // namespace cfactor

#endif  // CFACTOR_HARNESS_HPP
