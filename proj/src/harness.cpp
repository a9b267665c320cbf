#include "cfactor/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "cfactor/graph_io.hpp"

namespace cfactor {

namespace {

constexpr std::uint64_t kChunkSize = 256;

// Splits [0, count) into fixed-size chunks, evaluates them on `jobs` threads
// and returns the per-chunk results in chunk order. The chunking does not
// depend on `jobs`, so merged output is identical at any width.
template <typename Result, typename Fn>
std::vector<Result> run_chunks(std::uint64_t count, int jobs, Fn fn) {
  const std::uint64_t chunks = (count + kChunkSize - 1) / kChunkSize;
  std::vector<Result> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        results[c] = fn(c * kChunkSize, std::min(count, (c + 1) * kChunkSize));
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
        return;
      }
    }
  };
  const int width = static_cast<int>(std::min<std::uint64_t>(std::max(jobs, 1), std::max<std::uint64_t>(chunks, 1)));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int i = 0; i < width; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct SweepChunk {
  std::uint64_t enumerated = 0;
  std::uint64_t matches = 0;
  std::vector<Counterexample> counterexamples;
};

}  // namespace

TheoremReport verify_theorem(TheoremId id, int r, std::optional<int> n,
                             const SweepConfig& config, const VerifyOptions& options) {
  if (takes_star_parameter(id) != n.has_value()) {
    throw Error(to_string(id) + (n ? " does not take n" : " requires n"));
  }
  if (options.weaken < 0) throw Error("weaken must be non-negative");
  const auto start = std::chrono::steady_clock::now();
  const int star_n = n.value_or(2);
  const int full_bound = degree_bound(id, r, star_n);

  TheoremReport report;
  report.theorem = id;
  report.r = r;
  report.n = n;
  report.config = config;
  report.config.connected_only = config.connected_only || is_covered_theorem(id);
  report.weaken = options.weaken;
  report.degree_bound = std::max(full_bound - options.weaken, 0);

  const GraphPopulation population(report.config);
  const Criterion criterion = conclusion_criterion(id);
  auto chunks = run_chunks<SweepChunk>(
      population.size(), options.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        SweepChunk out;
        for (std::uint64_t i = begin; i < end; ++i) {
          std::optional<Graph> g = population.at(i);
          if (!g) continue;
          ++out.enumerated;
          if (min_degree(*g) < report.degree_bound || !is_k1r_free(*g, r)) continue;
          ++out.matches;
          Decision d = decide(*g, criterion, star_n, options.decide);
          if (d.verdict) continue;
          if (!revalidate(*g, criterion, *d.witness, star_n)) {
            throw Error("witness failed revalidation on " + write_graph6(*g));
          }
          out.counterexamples.push_back({write_graph6(*g), *d.witness});
        }
        return out;
      });
  for (SweepChunk& c : chunks) {
    report.graphs_enumerated += c.enumerated;
    report.hypothesis_matches += c.matches;
    for (Counterexample& ce : c.counterexamples) report.counterexamples.push_back(std::move(ce));
  }
  report.wall_time = seconds_since(start);
  return report;
}

namespace {

struct CrossChunk {
  std::uint64_t graphs = 0;
  std::uint64_t connected = 0;
  std::uint64_t comparisons = 0;
  std::vector<Disagreement> disagreements;
};

std::string verdict_word(bool v) { return v ? "true" : "false"; }

class GraphChecker {
 public:
  GraphChecker(const Graph& g, const Deciders& d, CrossChunk& out)
      : g_(g), d_(d), out_(out), g6_(write_graph6(g)) {}

  void existence() {
    ++out_.graphs;
    bool previous_sn = false;
    for (int n : {2, 3}) {
      const Decision sn = checked_decide(Criterion::SnFactor, n);
      compare_with_search(to_string(Criterion::SnFactor) + "(n=" + std::to_string(n) + ")",
                          sn.verdict, Family::stars(n));
      const Decision ind = checked_decide(Criterion::SnFactorIndependent, n);
      expect(sn.verdict == ind.verdict, "sn-factor-forms(n=" + std::to_string(n) + ")",
             "subset form " + verdict_word(sn.verdict) + ", independent form " +
                 verdict_word(ind.verdict));
      if (n == 3) {
        expect(!previous_sn || sn.verdict, "sn-monotone",
               "S2-factor exists but S3-factor does not");
      }
      previous_sn = sn.verdict;
    }
    const Decision p2 = checked_decide(Criterion::P2Factor, 2);
    compare_with_search("p2-factor", p2.verdict, Family::paths_at_least(2));
    const Decision s2 = checked_decide(Criterion::SnFactor, 2);
    expect(p2.verdict == s2.verdict, "p2-equals-s2",
           "P>=2 " + verdict_word(p2.verdict) + ", S2 " + verdict_word(s2.verdict));
    const Decision p3 = checked_decide(Criterion::P3Factor, 2);
    compare_with_search("p3-factor", p3.verdict, Family::paths_at_least(3));
  }

  void covered() {
    ++out_.connected;
    struct Pair {
      Criterion criterion;
      Family family;
      Criterion existence;
    };
    for (const Pair& p : {Pair{Criterion::P2Covered, Family::paths_at_least(2), Criterion::P2Factor},
                          Pair{Criterion::P3Covered, Family::paths_at_least(3), Criterion::P3Factor},
                          Pair{Criterion::P2P3Covered, Family::p2p3(), Criterion::SnFactor}}) {
      const Decision dec = checked_decide(p.criterion, 2);
      const bool brute = d_.covered(g_, p.family);
      ++out_.comparisons;
      expect(dec.verdict == brute, to_string(p.criterion),
             "characterization " + verdict_word(dec.verdict) + ", brute force " +
                 verdict_word(brute));
      if (dec.verdict && g_.size() > 0) {
        const Decision exists = checked_decide(p.existence, 2);
        expect(exists.verdict, to_string(p.criterion) + "-implies-factor",
               "covered but no factor");
      }
    }
  }

 private:
  Decision checked_decide(Criterion c, int n) {
    Decision d = d_.decide(g_, c, n);
    if (d.verdict != !d.witness.has_value()) {
      report(to_string(c), "verdict and witness presence disagree");
    } else if (!d.verdict && !revalidate(g_, c, *d.witness, n)) {
      report(to_string(c), "witness " + to_string(d.witness->set) + " does not revalidate");
    }
    return d;
  }

  void compare_with_search(const std::string& check, bool verdict, const Family& family) {
    std::optional<Factor> f = d_.find(g_, family);
    ++out_.comparisons;
    expect(verdict == f.has_value(), check,
           "characterization " + verdict_word(verdict) + ", search " +
               verdict_word(f.has_value()));
    if (f) expect(verify_factor(g_, *f), check, "search returned an invalid factor");
  }

  void expect(bool ok, const std::string& check, const std::string& detail) {
    if (!ok) report(check, detail);
  }

  void report(const std::string& check, const std::string& detail) {
    out_.disagreements.push_back({g6_, check, detail});
  }

  const Graph& g_;
  const Deciders& d_;
  CrossChunk& out_;
  std::string g6_;
};

}  // namespace

CrosscheckReport oracle_crosscheck(const CrosscheckConfig& config, const Deciders& deciders) {
  const auto start = std::chrono::steady_clock::now();
  SweepConfig sweep;
  sweep.max_vertices = std::max(config.max_vertices, config.covered_max_vertices);
  sweep.dedup = config.dedup;
  const GraphPopulation population(sweep);

  auto chunks = run_chunks<CrossChunk>(
      population.size(), config.jobs, [&](std::uint64_t begin, std::uint64_t end) {
        CrossChunk out;
        for (std::uint64_t i = begin; i < end; ++i) {
          std::optional<Graph> g = population.at(i);
          GraphChecker checker(*g, deciders, out);
          if (g->order() <= config.max_vertices) checker.existence();
          if (g->order() <= config.covered_max_vertices && is_connected(*g)) checker.covered();
        }
        return out;
      });

  CrosscheckReport report;
  report.config = config;
  for (CrossChunk& c : chunks) {
    report.graphs_checked += c.graphs;
    report.connected_checked += c.connected;
    report.comparisons += c.comparisons;
    for (Disagreement& d : c.disagreements) report.disagreements.push_back(std::move(d));
  }
  report.wall_time = seconds_since(start);
  return report;
}

namespace {

std::string witness_text(const ViolationWitness& w) {
  std::string out = "set=" + to_string(w.set) + " deficiency=" + std::to_string(w.deficiency) +
                    " bound=" + std::to_string(w.bound);
  if (w.epsilon) out += " epsilon=" + std::to_string(*w.epsilon);
  return out;
}

nlohmann::json witness_json(const ViolationWitness& w) {
  nlohmann::json j;
  j["set"] = w.set.members();
  j["deficiency"] = w.deficiency;
  j["bound"] = w.bound;
  j["epsilon"] = w.epsilon ? nlohmann::json(*w.epsilon) : nlohmann::json(nullptr);
  return j;
}

}  // namespace

std::string to_text(const TheoremReport& r) {
  std::ostringstream os;
  os << "tool: cfactor " << kToolVersion << "\n"
     << "report: theorem-verification\n"
     << "theorem: " << to_string(r.theorem) << "\n"
     << "r: " << r.r << "\n";
  if (r.n) os << "n: " << *r.n << "\n";
  os << "min_vertices: " << r.config.min_vertices << "\n"
     << "max_vertices: " << r.config.max_vertices << "\n"
     << "dedup: " << (r.config.dedup ? "true" : "false") << "\n"
     << "connected_only: " << (r.config.connected_only ? "true" : "false") << "\n"
     << "weaken: " << r.weaken << "\n"
     << "degree_bound: " << r.degree_bound << "\n"
     << "graphs_enumerated: " << r.graphs_enumerated << "\n"
     << "hypothesis_matches: " << r.hypothesis_matches << "\n"
     << "counterexamples: " << r.counterexamples.size() << "\n";
  for (const Counterexample& c : r.counterexamples) {
    os << "counterexample: " << c.graph6 << " " << witness_text(c.witness) << "\n";
  }
  os << "result: " << (r.holds() ? "holds" : "counterexamples-found") << "\n";
  return os.str();
}

std::string to_json(const TheoremReport& r) {
  nlohmann::json j;
  j["tool"] = std::string("cfactor ") + kToolVersion;
  j["report"] = "theorem-verification";
  j["theorem"] = to_string(r.theorem);
  j["r"] = r.r;
  j["n"] = r.n ? nlohmann::json(*r.n) : nlohmann::json(nullptr);
  j["config"] = {{"min_vertices", r.config.min_vertices},
                 {"max_vertices", r.config.max_vertices},
                 {"dedup", r.config.dedup},
                 {"connected_only", r.config.connected_only}};
  j["weaken"] = r.weaken;
  j["degree_bound"] = r.degree_bound;
  j["graphs_enumerated"] = r.graphs_enumerated;
  j["hypothesis_matches"] = r.hypothesis_matches;
  nlohmann::json list = nlohmann::json::array();
  for (const Counterexample& c : r.counterexamples) {
    list.push_back({{"graph6", c.graph6}, {"witness", witness_json(c.witness)}});
  }
  j["counterexamples"] = list;
  j["holds"] = r.holds();
  return j.dump(2) + "\n";
}

std::string to_text(const CrosscheckReport& r) {
  std::ostringstream os;
  os << "tool: cfactor " << kToolVersion << "\n"
     << "report: oracle-crosscheck\n"
     << "max_vertices: " << r.config.max_vertices << "\n"
     << "covered_max_vertices: " << r.config.covered_max_vertices << "\n"
     << "dedup: " << (r.config.dedup ? "true" : "false") << "\n"
     << "graphs_checked: " << r.graphs_checked << "\n"
     << "connected_checked: " << r.connected_checked << "\n"
     << "comparisons: " << r.comparisons << "\n"
     << "disagreements: " << r.disagreements.size() << "\n";
  for (const Disagreement& d : r.disagreements) {
    os << "disagreement: " << d.graph6 << " " << d.check << ": " << d.detail << "\n";
  }
  os << "result: " << (r.clean() ? "agree" : "disagreements-found") << "\n";
  return os.str();
}

std::string to_json(const CrosscheckReport& r) {
  nlohmann::json j;
  j["tool"] = std::string("cfactor ") + kToolVersion;
  j["report"] = "oracle-crosscheck";
  j["config"] = {{"max_vertices", r.config.max_vertices},
                 {"covered_max_vertices", r.config.covered_max_vertices},
                 {"dedup", r.config.dedup}};
  j["graphs_checked"] = r.graphs_checked;
  j["connected_checked"] = r.connected_checked;
  j["comparisons"] = r.comparisons;
  nlohmann::json list = nlohmann::json::array();
  for (const Disagreement& d : r.disagreements) {
    list.push_back({{"graph6", d.graph6}, {"check", d.check}, {"detail", d.detail}});
  }
  j["disagreements"] = list;
  j["agree"] = r.clean();
  return j.dump(2) + "\n";
}

}  // namespace cfactor
