// Command-line front end: analyze, decide, construct, verify, oracle-check.
//
// Exit codes: 0 verdict true / no counterexamples, 1 verdict false /
// counterexamples found, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cfactor/constructions.hpp"
#include "cfactor/factor_analysis.hpp"
#include "cfactor/factor_search.hpp"
#include "cfactor/graph.hpp"
#include "cfactor/graph_io.hpp"
#include "cfactor/harness.hpp"
#include "cfactor/matching.hpp"

namespace {

using namespace cfactor;
using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

struct GlobalOptions {
  std::string format = "graph6";
  std::string json_path;
  int jobs = 1;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<Graph> load_graphs(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "edgelist") {
    std::vector<std::string> warnings;
    Graph g = parse_edge_list(text, &warnings);
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
    return {g};
  }
  std::vector<Graph> graphs = parse_graph6_lines(text);
  if (graphs.empty()) throw Error("no graphs in '" + path + "'");
  return graphs;
}

std::string emit_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? write_edge_list(g) : write_graph6(g) + "\n";
}

void write_json(const std::string& path, const std::string& body) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << body;
}

std::string witness_text(const ViolationWitness& w) {
  std::string out = "set=" + to_string(w.set) + " deficiency=" + std::to_string(w.deficiency) +
                    " bound=" + std::to_string(w.bound);
  if (w.epsilon) out += " epsilon=" + std::to_string(*w.epsilon);
  return out;
}

json witness_json(const ViolationWitness& w) {
  return {{"set", w.set.members()},
          {"deficiency", w.deficiency},
          {"bound", w.bound},
          {"epsilon", w.epsilon ? json(*w.epsilon) : json(nullptr)}};
}

std::string factor_text(const Factor& f) {
  std::string out;
  for (const FactorComponent& c : f.components) {
    if (!out.empty()) out += " ";
    out += c.kind == ComponentKind::Path ? "path(" : "star(";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      if (i) out += c.kind == ComponentKind::Path ? "-" : (i == 1 ? ":" : ",");
      out += std::to_string(c.vertices[i]);
    }
    out += ")";
  }
  return out;
}

struct PropertySpec {
  std::string name;
  Criterion criterion;
  std::optional<Family> family;  // existence properties get a factor certificate
};

std::vector<PropertySpec> all_properties(int n) {
  return {{"sn-factor", Criterion::SnFactor, Family::stars(n)},
          {"p2-factor", Criterion::P2Factor, Family::paths_at_least(2)},
          {"p3-factor", Criterion::P3Factor, Family::paths_at_least(3)},
          {"p2-covered", Criterion::P2Covered, std::nullopt},
          {"p3-covered", Criterion::P3Covered, std::nullopt},
          {"p2p3-covered", Criterion::P2P3Covered, std::nullopt}};
}

bool is_covered_property(Criterion c) {
  return c == Criterion::P2Covered || c == Criterion::P3Covered ||
         c == Criterion::P2P3Covered;
}

// Evaluates one property; returns the verdict and appends output.
bool report_property(const Graph& g, const PropertySpec& p, int n, std::ostream& os,
                     json& j) {
  const std::string label = p.criterion == Criterion::SnFactor
                                ? p.name + "(n=" + std::to_string(n) + ")"
                                : p.name;
  if (is_covered_property(p.criterion) && !is_connected(g)) {
    os << label << ": n/a (disconnected)\n";
    j[label] = {{"verdict", nullptr}, {"reason", "disconnected"}};
    return false;
  }
  Decision d = decide(g, p.criterion, n);
  json entry = {{"verdict", d.verdict}};
  os << label << ": " << (d.verdict ? "true" : "false");
  if (d.witness) {
    os << " " << witness_text(*d.witness);
    entry["witness"] = witness_json(*d.witness);
  } else if (p.family && g.order() <= SearchOptions{}.max_order) {
    if (auto f = find_factor(g, *p.family)) {
      os << " factor=" << factor_text(*f);
      entry["factor"] = factor_text(*f);
    }
  }
  os << "\n";
  j[label] = entry;
  return d.verdict;
}

int run_analyze(const std::string& file, int r, int n, const GlobalOptions& opts) {
  json doc = json::array();
  bool all_true = true;
  for (const Graph& g : load_graphs(file, opts.format)) {
    json j;
    std::ostringstream os;
    os << "graph: " << write_graph6(g) << "\n"
       << "order: " << g.order() << "\n"
       << "edges: " << g.size() << "\n";
    j["graph6"] = write_graph6(g);
    if (g.order() > 0) {
      os << "min_degree: " << min_degree(g) << "\n";
      j["min_degree"] = min_degree(g);
    }
    if (auto star = find_induced_star(g, r)) {
      os << "k1r_free(r=" << r << "): false center=" << star->center << " leaves="
         << to_string(VertexSet::from_members(star->leaves)) << "\n";
      j["k1r_free"] = {{"r", r}, {"free", false}, {"center", star->center},
                       {"leaves", star->leaves}};
    } else {
      os << "k1r_free(r=" << r << "): true\n";
      j["k1r_free"] = {{"r", r}, {"free", true}};
    }
    for (const PropertySpec& p : all_properties(n)) {
      all_true = report_property(g, p, n, os, j) && all_true;
    }
    std::cout << os.str();
    doc.push_back(j);
  }
  write_json(opts.json_path, doc.dump(2) + "\n");
  return all_true ? kExitTrue : kExitFalse;
}

int run_decide(const std::string& property, const std::string& file, int n,
               const GlobalOptions& opts) {
  std::optional<PropertySpec> spec;
  for (const PropertySpec& p : all_properties(n)) {
    if (p.name == property) spec = p;
  }
  if (!spec) throw CLI::ValidationError("property", "unknown property '" + property + "'");
  json doc = json::array();
  bool all_true = true;
  for (const Graph& g : load_graphs(file, opts.format)) {
    if (is_covered_property(spec->criterion) && !is_connected(g)) {
      throw Error(property + " requires a connected graph: " + write_graph6(g));
    }
    json j;
    j["graph6"] = write_graph6(g);
    std::ostringstream os;
    all_true = report_property(g, *spec, n, os, j) && all_true;
    std::cout << write_graph6(g) << " " << os.str();
    doc.push_back(j);
  }
  write_json(opts.json_path, doc.dump(2) + "\n");
  return all_true ? kExitTrue : kExitFalse;
}

int run_construct(const std::string& what, int r, std::optional<int> n, int sun_base,
                  const GlobalOptions& opts) {
  json j;
  if (what == "sun") {
    Graph g = big_sun(odd_cycle(sun_base));
    auto d = is_sun(g);
    std::cout << emit_graph(g, opts.format) << "kind: " << to_string(d->kind) << "\n"
              << "base: " << to_string(d->base) << "\n"
              << "pendants:";
    json pendants = json::array();
    for (auto [v, u] : d->pendants) {
      std::cout << " " << v << "-" << u;
      pendants.push_back({v, u});
    }
    std::cout << "\n";
    j = {{"graph6", write_graph6(g)}, {"kind", to_string(d->kind)},
         {"base", d->base.members()}, {"pendants", pendants}};
    write_json(opts.json_path, j.dump(2) + "\n");
    return kExitTrue;
  }
  const TheoremId id = parse_theorem_id(what);
  SharpnessCase c = sharpness_graph(id, r, takes_star_parameter(id) ? n.value_or(2) : n);
  std::cout << emit_graph(c.graph, opts.format) << "theorem: " << to_string(id) << "\n"
            << "r: " << r << "\n";
  if (c.n) std::cout << "n: " << *c.n << "\n";
  std::cout << "order: " << c.graph.order() << "\n"
            << "min_degree: " << min_degree(c.graph) << "\n"
            << "expected_delta: " << c.expected_delta << "\n"
            << "k1r_free: " << (is_k1r_free(c.graph, r) ? "true" : "false") << "\n"
            << "criterion: " << to_string(conclusion_criterion(id)) << "\n"
            << "witness: " << witness_text(c.expected_witness) << "\n"
            << "witness_violates: " << (c.witness_violates ? "true" : "false") << "\n";
  j = {{"graph6", write_graph6(c.graph)},
       {"theorem", to_string(id)},
       {"r", r},
       {"n", c.n ? json(*c.n) : json(nullptr)},
       {"min_degree", min_degree(c.graph)},
       {"expected_delta", c.expected_delta},
       {"criterion", to_string(conclusion_criterion(id))},
       {"witness", witness_json(c.expected_witness)},
       {"witness_violates", c.witness_violates}};
  write_json(opts.json_path, j.dump(2) + "\n");
  return kExitTrue;
}

int run_verify(const std::string& theorem, int r, std::optional<int> n, const SweepConfig& sweep,
               int weaken, const GlobalOptions& opts) {
  const TheoremId id = parse_theorem_id(theorem);
  if (takes_star_parameter(id) && !n) n = 2;
  if (!takes_star_parameter(id) && n) throw Error(theorem + " does not take --n");
  VerifyOptions options;
  options.weaken = weaken;
  options.jobs = opts.jobs;
  TheoremReport report = verify_theorem(id, r, n, sweep, options);
  std::cout << to_text(report);
  std::cerr << "wall_time: " << report.wall_time << "s\n";
  write_json(opts.json_path, to_json(report));
  return report.holds() ? kExitTrue : kExitFalse;
}

int run_oracle_check(const CrosscheckConfig& config, const GlobalOptions& opts) {
  CrosscheckReport report = oracle_crosscheck(config);
  std::cout << to_text(report);
  std::cerr << "wall_time: " << report.wall_time << "s\n";
  write_json(opts.json_path, to_json(report));
  return report.clean() ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star and path factors in K_{1,r}-free graphs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("cfactor ") + kToolVersion);

  GlobalOptions opts;
  auto add_globals = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Graph format for input and output")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    sub->add_option("--json", opts.json_path, "Also write a JSON document to this path");
    sub->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };

  std::string file;
  std::string property;
  std::string what;
  std::string theorem;
  int r = 3;
  std::optional<int> n;
  int sun_base = 3;
  int weaken = 0;
  SweepConfig sweep;
  sweep.dedup = false;
  sweep.max_vertices = 6;
  CrosscheckConfig cross;

  auto* analyze = app.add_subcommand("analyze", "Report degree, K_{1,r}-freeness and all decisions");
  analyze->add_option("file", file, "Input file ('-' for stdin)")->required();
  analyze->add_option("--r", r, "Star size r for the K_{1,r}-freeness check")
      ->check(CLI::Range(2, 64));
  analyze->add_option("--n", n, "Star parameter n for the S_n-factor")->check(CLI::Range(2, 64));
  add_globals(analyze);

  auto* decide_cmd = app.add_subcommand("decide", "Decide one property with a certificate");
  decide_cmd->add_option("property", property,
                         "sn-factor, p2-factor, p3-factor, p2-covered, p3-covered, p2p3-covered")
      ->required();
  decide_cmd->add_option("file", file, "Input file ('-' for stdin)")->required();
  decide_cmd->add_option("--n", n, "Star parameter n for sn-factor")->check(CLI::Range(2, 64));
  add_globals(decide_cmd);

  auto* construct = app.add_subcommand("construct", "Emit a sharpness graph or a sun");
  construct->add_option("what", what, "T1-1, T1-2, T2-1, T2-2, T2-3 or sun")->required();
  construct->add_option("--r", r, "r >= 3")->check(CLI::Range(3, 64));
  construct->add_option("--n", n, "n >= 2 (T1-1 only)")->check(CLI::Range(2, 64));
  construct->add_option("--k", sun_base, "Odd cycle length of the sun base")
      ->check(CLI::Range(3, 31));
  add_globals(construct);

  auto* verify = app.add_subcommand("verify", "Exhaustively check a theorem on small graphs");
  verify->add_option("theorem", theorem, "T1-1, T1-2, T2-1, T2-2, T2-3 or C1-1")->required();
  verify->add_option("--r", r, "r >= 3")->check(CLI::Range(3, 64));
  verify->add_option("--n", n, "n >= 2 (T1-1 only)")->check(CLI::Range(2, 64));
  verify->add_option("--max-vertices", sweep.max_vertices)->check(CLI::Range(1, kEnumerationMaxOrder));
  verify->add_option("--min-vertices", sweep.min_vertices)->check(CLI::Range(1, kEnumerationMaxOrder));
  verify->add_flag("--dedup", sweep.dedup, "One graph per isomorphism class");
  verify->add_option("--weaken", weaken, "Lower the degree bound by this amount")
      ->check(CLI::NonNegativeNumber);
  add_globals(verify);

  auto* oracle = app.add_subcommand("oracle-check", "Cross-check deciders against brute force");
  oracle->add_option("--max-vertices", cross.max_vertices)->check(CLI::Range(1, kEnumerationMaxOrder));
  oracle->add_option("--covered-max-vertices", cross.covered_max_vertices)
      ->check(CLI::Range(0, kEnumerationMaxOrder));
  bool labeled = false;
  oracle->add_flag("--labeled", labeled,
                   "Check every labeled graph instead of one per isomorphism class");
  add_globals(oracle);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*analyze) return run_analyze(file, r, n.value_or(2), opts);
    if (*decide_cmd) return run_decide(property, file, n.value_or(2), opts);
    if (*construct) return run_construct(what, r, n, sun_base, opts);
    if (*verify) return run_verify(theorem, r, n, sweep, weaken, opts);
    if (*oracle) {
      cross.jobs = opts.jobs;
      cross.dedup = !labeled;
      cross.covered_max_vertices = std::min(cross.covered_max_vertices, cross.max_vertices);
      return run_oracle_check(cross, opts);
    }
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
