#include "romandom/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "romandom/bounds.hpp"
#include "romandom/constructions.hpp"
#include "romandom/domatic.hpp"
#include "romandom/errors.hpp"
#include "romandom/graph.hpp"
#include "romandom/report.hpp"
#include "romandom/rkdf.hpp"

namespace romandom::cli {

namespace {

/// Thrown for I/O failures (exit code 4).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A construction failed its own validator (exit code 70).
struct InternalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GraphSource {
  std::string path;
  std::string format = "graph6";
};

void add_graph_options(CLI::App* cmd, GraphSource& src, bool required) {
  auto* opt = cmd->add_option("--graph", src.path, "graph file, or - for stdin");
  if (required) opt->required();
  cmd->add_option("--format", src.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

Graph load_graph(const GraphSource& src, std::istream& in, const Guards& guards) {
  std::string text;
  if (src.path == "-") {
    text = read_all(in);
  } else {
    std::ifstream file(src.path, std::ios::binary);
    if (!file) throw InputError("cannot open '" + src.path + "'");
    text = read_all(file);
  }
  if (src.format == "edgelist") return parse_edge_list(text, guards);
  // First non-blank line.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) return parse_graph6(line, guards);
  }
  throw ParseError("graph6: empty input", 0);
}

Guards resolve_guards(std::optional<int> flag_max_n) {
  std::optional<int> n = flag_max_n ? flag_max_n : max_n_from_env();
  if (!n) return Guards{};
  if (*n < 1 || *n > Guards::kHardMaxN) {
    throw PreconditionError("--max-n must lie in 1.." + std::to_string(Guards::kHardMaxN));
  }
  return Guards{}.with_max_n(*n);
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw PreconditionError("bad vertex index '" + tok + "' in --subgraph");
    }
  }
  return out;
}

BalancedSubgraph parse_subgraph(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw PreconditionError("--subgraph expects X:Y, got '" + text + "'");
  return {parse_index_list(text.substr(0, colon)), parse_index_list(text.substr(colon + 1))};
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string family;
  int n = 0;
  int p = 0;
  int q = 0;
  double prob = 0.5;
  std::uint64_t seed = 0;
  int k = 1;
};

int do_gen(const GenOptions& o, std::ostream& out) {
  FamilySpec spec;
  spec.kind = family_kind_from_string(o.family);
  spec.n = o.n;
  spec.p = o.p;
  spec.q = o.q;
  spec.prob = o.prob;
  spec.seed = o.seed;
  spec.k = o.k;
  if (spec.kind == FamilyKind::complete_bipartite) spec.n = o.p + o.q;
  if (spec.kind == FamilyKind::kdelta_sharpness) {
    if (o.k < 1) throw PreconditionError("kdelta-sharpness: k must be >= 1");
    spec.n = FamilySpec::kdelta_order(o.k);
  }
  validate(spec);
  if (spec.order() > Guards::kHardMaxN) {
    throw GuardError("generated graph would have " + std::to_string(spec.order()) +
                     " vertices; the limit is " + std::to_string(Guards::kHardMaxN));
  }
  out << encode_graph6(generate(spec)) << '\n';
  return kOk;
}

struct ComputeOptions {
  GraphSource graph;
  int k = 1;
  std::string quantity = "all";
  bool oracle = false;
  bool timing = false;
  std::optional<int> max_n;
};

int do_compute(const ComputeOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  auto guards = resolve_guards(o.max_n);
  auto g = load_graph(o.graph, in, guards);
  if (o.k < 1) throw PreconditionError("--k must be >= 1");

  auto solve = [&](const std::string& q) -> Json {
    if (o.oracle) {
      Json j;
      j["schema"] = kSchemaVersion;
      j["graph"] = graph_json(g);
      j["k"] = o.k;
      if (q == "gamma-kr") {
        j["quantity"] = "gamma_kR";
        j["method"] = "oracle";
        j["value"] = gamma_kr_oracle(g, o.k, guards);
      } else if (q == "d-rk") {
        j["quantity"] = "d_Rk";
        j["method"] = "oracle";
        j["value"] = d_rk_oracle(g, o.k, guards);
      } else {
        throw PreconditionError("--oracle is available for gamma-kr and d-rk only");
      }
      return j;
    }
    SolveResult r;
    if (q == "gamma-k") r = gamma_k_exact(g, o.k, guards);
    else if (q == "gamma-kr") r = gamma_kr_exact(g, o.k, guards);
    else if (q == "d-k") r = d_k_exact(g, o.k, guards);
    else r = d_rk_exact(g, o.k, guards);
    if (o.timing) {
      err << to_string(r.quantity) << ": "
          << std::chrono::duration<double>(r.elapsed).count() << " s, " << r.nodes_explored
          << " nodes\n";
    }
    return solve_result_json(g, o.k, r);
  };

  if (o.quantity == "all") {
    if (o.oracle) throw PreconditionError("--oracle needs a single --quantity");
    Json j;
    j["schema"] = kSchemaVersion;
    j["graph"] = graph_json(g);
    j["k"] = o.k;
    Json results = Json::array();
    for (const char* q : {"gamma-k", "gamma-kr", "d-k", "d-rk"}) {
      auto r = solve(q);
      r.erase("schema");
      r.erase("graph");
      r.erase("k");
      results.push_back(std::move(r));
    }
    j["results"] = std::move(results);
    out << j.dump(2) << '\n';
  } else {
    out << solve(o.quantity).dump(2) << '\n';
  }
  return kOk;
}

struct ConstructOptions {
  std::string name;
  int k = 1;
  int n = 0;
  int t = 0;
  GraphSource graph;
  std::vector<std::string> subgraphs;
};

int do_construct(const ConstructOptions& o, std::istream& in, std::ostream& out) {
  Guards guards;
  auto need_graph = [&]() {
    if (o.graph.path.empty()) throw PreconditionError(o.name + " needs --graph");
    return load_graph(o.graph, in, guards);
  };
  GraphFamily gf;
  if (o.name == "complete") {
    gf = {generate(FamilySpec::complete(o.n)), family_complete(o.n, o.k)};
  } else if (o.name == "balanced-bipartite") {
    gf = family_balanced_bipartite(o.t, o.k);
  } else if (o.name == "near-order") {
    gf.graph = need_graph();
    gf.family = family_near_order(gf.graph, o.k);
  } else if (o.name == "nontrivial") {
    gf.graph = need_graph();
    gf.family = family_nontrivial(gf.graph, o.k);
  } else if (o.name == "kdelta-sharpness") {
    gf = family_kdelta_sharpness(o.k, guards);
  } else {
    gf.graph = need_graph();
    std::vector<BalancedSubgraph> subs;
    for (const auto& s : o.subgraphs) subs.push_back(parse_subgraph(s));
    gf.family = family_from_balanced_subgraphs(gf.graph, o.k, subs);
  }
  auto violations = validate_family(gf.graph, o.k, gf.family);
  if (!violations.empty()) {
    throw InternalError("construction '" + o.name +
                        "' failed its own validation: " + violations.front().detail);
  }
  out << encode_graph6(gf.graph) << '\n' << to_string(gf.family) << "valid\n";
  return kOk;
}

BoundReport build_report(const Graph& g, int k, bool nordhaus_gaddum, const Guards& guards) {
  BoundReport report{g, k, solve_all(g, k, guards), {}};
  report.records = check_graph(g, k, report.values, guards);
  if (nordhaus_gaddum) {
    auto ng = check_nordhaus_gaddum(g, k, *report.values.d_rk,
                                    d_rk_exact(complement(g), k, guards).value);
    report.records.insert(report.records.end(), ng.begin(), ng.end());
    std::stable_sort(report.records.begin(), report.records.end(),
                     [](const BoundRecord& a, const BoundRecord& b) {
                       return a.theorem_id < b.theorem_id;
                     });
  }
  return report;
}

struct VerifyOptions {
  GraphSource graph;
  int k = 1;
  bool nordhaus_gaddum = false;
  std::string output = "json";
  std::optional<int> max_n;
};

int do_verify(const VerifyOptions& o, std::istream& in, std::ostream& out) {
  auto guards = resolve_guards(o.max_n);
  auto g = load_graph(o.graph, in, guards);
  if (o.k < 1) throw PreconditionError("--k must be >= 1");
  auto report = build_report(g, o.k, o.nordhaus_gaddum, guards);
  if (o.output == "csv") {
    out << report_csv_header() << report_csv_rows(report);
  } else if (o.output == "text") {
    for (const auto& r : report.records) {
      out << (r.applicable ? (r.holds ? "holds    " : "VIOLATED ") : "n/a      ") << r.theorem_id
          << "  " << r.lhs << ' ' << to_string(r.relation) << ' ' << r.rhs << "  " << r.notes
          << '\n';
    }
  } else {
    out << report_json(report).dump(2) << '\n';
  }
  return count_violations(report.records) == 0 ? kOk : kViolation;
}

struct SweepOptions {
  int n_max = 6;
  int k_max = 2;
  int count = 10;
  std::uint64_t seed = 0;
  int exhaustive_upto = 0;
  std::string output = "json";
  std::optional<int> max_n;
};

/// Instances in emission order: every labelled graph on 1..exhaustive_upto
/// vertices (edge subsets in increasing mask order), then `count` seeded
/// random graphs.
std::vector<Graph> sweep_instances(const SweepOptions& o) {
  std::vector<Graph> graphs;
  for (int n = 1; n <= o.exhaustive_upto; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      Graph g(n, "all" + std::to_string(n) + "#" + std::to_string(mask));
      for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
      }
      graphs.push_back(std::move(g));
    }
  }
  static constexpr double kProbs[] = {0.25, 0.5, 0.75};
  for (int i = 0; i < o.count; ++i) {
    auto idx = static_cast<std::uint64_t>(i);
    int n = 1 + static_cast<int>(splitmix64_at(o.seed, 2 * idx) % static_cast<std::uint64_t>(o.n_max));
    double prob = kProbs[splitmix64_at(o.seed, 2 * idx + 1) % 3];
    auto g = generate(FamilySpec::random_gnp(n, prob, splitmix64_at(o.seed ^ 0x5EEDULL, idx)));
    g.set_label("random#" + std::to_string(i));
    graphs.push_back(std::move(g));
  }
  return graphs;
}

int do_sweep(const SweepOptions& o, std::ostream& out) {
  auto guards = resolve_guards(o.max_n);
  if (o.n_max < 1 || o.k_max < 1 || o.count < 0) {
    throw PreconditionError("--n-max and --k-max must be >= 1, --count >= 0");
  }
  if (o.exhaustive_upto < 0 || o.exhaustive_upto > 6) {
    throw PreconditionError("--exhaustive-upto must lie in 0..6");
  }
  const int largest = std::max(o.n_max, o.exhaustive_upto);
  if (largest > guards.d_rk_max_n || o.k_max > guards.d_rk_max_k) {
    throw GuardError("sweep: instances up to n = " + std::to_string(largest) + ", k = " +
                     std::to_string(o.k_max) + " exceed the d_Rk solver limits n <= " +
                     std::to_string(guards.d_rk_max_n) + ", k <= " +
                     std::to_string(guards.d_rk_max_k));
  }
  std::size_t reports = 0;
  std::size_t applicable = 0;
  std::size_t violations = 0;
  auto graphs = sweep_instances(o);
  if (o.output == "csv") out << report_csv_header();
  for (const auto& g : graphs) {
    for (int k = 1; k <= o.k_max; ++k) {
      auto report = build_report(g, k, true, guards);
      ++reports;
      for (const auto& r : report.records) {
        applicable += r.applicable ? 1 : 0;
        violations += r.violated() ? 1 : 0;
      }
      if (o.output == "csv") {
        out << report_csv_rows(report);
      } else {
        out << report_json(report).dump() << '\n';
      }
    }
  }
  Json summary;
  summary["schema"] = kSchemaVersion;
  summary["instances"] = graphs.size();
  summary["reports"] = reports;
  summary["applicable_records"] = applicable;
  summary["violations"] = violations;
  if (o.output == "csv") {
    out << "# summary " << summary.dump() << '\n';
  } else {
    out << Json{{"summary", summary}}.dump() << '\n';
  }
  return violations == 0 ? kOk : kViolation;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact Roman k-domination and Roman (k,k)-domatic number toolkit", "romandom"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph, print graph6");
  gen_cmd->add_option("--family", gen.family)
      ->required()
      ->check(CLI::IsMember({"complete", "cycle", "empty", "complete-bipartite", "random-gnp",
                             "kdelta-sharpness"}));
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--p", gen.p);
  gen_cmd->add_option("--q", gen.q);
  gen_cmd->add_option("--prob", gen.prob);
  gen_cmd->add_option("--seed", gen.seed);
  gen_cmd->add_option("--k", gen.k);

  ComputeOptions compute;
  auto* compute_cmd = app.add_subcommand("compute", "compute exact values as JSON");
  add_graph_options(compute_cmd, compute.graph, true);
  compute_cmd->add_option("--k", compute.k)->required();
  compute_cmd->add_option("--quantity", compute.quantity)
      ->check(CLI::IsMember({"gamma-k", "gamma-kr", "d-k", "d-rk", "all"}));
  compute_cmd->add_flag("--oracle", compute.oracle, "use the exhaustive oracle");
  compute_cmd->add_flag("--timing", compute.timing, "report solver time on stderr");
  compute_cmd->add_option("--max-n", compute.max_n, "override solver vertex limits");

  ConstructOptions construct;
  auto* construct_cmd = app.add_subcommand("construct", "emit an explicit family");
  construct_cmd->add_option("--name", construct.name)
      ->required()
      ->check(CLI::IsMember({"complete", "balanced-bipartite", "near-order", "nontrivial",
                             "kdelta-sharpness", "from-subgraphs"}));
  construct_cmd->add_option("--k", construct.k)->required();
  construct_cmd->add_option("--n", construct.n, "order for complete");
  construct_cmd->add_option("--t", construct.t, "t for balanced-bipartite");
  add_graph_options(construct_cmd, construct.graph, false);
  construct_cmd->add_option("--subgraph", construct.subgraphs, "X:Y pair, e.g. 0,1:2,3");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "evaluate every bound on one graph");
  add_graph_options(verify_cmd, verify.graph, true);
  verify_cmd->add_option("--k", verify.k)->required();
  verify_cmd->add_flag("--nordhaus-gaddum", verify.nordhaus_gaddum);
  verify_cmd->add_option("--output", verify.output)
      ->check(CLI::IsMember({"json", "csv", "text"}));
  verify_cmd->add_option("--max-n", verify.max_n, "override solver vertex limits");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "verify bounds over generated graphs");
  sweep_cmd->add_option("--n-max", sweep.n_max)->required();
  sweep_cmd->add_option("--k-max", sweep.k_max)->required();
  sweep_cmd->add_option("--count", sweep.count)->required();
  sweep_cmd->add_option("--seed", sweep.seed)->required();
  sweep_cmd->add_option("--exhaustive-upto", sweep.exhaustive_upto);
  sweep_cmd->add_option("--output", sweep.output)->check(CLI::IsMember({"json", "csv"}));
  sweep_cmd->add_option("--max-n", sweep.max_n, "override solver vertex limits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen_cmd) return do_gen(gen, out);
    if (*compute_cmd) return do_compute(compute, in, out, err);
    if (*construct_cmd) return do_construct(construct, in, out);
    if (*verify_cmd) return do_verify(verify, in, out);
    if (*sweep_cmd) return do_sweep(sweep, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}

}  // namespace romandom::cli
