#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "compgraph/classes.hpp"
#include "compgraph/competitivity.hpp"
#include "compgraph/components.hpp"
#include "compgraph/error.hpp"
#include "compgraph/io.hpp"
#include "compgraph/ranking.hpp"
#include "compgraph/synthesis.hpp"
#include "selfcheck.hpp"

namespace compgraph::cli {

namespace {

// Thrown for problems with files rather than their content.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

RankingFamily load_family(const std::string& path) { return parse_family(read_source(path)); }

UndirectedGraph load_graph(const std::string& source) {
  constexpr std::string_view prefix = "fixture:";
  if (source.starts_with(prefix)) return fixture(source.substr(prefix.size())).graph;
  return graph_from_json(read_source(source));
}

std::string set_text(const NodeSet& members) {
  std::string out = "{";
  for (std::size_t k = 0; k < members.size(); ++k) {
    out += (k == 0 ? "" : ",") + std::to_string(members[k]);
  }
  return out + "}";
}

std::string interval_text(const ComponentSet& s) {
  if (!s.interval) return "";
  return " [" + std::to_string(s.interval->first) + "," + std::to_string(s.interval->last) + "]";
}

// Deliberately wrong partition, used to exercise the --verify failure path.
ComponentPartition corrupt(ComponentPartition part) {
  auto& last = part.sets.back();
  if (last.members.size() >= 2) {
    const auto moved = last.members.back();
    last.members.pop_back();
    part.sets.push_back({{moved}, std::nullopt});
  } else if (part.sets.size() >= 2) {
    auto& previous = part.sets[part.sets.size() - 2];
    previous.members.insert(previous.members.end(), last.members.begin(), last.members.end());
    part.sets.pop_back();
  } else {
    part.sets.clear();
  }
  return part;
}

struct Options {
  std::string rankings_path;
  std::string graph_source;
  std::string strategy = "inversion-union";
  std::string format;
  bool verify = false;
  bool inject_fault = false;
  std::size_t bound = kDefaultOrderSearchNodes;
  std::size_t max_r = 8;
  std::size_t budget = 1'000'000;
  std::size_t clique_limit = kDefaultCliqueNodeLimit;
  SelfcheckOptions selfcheck;
};

int cmd_build(const Options& o, std::ostream& out) {
  const auto strategy = parse_build_strategy(o.strategy);
  if (!strategy) throw Error(ErrorKind::InvalidSize, "unknown strategy '" + o.strategy + "'");
  const auto g = build_graph(load_family(o.rankings_path), *strategy);
  out << (o.format == "dot" ? graph_to_dot(g) : graph_to_json(g) + "\n");
  return kOk;
}

int cmd_components(const Options& o, std::ostream& out, std::ostream& err) {
  const auto family = load_family(o.rankings_path);
  auto part = eventual_competitor_sets(family);
  if (o.inject_fault) part = corrupt(std::move(part));

  if (o.verify) {
    const auto oracle = components_oracle(build_graph(family), family);
    if (part.canonical_sets() != oracle.canonical_sets()) {
      err << "verify: interval algorithm and connected components disagree\n";
      return kInternal;
    }
    const auto convex = verify_convexity(family, part);
    if (!convex) {
      const auto& w = *convex.witness;
      err << "verify: ranking " << (w.ranking_index + 1) << " places " << w.x << " between "
          << w.a << " and " << w.b << " of set " << (w.set_index + 1) << "\n";
      return kInternal;
    }
  }
  out << (o.format == "json" ? components_to_json(part) + "\n" : components_to_text(part));
  return kOk;
}

int cmd_cliques(const Options& o, std::ostream& out) {
  const auto g = o.graph_source.empty() ? build_graph(load_family(o.rankings_path))
                                        : load_graph(o.graph_source);
  out << cliques_to_json(sets_of_competitors(g, o.clique_limit)) << "\n";
  return kOk;
}

int cmd_order(const Options& o, std::ostream& out) {
  const auto family = load_family(o.rankings_path);
  const auto ordered = order_components(family, eventual_competitor_sets(family), true);
  const auto ends = extremes(ordered);
  for (std::size_t k = 0; k < ordered.sets.size(); ++k) {
    const auto& s = ordered.sets[k];
    out << (k + 1) << ". " << set_text(s.members) << interval_text(s);
    if (k == 0) out << " leader";
    if (k + 1 == ordered.sets.size()) out << " looser";
    out << "\n";
  }
  out << "leader " << set_text(ends.leader) << interval_text(ordered.sets.front()) << ", looser "
      << set_text(ends.looser) << interval_text(ordered.sets.back()) << "\n";
  return kOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto report = classify(load_graph(o.graph_source), o.bound);
  out << classification_to_json(report) << "\n";
  return report.semi_cohesive.unknown() || report.cohesive.unknown() ? kInconclusive : kOk;
}

int cmd_synthesize(const Options& o, std::ostream& out) {
  SynthesisOptions options;
  options.max_rankings = o.max_r;
  options.max_nodes = o.bound;
  options.step_budget = o.budget;
  const auto status = find_generating_family(load_graph(o.graph_source), options);
  out << "# status: " << to_string(status.outcome) << "\n";
  if (status.found()) out << format_family(*status.witness);
  return status.unknown() ? kInconclusive : kOk;
}

int cmd_selfcheck(const Options& o, std::ostream& out) {
  const auto result = run_selfcheck(o.selfcheck, out);
  return result.ok() ? kOk : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Competitivity graphs of ranking families", "compgraph"};
  app.require_subcommand(1, 1);
  Options o;

  auto* build = app.add_subcommand("build", "Build the competitivity graph of a rankings file");
  build->add_option("rankings", o.rankings_path, "Rankings file ('-' for stdin)")->required();
  build->add_option("--strategy", o.strategy, "all-pairs | consecutive | inversion-union")
      ->check(CLI::IsMember({"all-pairs", "consecutive", "inversion-union"}));
  build->add_option("--format", o.format, "json | dot")->check(CLI::IsMember({"json", "dot"}));

  auto* components = app.add_subcommand("components", "Sets of eventual competitors, leader first");
  components->add_option("rankings", o.rankings_path, "Rankings file")->required();
  components->add_flag("--verify", o.verify, "Cross-check against graph components and convexity");
  components->add_option("--format", o.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  components->add_flag("--inject-fault", o.inject_fault)->group("");

  auto* cliques = app.add_subcommand("cliques", "Sets of competitors (maximal cliques)");
  auto* cliques_file = cliques->add_option("rankings", o.rankings_path, "Rankings file");
  auto* cliques_graph =
      cliques->add_option("--graph", o.graph_source, "Graph JSON file or fixture:NAME");
  cliques_file->excludes(cliques_graph);
  cliques->add_option("--max-nodes", o.clique_limit, "Refuse larger graphs");

  auto* order = app.add_subcommand("order", "Total order of the sets of eventual competitors");
  order->add_option("rankings", o.rankings_path, "Rankings file")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Graph class membership report");
  classify_cmd->add_option("--graph", o.graph_source, "Graph JSON file or fixture:NAME")
      ->required();
  classify_cmd->add_option("--bound", o.bound, "Node limit for the vertex-order searches");

  auto* synthesize = app.add_subcommand("synthesize", "Search for a generating ranking family");
  synthesize->add_option("--graph", o.graph_source, "Graph JSON file or fixture:NAME")->required();
  synthesize->add_option("--max-r", o.max_r, "Maximum number of rankings")
      ->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  synthesize->add_option("--bound", o.bound, "Node limit");
  synthesize->add_option("--budget", o.budget, "Search steps per candidate first ranking");

  auto* selfcheck = app.add_subcommand("selfcheck", "Randomized invariant checks");
  selfcheck->add_option("--trials", o.selfcheck.trials);
  selfcheck->add_option("--seed", o.selfcheck.seed);
  selfcheck->add_option("--max-n", o.selfcheck.max_n)->check(CLI::Range(1, 12));
  selfcheck->add_option("--max-r", o.selfcheck.max_r)->check(CLI::Range(1, 16));

  std::vector<const char*> argv{"compgraph"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const auto code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(o, out);
    if (*components) return cmd_components(o, out, err);
    if (*cliques) {
      if (o.rankings_path.empty() && o.graph_source.empty()) {
        err << "cliques: give a rankings file or --graph\n";
        return kUsage;
      }
      return cmd_cliques(o, out);
    }
    if (*order) return cmd_order(o, out);
    if (*classify_cmd) return cmd_classify(o, out);
    if (*synthesize) return cmd_synthesize(o, out);
    if (*selfcheck) return cmd_selfcheck(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InternalInconsistency: return kInternal;
      case ErrorKind::SearchInconclusive: return kInconclusive;
      default: return kInvalidInput;
    }
  }
  return kUsage;
}

}  // namespace compgraph::cli
