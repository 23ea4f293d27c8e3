// lassotool: classify, build and inspect cord sets for rooted X-trees.
//
// Exit status: 0 on success, 1 when --oracle disagrees with the graph
// characterization, 2 on bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "cordlasso/builders.hpp"
#include "cordlasso/child_edge_graph.hpp"
#include "cordlasso/cord_io.hpp"
#include "cordlasso/errors.hpp"
#include "cordlasso/lasso.hpp"
#include "cordlasso/newick.hpp"
#include "cordlasso/oracle.hpp"
#include "json.hpp"

using namespace cordlasso;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kBadInput = 2;

constexpr LassoKind kKinds[] = {LassoKind::kEquidistant, LassoKind::kWeak, LassoKind::kTopological};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// Wraps parse errors with the file name.
template <class F>
auto with_file(const std::string& path, F&& parse) {
  try {
    return parse(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ":" + e.what());
  }
}

ParsedNewick load_tree(const std::string& path) {
  return with_file(path, [](const std::string& text) { return parse_newick(text); });
}

LeafSet leaf_set(const XTree& t) { return {t.labels().begin(), t.labels().end()}; }

CordFile load_cords(const std::string& path, const XTree& t) {
  return with_file(path, [&](const std::string& text) { return parse_cord_file(text, leaf_set(t)); });
}

std::string cluster_name(const XTree& t, Vertex v) {
  std::string out;
  for (const auto& leaf : leaves_below(t, v)) out += (out.empty() ? "" : ",") + leaf;
  return out;
}

json clusters(const XTree& t, const std::vector<Vertex>& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(cluster_name(t, v));
  return out;
}

std::vector<LeafLabel> split_labels(const std::string& text) {
  std::vector<LeafLabel> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!is_valid_label(item)) throw InputError("invalid leaf label '" + item + "'");
    out.push_back(item);
  }
  LeafSet distinct(out.begin(), out.end());
  if (distinct.size() != out.size()) throw InputError("repeated leaf label in --leaves");
  return out;
}

unsigned oracle_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// classify ----------------------------------------------------------------

struct ClassifyArgs {
  std::string tree;
  std::string cords;
  bool oracle = false;
  bool json_only = false;
};

int run_classify(const ClassifyArgs& args) {
  const auto parsed = load_tree(args.tree);
  const XTree& t = parsed.tree;
  const auto cords = load_cords(args.cords, t).cords;
  const auto report = classify(t, cords);

  json j{{"v", 1},
         {"tree", print_newick(t)},
         {"cords", cords.size()},
         {"equidistant", report.equidistant},
         {"weak", report.weak},
         {"topological", report.topological},
         {"strong", report.strong},
         {"failing",
          {{"equidistant", clusters(t, report.failing_equidistant)},
           {"weak", clusters(t, report.failing_weak)},
           {"topological", clusters(t, report.failing_topological)}}}};

  bool agree = true;
  std::optional<OracleReport> oracle;
  if (args.oracle) {
    if (t.leaf_count() > 5) throw InputError("--oracle supports at most 5 leaves");
    oracle = oracle_classify(t, cords, {oracle_threads(), nullptr});
    json o;
    for (auto kind : kKinds) {
      o[std::string(to_string(kind))] = oracle->verdict(kind).holds;
      agree = agree && oracle->verdict(kind).holds == report.holds(kind);
    }
    j["oracle"] = o;
    j["agree"] = agree;
  }

  if (!args.json_only) {
    std::cout << "tree         " << print_newick(t) << "\n";
    std::cout << "cords        " << cords.size() << "\n";
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    auto line = [&](std::string_view name, bool value, const std::vector<Vertex>& failing,
                    std::optional<bool> checked) {
      std::cout << name << std::string(13 - name.size(), ' ') << flag(value);
      if (checked) std::cout << "  (oracle: " << flag(*checked) << ")";
      if (!failing.empty()) {
        std::cout << "  failing at";
        for (Vertex v : failing) std::cout << " {" << cluster_name(t, v) << "}";
      }
      std::cout << "\n";
    };
    auto checked = [&](LassoKind k) {
      return oracle ? std::optional<bool>(oracle->verdict(k).holds) : std::nullopt;
    };
    line("equidistant", report.equidistant, report.failing_equidistant, checked(LassoKind::kEquidistant));
    line("weak", report.weak, report.failing_weak, checked(LassoKind::kWeak));
    line("topological", report.topological, report.failing_topological, checked(LassoKind::kTopological));
    line("strong", report.strong, {}, std::nullopt);
    if (oracle && !agree) std::cout << "DISAGREEMENT between characterization and oracle\n";
  }
  std::cout << j.dump() << "\n";
  return agree ? kOk : kDisagree;
}

// build -------------------------------------------------------------------

struct BuildArgs {
  std::string tree;
  std::string kind;
  std::string partition;
  std::optional<std::uint64_t> seed;
};

int run_build(const BuildArgs& args) {
  const XTree t = load_tree(args.tree).tree;
  if (t.leaf_count() < 3) throw InputError("need at least three leaves");
  CordSet out;
  if (args.kind == "equidistant") {
    out = min_equidistant_lasso(t);
  } else if (args.kind == "weak") {
    out = min_weak_lasso(t);
  } else if (args.kind == "topological") {
    out = min_topological_lasso(t);
  } else if (args.kind == "circular") {
    out = circular_lasso(circular_order(t, args.seed));
  } else if (args.kind == "bipartition") {
    if (args.partition.empty()) throw InputError("--kind bipartition needs --partition FILE");
    out = bipartition_lasso(with_file(args.partition, [&](const std::string& text) {
      return parse_partition_file(text, leaf_set(t));
    }));
  } else {
    throw InputError("unknown kind '" + args.kind + "'");
  }
  std::cout << format_cords(out);
  return kOk;
}

// enumerate ---------------------------------------------------------------

struct EnumerateArgs {
  std::string leaves;
  bool binary = false;
  bool count_only = false;
};

int run_enumerate(const EnumerateArgs& args) {
  const auto x = split_labels(args.leaves);
  const auto trees = args.binary ? enumerate_binary_xtrees(x) : enumerate_xtrees(x);
  if (args.count_only) {
    std::cout << trees.size() << "\n";
  } else {
    for (const auto& t : trees) std::cout << print_newick(t) << "\n";
  }
  return kOk;
}

// witness -----------------------------------------------------------------

struct WitnessArgs {
  std::string tree;
  std::string cords;
  std::string kind;
};

int run_witness(const WitnessArgs& args) {
  const XTree t = load_tree(args.tree).tree;
  const auto cords = load_cords(args.cords, t).cords;
  const auto kind = parse_lasso_kind(args.kind);
  if (t.leaf_count() < 3) throw InputError("need at least three leaves");
  const auto verdict = oracle_lasso(t, cords, kind, {oracle_threads(), nullptr});
  if (!verdict.witness) {
    std::cout << "none\n";
    return kOk;
  }
  const auto& w = *verdict.witness;
  std::cout << print_newick(t, w.heights_t) << "\n" << print_newick(w.rival_tree, w.heights_rival) << "\n";
  return kOk;
}

// distances ---------------------------------------------------------------

struct DistancesArgs {
  std::string tree;
  std::string cords;
};

int run_distances(const DistancesArgs& args) {
  const auto parsed = load_tree(args.tree);
  if (!parsed.weights) throw InputError(args.tree + ": tree has no branch lengths");
  const auto hm = from_edge_weights(parsed.tree, *parsed.weights);
  const auto cords = load_cords(args.cords, parsed.tree).cords;
  std::map<Cord, Rational> d;
  for (const auto& c : cords) d.emplace(c, leaf_distance(parsed.tree, hm, c.a, c.b));
  std::cout << format_distances(d);
  return kOk;
}

// dot ---------------------------------------------------------------------

struct DotArgs {
  std::string tree;
  std::string cords;
};

int run_dot(const DotArgs& args) {
  const XTree t = load_tree(args.tree).tree;
  const auto cords = load_cords(args.cords, t).cords;
  for (const auto& [v, g] : build_all_child_edge_graphs(t, cords)) std::cout << to_dot(t, g);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decide and build cord-set lassos for rooted X-trees"};
  app.require_subcommand(1);

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Report which lasso kinds a cord set is");
  classify_cmd->add_option("--tree", classify_args.tree, "Newick file")->required();
  classify_cmd->add_option("--cords", classify_args.cords, "Cord file")->required();
  classify_cmd->add_flag("--oracle", classify_args.oracle, "Also decide from the definitions (at most 5 leaves)");
  classify_cmd->add_flag("--json-only", classify_args.json_only, "Print only the JSON line");

  BuildArgs build_args;
  auto* build_cmd = app.add_subcommand("build", "Print a cord set of the requested kind");
  build_cmd->add_option("--tree", build_args.tree, "Newick file")->required();
  build_cmd->add_option("--kind", build_args.kind, "Construction")
      ->required()
      ->check(CLI::IsMember({"equidistant", "weak", "topological", "circular", "bipartition"}));
  build_cmd->add_option("--partition", build_args.partition, "Partition file (two lines: A, then B)");
  build_cmd->add_option("--seed", build_args.seed, "Shuffle child order for --kind circular");

  EnumerateArgs enumerate_args;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "List every X-tree on a leaf set");
  enumerate_cmd->add_option("--leaves", enumerate_args.leaves, "Comma-separated labels, 2 to 6")->required();
  enumerate_cmd->add_flag("--binary", enumerate_args.binary, "Binary trees only");
  enumerate_cmd->add_flag("--count-only", enumerate_args.count_only, "Print the count only");

  WitnessArgs witness_args;
  auto* witness_cmd = app.add_subcommand("witness", "Show two L-isometric weighted trees breaking a lasso kind");
  witness_cmd->add_option("--tree", witness_args.tree, "Newick file")->required();
  witness_cmd->add_option("--cords", witness_args.cords, "Cord file")->required();
  witness_cmd->add_option("--kind", witness_args.kind, "Lasso kind")
      ->required()
      ->check(CLI::IsMember({"equidistant", "weak", "topological"}));

  DistancesArgs distances_args;
  auto* distances_cmd = app.add_subcommand("distances", "Partial distance file from a weighted tree");
  distances_cmd->add_option("--tree", distances_args.tree, "Weighted Newick file")->required();
  distances_cmd->add_option("--cords", distances_args.cords, "Cord file")->required();

  DotArgs dot_args;
  auto* dot_cmd = app.add_subcommand("dot", "Child-edge graphs in Graphviz format");
  dot_cmd->add_option("--tree", dot_args.tree, "Newick file")->required();
  dot_cmd->add_option("--cords", dot_args.cords, "Cord file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*classify_cmd) return run_classify(classify_args);
    if (*build_cmd) return run_build(build_args);
    if (*enumerate_cmd) return run_enumerate(enumerate_args);
    if (*witness_cmd) return run_witness(witness_args);
    if (*distances_cmd) return run_distances(distances_args);
    if (*dot_cmd) return run_dot(dot_args);
  } catch (const Error& e) {
    std::cerr << "lassotool: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
