#include "nst/cli.hpp"

#include <filesystem>
#include <limits>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "nst/construct.hpp"
#include "nst/cover.hpp"
#include "nst/errors.hpp"
#include "nst/families.hpp"
#include "nst/io.hpp"
#include "nst/separators.hpp"
#include "nst/tree.hpp"
#include "nst/witness.hpp"

namespace nst {

namespace {

constexpr std::uint64_t kDefaultBudget = 100'000;

std::shared_ptr<const Graph> open_graph(const std::string& text) {
  if (text.rfind("file:", 0) == 0) return std::make_shared<FiniteGraph>(io::load_graph(text.substr(5)));
  if (text.size() > 5 && text.ends_with(".json")) return std::make_shared<FiniteGraph>(io::load_graph(text));
  return make_family(parse_family_spec(text));
}

std::uint64_t parse_natural(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError(what + ": \"" + text + "\" is not a natural number");
  }
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw DomainError(what + ": \"" + text + "\" is out of range");
  }
}

CoverAssignment open_cover(const std::string& text, const std::vector<VertexId>& avoid) {
  CoverAssignment cover;
  if (text == "singleton") {
    cover = CoverAssignment::singleton();
  } else if (text.rfind("constant:", 0) == 0) {
    cover = CoverAssignment::constant(parse_natural(text.substr(9), "cover level"));
  } else if (text.rfind("table:", 0) == 0) {
    std::string path = text.substr(6);
    cover = CoverAssignment::table(io::cover_table_from_json(io::parse_json(io::read_file(path), path)));
  } else {
    throw DomainError("unknown cover \"" + text + "\"; expected singleton, constant:c or table:file");
  }
  if (avoid.empty()) return cover;
  return cover.with_avoid(VertexSet(avoid.begin(), avoid.end()));
}

VertexId smallest_vertex(const Graph& g) {
  auto v = g.next_vertex(std::nullopt);
  if (!v) throw DomainError(g.name() + " has no vertices");
  return *v;
}

std::string id_list(const std::vector<VertexId>& ids, std::size_t limit = 10) {
  std::ostringstream ss;
  for (std::size_t i = 0; i < ids.size() && i < limit; ++i) ss << (i ? ", " : "") << ids[i];
  if (ids.size() > limit) ss << ", ... (" << ids.size() << " total)";
  return ss.str();
}

struct BuildArgs {
  std::string graph;
  std::string cover = "singleton";
  std::vector<VertexId> avoid;
  std::optional<std::uint64_t> budget;
  std::optional<VertexId> root;
  std::string out = "nst_build";
  std::string dot;
};

int cmd_build(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  auto g = open_graph(a.graph);
  CoverAssignment cover = open_cover(a.cover, a.avoid);
  const auto* finite = dynamic_cast<const FiniteGraph*>(g.get());
  VertexId root = a.root.value_or(smallest_vertex(*g));

  BuildReport report;
  if (finite && !a.budget && root == smallest_vertex(*g)) {
    report = build_finite(*finite, cover);
  } else {
    std::uint64_t budget = a.budget.value_or(finite ? std::numeric_limits<std::uint64_t>::max() - 1
                                                    : kDefaultBudget);
    report = build_budgeted(*g, cover, budget, root);
  }
  if (finite) {
    auto check = is_normal(*finite, report.tree);
    if (!check.normal) throw InvariantViolation("constructed tree is not normal: " + check.describe());
  }

  io::write_file(a.out + ".tree.json", io::tree_to_json(report.tree).dump(2) + "\n");
  io::write_file(a.out + ".events.jsonl", io::event_log(report.events));
  if (!a.dot.empty()) io::write_file(a.dot, io::tree_dot(*g, report.tree));
  if (!report.notices.empty()) err << report.notices.size() << " notices during the run\n";

  if (report.spanning) {
    out << "spanning: normal tree on " << report.tree.size() << " vertices, " << report.steps
        << " steps, " << report.ticks << " ticks\n";
  } else {
    out << "not spanning after " << report.ticks << " ticks: " << report.tree.size()
        << " vertices covered, ";
    if (report.pending.empty()) {
      out << "no pending component, discovery still open";
    } else {
      out << report.pending.size() << " pending components (reps: " << id_list(report.pending)
          << ")";
    }
    if (!report.persistent.empty()) out << ", persistent: " << id_list(report.persistent);
    out << "\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& graph_path, const std::string& tree_path, const std::string& dot,
               std::ostream& out) {
  FiniteGraph g = io::load_graph(graph_path);
  RootedTree t = io::load_tree(tree_path);
  require_subtree(g, t);
  auto report = is_normal(g, t);
  if (!dot.empty()) io::write_file(dot, io::tree_dot(g, t));
  out << report.describe() << "\n";
  return report.normal ? kExitOk : kExitViolation;
}

struct WitnessArgs {
  std::string graph;
  std::string cover = "singleton";
  std::vector<VertexId> avoid;
  std::uint64_t budget = kDefaultBudget;
  std::size_t m = 4;
  std::size_t k = 5;
  std::string out = "witness.json";
  std::string dot;
};

int cmd_witness(const WitnessArgs& a, std::ostream& out) {
  auto g = open_graph(a.graph);
  CoverAssignment cover = open_cover(a.cover, a.avoid);
  WitnessParams params;
  params.budget = a.budget;
  params.clique_order = a.m;
  params.fan_size = a.k;
  params.separation_k = a.k;
  auto bundle = run_witness(*g, cover, params);
  if (!bundle) {
    out << "nothing to witness: no component was left over from a step within " << a.budget
        << " ticks\n";
    return kExitNothingToWitness;
  }
  io::write_file(a.out, io::witness_to_json(*bundle).dump(2) + "\n");
  if (!a.dot.empty()) io::write_file(a.dot, io::witness_dot(*bundle));

  std::size_t fans_ok = 0;
  for (const auto& f : bundle->fans) fans_ok += f.status == Evidence::Verified;
  std::size_t high_ok = 0;
  for (const auto& h : bundle->high_edges) high_ok += h.status == Evidence::Verified;
  out << (bundle->verified() ? "verified" : "insufficient evidence") << ": component "
      << bundle->probe.rep << " (n_C = " << bundle->probe.cover_index << "), chain length "
      << bundle->chain.chain.size() << ", fans " << fans_ok << "/" << bundle->fans.size()
      << " of size " << a.k << ", disjoint U-R paths " << bundle->inseparability.paths.size()
      << "/" << a.k << ", high edges " << high_ok << "/" << bundle->high_edges.size() << ", K_"
      << a.m << " subdivision " << to_string(bundle->clique.status) << "\n";
  return bundle->verified() ? kExitOk : kExitInsufficient;
}

int cmd_separate(const std::string& graph_path, const std::vector<VertexId>& a,
                 const std::vector<VertexId>& b, std::size_t cap, const std::string& dot,
                 std::ostream& out) {
  FiniteGraph g = io::load_graph(graph_path);
  DisjointPathOptions opts;
  opts.cap = cap;
  auto r = max_disjoint_paths(g, VertexSet(a.begin(), a.end()), VertexSet(b.begin(), b.end()), opts);
  if (!dot.empty()) io::write_file(dot, io::separation_dot(g, r));
  out << io::separation_to_json(r).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normal spanning trees on finite and lazily presented infinite graphs", "nst"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build", "Grow a normal tree and write it with its event log");
  b->add_option("--graph", build.graph, "family spec (path:9, komega, ...) or file:graph.json")->required();
  b->add_option("--cover", build.cover, "singleton, constant:c or table:levels.json");
  b->add_option("--avoid", build.avoid, "vertices the cover pick avoids")->delimiter(',');
  b->add_option("--budget", build.budget, "scheduler ticks");
  b->add_option("--root", build.root, "root vertex (default: smallest id)");
  b->add_option("--out", build.out, "output prefix for .tree.json and .events.jsonl");
  b->add_option("--dot", build.dot, "write the tree as DOT");

  std::string verify_graph;
  std::string verify_tree;
  std::string verify_dot;
  auto* v = app.add_subcommand("verify", "Check a tree for normality in a finite graph");
  v->add_option("--graph", verify_graph, "graph JSON")->required();
  v->add_option("--tree", verify_tree, "tree JSON")->required();
  v->add_option("--dot", verify_dot, "write the tree as DOT");

  WitnessArgs witness;
  auto* w = app.add_subcommand("witness", "Run the failure analysis on a budgeted run");
  w->add_option("--graph", witness.graph, "family spec or file:graph.json")->required();
  w->add_option("--cover", witness.cover, "singleton, constant:c or table:levels.json");
  w->add_option("--avoid", witness.avoid, "vertices the cover pick avoids")->delimiter(',');
  w->add_option("--budget", witness.budget, "scheduler ticks");
  w->add_option("-m", witness.m, "order of the clique subdivision")->check(CLI::Range(2, 64));
  w->add_option("-k", witness.k, "fan size and number of disjoint U-R paths")->check(CLI::PositiveNumber);
  w->add_option("--out", witness.out, "witness bundle JSON");
  w->add_option("--dot", witness.dot, "write the witness as DOT");

  std::string sep_graph;
  std::vector<VertexId> sep_a;
  std::vector<VertexId> sep_b;
  std::size_t sep_cap = kNoCap;
  std::string sep_dot;
  auto* s = app.add_subcommand("separate", "Disjoint A-B paths and a minimum separator");
  s->add_option("--graph", sep_graph, "graph JSON")->required();
  s->add_option("--a", sep_a, "comma-separated ids")->required()->delimiter(',');
  s->add_option("--b", sep_b, "comma-separated ids")->required()->delimiter(',');
  s->add_option("--cap", sep_cap, "stop after this many paths");
  s->add_option("--dot", sep_dot, "write the graph with paths and separator as DOT");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*b) return cmd_build(build, out, err);
    if (*v) return cmd_verify(verify_graph, verify_tree, verify_dot, out);
    if (*w) return cmd_witness(witness, out);
    return cmd_separate(sep_graph, sep_a, sep_b, sep_cap, sep_dot, out);
  } catch (const InvariantViolation& e) {
    err << "invariant violation: " << e.what() << "\n";
    return kExitViolation;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const RefusalError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kExitViolation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace nst
