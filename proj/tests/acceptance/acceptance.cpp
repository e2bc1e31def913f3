// Acceptance harness: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Thresholds and time limits are fixed below.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "../oracles.hpp"
#include "nst/cli.hpp"
#include "nst/construct.hpp"
#include "nst/families.hpp"
#include "nst/io.hpp"
#include "nst/separators.hpp"
#include "nst/witness.hpp"

using namespace nst;
namespace fs = std::filesystem;

namespace {

// Criterion 2.
constexpr std::size_t kRandomGraphsPerSize = 500;
constexpr std::size_t kRandomMinSize = 7;
constexpr std::size_t kRandomMaxSize = 40;
// Criterion 3.
constexpr VertexId kCoverIdsBelow = 100;
constexpr std::uint64_t kCoverageMaxBudget = 1'000'000;
constexpr std::uint64_t kCoverageFirstBudget = 100;
constexpr std::size_t kBallCheckTreeLimit = 120;
// Criterion 4.
constexpr std::uint64_t kWitnessBudget = 100'000;
constexpr VertexId kAvoided = 9;
constexpr std::size_t kMinChain = 10;
constexpr std::size_t kFanSize = 5;
constexpr std::size_t kFanCount = 3;
constexpr std::size_t kSeparationK = 5;
constexpr std::size_t kCliqueOrder = 4;
// Criterion 5.
constexpr std::size_t kSeparatorSubsetLimit = 4;
// Criterion 6.
constexpr std::size_t kMinRadius = 4;
constexpr std::size_t kMaxRadius = 8;

// Seconds allowed per criterion.
constexpr double kTimeLimit[] = {0, 120, 120, 300, 120, 180, 60, 60};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string failure;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      failure = what;
    }
  }
};

std::shared_ptr<const Graph> fam(const std::string& s) { return make_family(parse_family_spec(s)); }

bool nested(const RootedTree& big, const RootedTree& small) {
  if (big.root() != small.root()) return false;
  for (VertexId v : small.vertex_set()) {
    if (!big.contains(v) || big.parent(v) != small.parent(v)) return false;
  }
  return true;
}

Outcome exhaustive_small() {
  Outcome o;
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6 && o.pass; ++n) {
    oracle::for_each_labeled_graph(n, [&](const oracle::EdgeList& edges) {
      if (!o.pass) return;
      FiniteGraph g(oracle::iota_ids(n), edges);
      if (!oracle::is_connected(oracle::adjacency(g))) return;
      auto r = build_finite(g, CoverAssignment::singleton());
      bool normal = is_normal(g, r.tree).normal;
      std::ostringstream tag;
      tag << "n=" << n << " edges=" << edges.size() << " graph #" << graphs;
      o.require(r.spanning && r.tree.size() == n, "not spanning: " + tag.str());
      o.require(normal, "not normal: " + tag.str());
      o.require(normal == is_normal_bruteforce(g, r.tree), "checkers disagree: " + tag.str());
      ++graphs;
    });
  }
  o.detail = std::to_string(graphs) + " labeled connected graphs on 1..6 vertices";
  return o;
}

Outcome random_finite() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t graphs = 0;
  for (std::size_t n = kRandomMinSize; n <= kRandomMaxSize && o.pass; ++n) {
    std::uniform_real_distribution<double> density(0.0, 0.3);
    std::uniform_int_distribution<std::uint64_t> level(0, n);
    for (std::size_t i = 0; i < kRandomGraphsPerSize && o.pass; ++i) {
      FiniteGraph g(oracle::iota_ids(n), oracle::random_connected(n, density(rng), rng));
      std::map<VertexId, std::uint64_t> levels;
      for (VertexId v = 0; v < n; ++v) levels[v] = level(rng);
      auto r = build_finite(g, CoverAssignment::table(levels));
      std::string tag = "n=" + std::to_string(n) + " sample " + std::to_string(i);
      o.require(r.spanning && r.tree.size() == n, "not spanning: " + tag);
      o.require(is_normal(g, r.tree).normal, "not normal: " + tag);
      ++graphs;
    }
  }
  o.detail = std::to_string(graphs) + " random connected graphs, sizes " +
             std::to_string(kRandomMinSize) + ".." + std::to_string(kRandomMaxSize) +
             ", random table covers";
  return o;
}

Outcome infinite_coverage() {
  Outcome o;
  std::ostringstream detail;
  for (const char* name : {"binary_tree", "grid2d", "komega", "star_of_rays:4"}) {
    auto g = fam(name);
    VertexId root = *g->next_vertex(std::nullopt);
    std::vector<VertexId> wanted;
    for (VertexId v = 0; v < kCoverIdsBelow; ++v) {
      if (g->has_vertex(v)) wanted.push_back(v);
    }
    RootedTree prev(root);
    std::optional<std::uint64_t> covered_at;
    std::size_t steps_checked = 0;
    for (std::uint64_t budget = kCoverageFirstBudget; budget <= kCoverageMaxBudget && !covered_at;
         budget *= 2) {
      BuildOptions opts;
      opts.verify_chain = true;
      opts.on_step = [&](const RootedTree& t, const StepEvent&) {
        ++steps_checked;
        if (t.size() > kBallCheckTreeLimit) return;
        std::vector<VertexId> seeds(t.vertex_set().begin(), t.vertex_set().end());
        Ball b = ball(*g, seeds, 1, 64);
        o.require(is_normal(*b.graph, t).normal, std::string(name) + ": tree not normal on its ball");
      };
      BuildReport r;
      try {
        r = build_budgeted(*g, CoverAssignment::singleton(), budget, root, opts);
      } catch (const std::exception& e) {
        o.require(false, std::string(name) + ": " + e.what());
        return o;
      }
      o.require(nested(r.tree, prev), std::string(name) + ": coverage not monotone at budget " +
                                          std::to_string(budget));
      prev = r.tree;
      bool all = std::all_of(wanted.begin(), wanted.end(), [&](VertexId v) { return r.tree.contains(v); });
      if (all) covered_at = budget;
    }
    o.require(covered_at.has_value(), std::string(name) + ": ids below 100 not covered by budget 1e6");
    detail << name << " at " << (covered_at ? std::to_string(*covered_at) : "-") << " ticks ("
           << steps_checked << " steps checked); ";
  }
  o.detail = detail.str();
  return o;
}

Outcome failure_witness() {
  Outcome o;
  auto g = fam("komega");
  auto cover = CoverAssignment::constant(0).with_avoid({kAvoided});
  WitnessParams params;
  params.budget = kWitnessBudget;
  params.clique_order = kCliqueOrder;
  params.fan_size = kFanSize;
  params.fan_count = kFanCount;
  params.separation_k = kSeparationK;
  auto bundle = run_witness(*g, cover, params);
  o.require(bundle.has_value(), "nothing to witness");
  if (!bundle) return o;
  const auto& b = *bundle;
  o.require(!b.probe.snapshot.tree.contains(kAvoided), "vertex 9 was covered");
  o.require(b.probe.rep == kAvoided, "probe does not name the component of 9");
  o.require(b.chain.chain.size() >= kMinChain, "attachment chain shorter than 10");

  auto doubled = build_budgeted(*g, cover, 2 * kWitnessBudget, 0);
  auto probe2 = uncovered_probe(*g, doubled, cover);
  auto chain2 = attachment_chain(*g, probe2, 2 * kWitnessBudget);
  o.require(!doubled.tree.contains(kAvoided), "vertex 9 covered after doubling");
  o.require(chain2.chain.size() > b.chain.chain.size(), "chain did not grow after doubling");

  o.require(b.fans.size() == kFanCount, "wrong number of fans");
  for (const auto& f : b.fans) {
    o.require(f.status == Evidence::Verified && f.fan.paths.size() >= kFanSize,
              "fan at " + std::to_string(f.fan.center) + " too small");
  }
  for (std::size_t i = 0; i < b.fans.size() && i < b.chain.chain.size(); ++i) {
    o.require(b.fans[i].fan.center == b.chain.chain[i], "fan not at a lowest chain vertex");
  }
  o.require(b.inseparability.status == Evidence::Verified &&
                b.inseparability.paths.size() >= kSeparationK,
            "fewer than 5 disjoint U-R paths");
  const auto& k = b.clique.subdivision;
  o.require(b.clique.status == Evidence::Verified && k.order() == kCliqueOrder,
            "no K_4 subdivision");
  o.require(verify_subdivision(*g, k).ok, "K_4 subdivision fails verification");
  for (VertexId v : k.branch) {
    o.require(std::find(b.chain.chain.begin(), b.chain.chain.end(), v) != b.chain.chain.end(),
              "branch vertex outside the chain");
  }
  o.detail = "chain " + std::to_string(b.chain.chain.size()) + " then " +
             std::to_string(chain2.chain.size()) + ", fans " + std::to_string(kFanCount) + "x" +
             std::to_string(kFanSize) + ", U-R paths " + std::to_string(b.inseparability.paths.size()) +
             ", K_4 on {" + [&] {
               std::string s;
               for (VertexId v : k.branch) s += (s.empty() ? "" : ",") + std::to_string(v);
               return s;
             }() + "}";
  return o;
}

Outcome menger_duality() {
  Outcome o;
  std::size_t pairs = 0;
  std::size_t graphs = 0;
  auto check = [&](std::size_t n, const oracle::EdgeList& edges) {
    if (!o.pass) return;
    FiniteGraph g(oracle::iota_ids(n), edges);
    auto adj = oracle::adjacency(g);
    ++graphs;
    for (VertexId a = 0; a < n; ++a) {
      for (VertexId b = a + 1; b < n; ++b) {
        if (adj[a].count(b)) continue;
        auto r = max_disjoint_paths(g, {a}, {b});
        std::size_t brute = oracle::min_separator_size(adj, a, b, kSeparatorSubsetLimit);
        o.require(r.count() == brute && r.separator.size() == brute &&
                      !check_path_system(g, r.paths, {a}, {b}, true, true) &&
                      is_separator(g, {a}, {b}, r.separator),
                  "mismatch on n=" + std::to_string(n) + " pair " + std::to_string(a) + "," +
                      std::to_string(b));
        ++pairs;
      }
    }
  };
  for (std::size_t n = 2; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [&](const oracle::EdgeList& e) { check(n, e); });
  }
  // Every graph on 7 vertices is a 6-vertex graph plus one vertex joined to
  // some subset, so this covers all 7-vertex graphs up to isomorphism.
  for (const auto& base : oracle::isomorphism_classes(6)) {
    for (std::uint64_t mask = 0; mask < 64; ++mask) {
      oracle::EdgeList e = base;
      for (VertexId v = 0; v < 6; ++v) {
        if (mask >> v & 1) e.emplace_back(v, 6);
      }
      check(7, e);
    }
  }
  o.detail = std::to_string(pairs) + " nonadjacent pairs in " + std::to_string(graphs) +
             " graphs (labeled n<=6, n=7 by extension of the 6-vertex classes)";
  return o;
}

Outcome level_separation() {
  Outcome o;
  std::map<std::size_t, bool> verdict_by_level;
  std::size_t checks = 0;
  for (std::size_t radius = kMinRadius; radius <= kMaxRadius; ++radius) {
    Ball b = ball(*fam("binary_tree"), 1, radius);
    auto r = build_finite(*b.graph, CoverAssignment::singleton());
    o.require(r.spanning && is_normal(*b.graph, r.tree).normal, "tree on the ball is not normal");
    auto lv = levels(r.tree);
    for (std::size_t i = 1; i + 1 < lv.size(); ++i) {
      VertexSet level(lv[i].begin(), lv[i].end());
      VertexSet above;
      for (VertexId v : lv[i]) {
        for (VertexId w : r.tree.uptree(v)) {
          if (w != v) above.insert(w);
        }
      }
      bool sep = is_separator(*b.graph, {r.tree.root()}, above, level);
      auto [it, fresh] = verdict_by_level.emplace(i, sep);
      o.require(sep, "level " + std::to_string(i) + " does not separate at radius " + std::to_string(radius));
      o.require(fresh || it->second == sep, "verdict changes across radii");
      ++checks;
    }
  }
  o.detail = std::to_string(checks) + " level separations on radii " + std::to_string(kMinRadius) +
             ".." + std::to_string(kMaxRadius);
  return o;
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nst");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

Outcome determinism() {
  Outcome o;
  fs::path dir = fs::temp_directory_path() / ("nst_acceptance_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  struct Case {
    std::string name;
    std::vector<std::string> args;
  };
  std::vector<Case> cases = {
      {"grid", {"build", "--graph", "grid2d", "--budget", "20000"}},
      {"komega", {"build", "--graph", "komega", "--cover", "constant:0", "--avoid", "9", "--budget", "20000"}},
      {"finite", {"build", "--graph", "complete:7"}},
  };
  std::size_t replays = 0;
  for (const auto& c : cases) {
    for (const char* run : {"1", "2"}) {
      auto args = c.args;
      args.push_back("--out");
      args.push_back((dir / (c.name + run)).string());
      o.require(cli(args) == kExitOk, c.name + ": build failed");
    }
    if (!o.pass) break;
    auto p1 = dir / (c.name + "1");
    auto p2 = dir / (c.name + "2");
    std::string tree1 = io::read_file(p1.string() + ".tree.json");
    std::string log1 = io::read_file(p1.string() + ".events.jsonl");
    o.require(tree1 == io::read_file(p2.string() + ".tree.json"), c.name + ": trees differ");
    o.require(log1 == io::read_file(p2.string() + ".events.jsonl"), c.name + ": logs differ");
    RootedTree tree = io::tree_from_json(io::parse_json(tree1, "tree"));
    o.require(replay(tree.root(), io::parse_event_log(log1)) == tree, c.name + ": replay differs");
    ++replays;
  }
  for (const char* run : {"1", "2"}) {
    o.require(cli({"witness", "--graph", "komega", "--cover", "constant:0", "--avoid", "9", "--budget",
                   "20000", "--out", (dir / (std::string("w") + run + ".json")).string()}) == kExitOk,
              "witness failed");
  }
  if (o.pass) {
    o.require(io::read_file(dir / "w1.json") == io::read_file(dir / "w2.json"), "witness bundles differ");
  }
  fs::remove_all(dir);
  o.detail = std::to_string(cases.size()) + " build pairs and one witness pair byte-identical, " +
             std::to_string(replays) + " replays exact";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exhaustive finite correctness", exhaustive_small},
      {"randomized finite correctness", random_finite},
      {"infinite coverage", infinite_coverage},
      {"failure witness", failure_witness},
      {"Menger duality", menger_duality},
      {"level separation", level_separation},
      {"determinism and replay", determinism},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::size_t index = i + 1;
    o.require(secs <= kTimeLimit[index], "over the time limit");
    all = all && o.pass;
    std::cout << "criterion " << index << " " << (o.pass ? "PASS" : "FAIL") << " ["
              << criteria[i].first << "] " << o.detail;
    if (!o.pass) std::cout << " FAILURE: " << o.failure;
    std::cout << " (" << std::fixed << std::setprecision(1) << secs << " s)\n" << std::flush;
  }
  return all ? 0 : 1;
}
