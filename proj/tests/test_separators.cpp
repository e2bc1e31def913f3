#include <random>

#include "doctest.h"
#include "nst/errors.hpp"
#include "nst/families.hpp"
#include "nst/separators.hpp"
#include "oracles.hpp"

using namespace nst;

namespace {

FiniteGraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return FiniteGraph(oracle::iota_ids(n), edges);
}

FiniteGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return FiniteGraph(oracle::iota_ids(n), edges);
}

// Smallest S within V (ends allowed) leaving no path from A - S to B - S.
std::size_t brute_set_separator(const oracle::Adj& adj, const std::set<VertexId>& a,
                                const std::set<VertexId>& b) {
  const std::size_t n = adj.size();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    auto size = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (size >= best) continue;
    std::set<VertexId> s;
    for (VertexId v = 0; v < n; ++v) {
      if (mask >> v & 1) s.insert(v);
    }
    bool cut = true;
    for (VertexId x : a) {
      if (s.count(x)) continue;
      for (VertexId y : oracle::reach(adj, x, s)) cut = cut && !b.count(y);
    }
    if (cut) best = size;
  }
  return best;
}

void check_duality(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                   const SeparationResult& r, bool share_a, bool share_b) {
  REQUIRE_FALSE(r.capped);
  auto problem = check_path_system(g, r.paths, a, b, share_a, share_b);
  INFO((problem ? *problem : std::string("ok")));
  REQUIRE_FALSE(problem.has_value());
  REQUIRE(r.separator.size() + r.direct_edges.size() == r.count());
  // Every path that is not a direct edge meets the separator exactly once.
  for (const auto& p : r.paths) {
    std::size_t hits = 0;
    for (VertexId v : p) hits += r.separator.count(v);
    bool direct = p.size() == 2 && std::find(r.direct_edges.begin(), r.direct_edges.end(),
                                             Edge{std::min(p[0], p[1]), std::max(p[0], p[1])}) !=
                                       r.direct_edges.end();
    REQUIRE(hits == (direct ? 0u : 1u));
  }
  if (r.direct_edges.empty()) REQUIRE(is_separator(g, a, b, r.separator));
}

}  // namespace

TEST_CASE("max_disjoint_paths examples") {
  auto p5 = path_graph(5);
  auto r = max_disjoint_paths(p5, {0}, {4});
  CHECK(r.count() == 1);
  CHECK(r.paths[0] == Path{0, 1, 2, 3, 4});
  REQUIRE(r.separator.size() == 1);
  CHECK(*r.separator.begin() >= 1);
  CHECK(*r.separator.begin() <= 3);

  auto k5 = complete(5);
  auto rk = max_disjoint_paths(k5, {0}, {4});
  std::size_t frozen = oracle::max_internally_disjoint(oracle::adjacency(k5), 0, 4);
  CHECK(frozen == 4);
  CHECK(rk.count() == frozen);
  CHECK(rk.direct_edges == std::vector<Edge>{{0, 4}});
  CHECK(rk.inseparable());
  CHECK(rk.separator == VertexSet{1, 2, 3});

  FiniteGraph two({0, 1, 2, 3}, {{0, 1}, {2, 3}});
  auto rd = max_disjoint_paths(two, {0}, {3});
  CHECK(rd.count() == 0);
  CHECK(rd.separator.empty());

  auto capped = max_disjoint_paths(k5, {0}, {4}, {2});
  CHECK(capped.count() == 2);
  CHECK(capped.capped);
  CHECK(capped.separator.empty());
  CHECK_FALSE(check_path_system(k5, capped.paths, {0}, {4}, true, true).has_value());

  auto shared = max_disjoint_paths(p5, {1, 2}, {0, 2});
  CHECK(shared.count() == 2);
  CHECK(std::find(shared.paths.begin(), shared.paths.end(), Path{2}) != shared.paths.end());
  CHECK(shared.separator.count(2));
}

TEST_CASE("fans share the centre") {
  // Centre 0 joined to 1..4, which lie on the path 1-2-3-4.
  FiniteGraph wheel({0, 1, 2, 3, 4}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
  auto r = max_disjoint_paths(wheel, {0}, {1, 2, 3, 4});
  CHECK(r.count() == 4);
  CHECK_FALSE(check_path_system(wheel, r.paths, {0}, {1, 2, 3, 4}, true, false).has_value());
  DisjointPathOptions distinct;
  distinct.a_side = EndpointRule::Distinct;
  CHECK(max_disjoint_paths(wheel, {0}, {1, 2, 3, 4}, distinct).count() == 1);
}

TEST_CASE("min_separator examples") {
  auto p5 = path_graph(5);
  auto s = min_separator(p5, {0}, {4});
  REQUIRE(s.separator);
  CHECK(s.separator->size() == 1);

  FiniteGraph c4({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(min_separator(c4, {0}, {2}).separator == VertexSet{1, 3});

  auto direct = min_separator(complete(5), {0}, {4});
  CHECK_FALSE(direct.separator);
  CHECK(direct.direct_edge == Edge{0, 4});

  auto same = min_separator(p5, {1}, {1, 3});
  CHECK_FALSE(same.separator);
  CHECK(same.shared_vertex == VertexId{1});
}

TEST_CASE("is_separator examples") {
  auto p5 = path_graph(5);
  CHECK(is_separator(p5, {0}, {4}, {1, 2, 3}));
  CHECK(is_separator(p5, {0}, {4}, {2}));
  CHECK_FALSE(is_separator(p5, {0}, {4}, {}));
  FiniteGraph c4({0, 1, 2, 3}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(is_separator(c4, {0}, {2}, {1}));
}

TEST_CASE("check_path_system catches bad systems") {
  auto p5 = path_graph(5);
  CHECK(check_path_system(p5, {{0, 2}}, {0}, {2}, true, true).has_value());
  CHECK(check_path_system(p5, {{0, 1, 2}, {0, 1, 2}}, {0}, {2}, true, true).has_value());
  CHECK(check_path_system(p5, {{1, 2}}, {0}, {2}, true, true).has_value());
  CHECK(check_path_system(p5, {{0, 1, 2, 3}}, {0, 1}, {3}, false, false).has_value());
  CHECK_FALSE(check_path_system(p5, {{0, 1, 2}}, {0}, {2}, false, false).has_value());
}

TEST_CASE("Menger duality for vertex pairs: all graphs up to 6 vertices") {
  std::size_t pairs = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    auto classes = oracle::isomorphism_classes(n);
    for (const auto& edges : classes) {
      FiniteGraph g(oracle::iota_ids(n), edges);
      auto adj = oracle::adjacency(g);
      for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) {
          auto r = max_disjoint_paths(g, {a}, {b});
          check_duality(g, {a}, {b}, r, true, true);
          auto ms = min_separator(g, {a}, {b});
          if (adj[a].count(b)) {
            REQUIRE(r.count() == oracle::max_internally_disjoint(adj, a, b));
            REQUIRE(ms.direct_edge == Edge{a, b});
          } else {
            std::size_t brute = oracle::min_separator_size(adj, a, b);
            REQUIRE(r.count() == brute);
            REQUIRE(ms.separator);
            REQUIRE(ms.separator->size() == brute);
            REQUIRE(is_separator(g, {a}, {b}, *ms.separator));
          }
          ++pairs;
        }
      }
    }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("Menger duality for disjoint vertex sets on random graphs") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 4 + trial % 7;
    std::uniform_int_distribution<VertexId> pick(0, n - 1);
    oracle::EdgeList edges;
    std::bernoulli_distribution coin(0.3);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (coin(rng)) edges.emplace_back(u, v);
      }
    }
    FiniteGraph g(oracle::iota_ids(n), edges);
    VertexSet a{pick(rng), pick(rng)};
    VertexSet b{pick(rng), pick(rng), pick(rng)};
    for (VertexId v : a) b.erase(v);
    if (b.empty()) continue;
    DisjointPathOptions opts;
    opts.a_side = EndpointRule::Distinct;
    opts.b_side = EndpointRule::Distinct;
    auto r = max_disjoint_paths(g, a, b, opts);
    check_duality(g, a, b, r, false, false);
    REQUIRE(r.count() == brute_set_separator(oracle::adjacency(g), a, b));
  }
}
