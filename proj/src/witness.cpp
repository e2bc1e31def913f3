#include "nst/witness.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nst/errors.hpp"

namespace nst {

std::string to_string(Evidence e) {
  return e == Evidence::Verified ? "verified" : "insufficient";
}

FailureProbe uncovered_probe(const Graph& g, const BuildReport& report,
                             const CoverAssignment& cover) {
  if (report.spanning) throw DomainError("uncovered_probe: the run spans the graph");
  if (report.pending.empty()) throw DomainError("uncovered_probe: no pending component");
  FailureProbe probe;
  probe.persistent = !report.persistent.empty();
  probe.rep = probe.persistent ? report.persistent.front() : report.pending.front();
  // n_C is the true minimum, so the adversarial avoid set is ignored here.
  CoverAssignment exact = cover.with_avoid({});
  probe.cover_index = exact.level(exact.pick(g, probe.rep, report.tree.vertex_set()));
  probe.cover = exact;
  probe.snapshot = report;
  return probe;
}

ChainReport attachment_chain(const Graph& g, const FailureProbe& probe, std::uint64_t budget) {
  const RootedTree& tree = probe.snapshot.tree;
  const VertexSet& tree_set = tree.vertex_set();
  auto in_c = g.component_membership(probe.rep, tree_set);

  std::vector<VertexId> order(tree_set.begin(), tree_set.end());
  std::stable_sort(order.begin(), order.end(),
                   [&tree](VertexId a, VertexId b) { return tree.depth(a) < tree.depth(b); });
  struct Scan {
    VertexId vertex;
    std::size_t position;
  };
  std::deque<Scan> ring;
  for (VertexId v : order) ring.push_back({v, 0});

  ChainReport out;
  VertexSet found;
  while (!ring.empty() && out.ticks < budget) {
    Scan s = ring.front();
    ring.pop_front();
    ++out.ticks;
    auto y = g.neighbor_at(s.vertex, s.position);
    if (!y) continue;
    if (!tree_set.count(*y) && in_c(*y)) {
      found.insert(s.vertex);
      continue;
    }
    ++s.position;
    ring.push_back(s);
  }
  if (!is_chain(tree, found)) {
    throw InvariantViolation("attachment set of component " + std::to_string(probe.rep) +
                             " is not a chain");
  }
  out.chain.assign(found.begin(), found.end());
  std::stable_sort(out.chain.begin(), out.chain.end(),
                   [&tree](VertexId a, VertexId b) { return tree.depth(a) < tree.depth(b); });
  out.ray_prefix = out.chain.empty() ? Path{tree.root()} : tree.root_path(out.chain.back());
  return out;
}

FanResult domination_fan(const Graph& g, VertexId x, const Path& ray_prefix, std::size_t k,
                         const TruncationLimits& limits) {
  if (k == 0) throw DomainError("domination_fan: k must be at least 1");
  FanResult out;
  out.requested = k;
  out.fan.center = x;

  std::vector<VertexId> seeds{x};
  seeds.insert(seeds.end(), ray_prefix.begin(), ray_prefix.end());
  Ball trunc = ball(g, seeds, limits.radius, limits.degree_cap);
  out.capped = trunc.capped;

  VertexSet targets(ray_prefix.begin(), ray_prefix.end());
  targets.erase(x);
  if (targets.empty()) return out;

  DisjointPathOptions opts;
  opts.cap = k;
  opts.a_side = EndpointRule::Shared;
  opts.b_side = EndpointRule::Distinct;
  auto sep = max_disjoint_paths(*trunc.graph, {x}, targets, opts);
  if (auto problem = check_path_system(g, sep.paths, {x}, targets, true, false)) {
    throw InvariantViolation("domination fan failed its re-check: " + *problem);
  }
  out.fan.paths = std::move(sep.paths);
  out.status = out.fan.paths.size() >= k ? Evidence::Verified : Evidence::Insufficient;
  return out;
}

SeparationEvidence inseparability_evidence(const Graph& g, const FailureProbe& probe,
                                           const Path& ray_prefix, std::size_t k,
                                           const TruncationLimits& limits) {
  SeparationEvidence out;
  out.requested = k;
  if (k == 0) {
    out.status = Evidence::Verified;
    return out;
  }
  if (ray_prefix.empty()) return out;

  std::vector<VertexId> seeds(ray_prefix.begin(), ray_prefix.end());
  seeds.push_back(probe.rep);
  Ball trunc = ball(g, seeds, limits.radius, limits.degree_cap);
  out.capped = trunc.capped;
  for (VertexId v : trunc.graph->vertices()) {
    if (probe.in_u(v)) out.u_side.insert(v);
  }
  if (out.u_side.empty()) return out;

  VertexSet ray(ray_prefix.begin(), ray_prefix.end());
  DisjointPathOptions opts;
  opts.cap = k;
  opts.a_side = EndpointRule::Distinct;
  opts.b_side = EndpointRule::Distinct;
  auto sep = max_disjoint_paths(*trunc.graph, out.u_side, ray, opts);
  if (auto problem = check_path_system(g, sep.paths, out.u_side, ray, false, false)) {
    throw InvariantViolation("inseparability paths failed their re-check: " + *problem);
  }
  out.paths = std::move(sep.paths);
  out.status = out.paths.size() >= k ? Evidence::Verified : Evidence::Insufficient;
  return out;
}

HighEdgeProbe probe_high_edges(const Graph& g, const RootedTree& tree, VertexId x,
                               const std::function<bool(VertexId)>& u_pred, Edge e) {
  HighEdgeProbe out;
  out.edge = e;
  auto [u, v] = e;
  if (!tree.contains(x)) throw DomainError("probe_high_edges: x is not a tree vertex");
  if (!tree.contains(u) || !tree.contains(v)) return out;
  if (tree.parent(v) != u) throw DomainError("probe_high_edges: e is not a tree edge u -> v");
  if (tree_cmp(tree, x, u) != TreeCmp::Less) {
    throw DomainError("probe_high_edges: x must lie strictly below u");
  }
  for (VertexId t : tree.vertex_set()) {
    if (!in_uptree(tree, v, t)) continue;
    if (!out.neighbor_witness && g.adjacent(x, t)) out.neighbor_witness = t;
    if (!out.u_witness && u_pred(t)) out.u_witness = t;
    if (out.neighbor_witness && out.u_witness) break;
  }
  if (out.neighbor_witness && out.u_witness) out.status = Evidence::Verified;
  return out;
}

SubdivisionCheck verify_subdivision(const Graph& g, const CliqueSubdivision& k) {
  auto fail = [](std::string why, std::optional<VertexId> v = std::nullopt) {
    if (v) why += " at vertex " + std::to_string(*v);
    return SubdivisionCheck{false, std::move(why), v};
  };
  const auto& branch = k.branch;
  const std::size_t m = branch.size();
  VertexSet branch_set(branch.begin(), branch.end());
  if (branch_set.size() != m) return fail("branch vertices repeat");
  if (k.paths.size() != m * (m - 1) / 2) {
    return fail("expected " + std::to_string(m * (m - 1) / 2) + " paths, found " +
                std::to_string(k.paths.size()));
  }
  std::map<VertexId, std::size_t> interior_owner;
  std::size_t idx = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j, ++idx) {
      const Path& p = k.paths[idx];
      std::string tag = "path " + std::to_string(branch[i]) + "-" + std::to_string(branch[j]);
      if (p.size() < 2) return fail(tag + " is too short");
      if (p.front() != branch[i] || p.back() != branch[j]) return fail(tag + " has wrong endpoints");
      for (std::size_t s = 0; s + 1 < p.size(); ++s) {
        if (!g.has_vertex(p[s]) || !g.has_vertex(p[s + 1]) || !g.adjacent(p[s], p[s + 1])) {
          return fail(tag + " uses a non-edge", p[s]);
        }
      }
      for (std::size_t s = 1; s + 1 < p.size(); ++s) {
        if (branch_set.count(p[s])) return fail(tag + " runs through a branch vertex", p[s]);
        auto [it, fresh] = interior_owner.emplace(p[s], idx);
        if (!fresh) {
          return fail(it->second == idx ? tag + " repeats a vertex"
                                        : tag + " shares an interior vertex with another path",
                      p[s]);
        }
      }
    }
  }
  return {};
}

SubdivisionResult route_clique_subdivision(const FiniteGraph& host,
                                           const std::vector<VertexId>& branch) {
  SubdivisionResult out;
  out.subdivision.branch = branch;
  VertexSet branch_set(branch.begin(), branch.end());
  VertexSet used;
  for (VertexId b : branch) {
    if (!host.has_vertex(b)) {
      out.note = "branch vertex " + std::to_string(b) + " lies outside the truncation";
      return out;
    }
  }

  for (std::size_t i = 0; i < branch.size(); ++i) {
    for (std::size_t j = i + 1; j < branch.size(); ++j) {
      VertexId from = branch[i];
      VertexId to = branch[j];
      std::map<VertexId, VertexId> parent{{from, from}};
      std::deque<VertexId> queue{from};
      bool hit = false;
      while (!queue.empty() && !hit) {
        VertexId u = queue.front();
        queue.pop_front();
        for (VertexId w : host.adjacency(u)) {
          if (w == to) {
            parent.emplace(w, u);
            hit = true;
            break;
          }
          if (branch_set.count(w) || used.count(w) || parent.count(w)) continue;
          parent.emplace(w, u);
          queue.push_back(w);
        }
      }
      if (!hit) {
        out.note = "no route between branch vertices " + std::to_string(from) + " and " +
                   std::to_string(to) + " avoiding earlier paths";
        return out;
      }
      Path p{to};
      for (VertexId v = parent.at(to); v != from; v = parent.at(v)) p.push_back(v);
      p.push_back(from);
      std::reverse(p.begin(), p.end());
      for (std::size_t s = 1; s + 1 < p.size(); ++s) used.insert(p[s]);
      out.subdivision.paths.push_back(std::move(p));
    }
  }
  auto check = verify_subdivision(host, out.subdivision);
  if (!check.ok) throw InvariantViolation("routed subdivision failed verification: " + check.violation);
  out.status = Evidence::Verified;
  return out;
}

SubdivisionResult build_clique_subdivision(const Graph& g, const ChainReport& chain,
                                           std::size_t m, const TruncationLimits& limits) {
  if (m < 2) throw DomainError("build_clique_subdivision: order must be at least 2");
  if (chain.chain.size() < m) {
    SubdivisionResult out;
    out.note = "chain has " + std::to_string(chain.chain.size()) + " members, need " +
               std::to_string(m);
    return out;
  }
  std::vector<VertexId> branch(chain.chain.begin(), chain.chain.begin() + static_cast<long>(m));
  std::vector<VertexId> seeds = chain.chain;
  seeds.insert(seeds.end(), chain.ray_prefix.begin(), chain.ray_prefix.end());
  Ball trunc = ball(g, seeds, limits.radius, limits.degree_cap);
  SubdivisionResult out = route_clique_subdivision(*trunc.graph, branch);
  out.capped = trunc.capped;
  if (out.status == Evidence::Verified) {
    auto check = verify_subdivision(g, out.subdivision);
    if (!check.ok) {
      throw InvariantViolation("subdivision failed verification on the host: " + check.violation);
    }
  }
  return out;
}

bool WitnessBundle::verified() const {
  if (chain.chain.empty()) return false;
  for (const auto& f : fans) {
    if (f.status != Evidence::Verified) return false;
  }
  for (const auto& h : high_edges) {
    if (h.status != Evidence::Verified) return false;
  }
  return inseparability.status == Evidence::Verified && clique.status == Evidence::Verified;
}

std::optional<WitnessBundle> run_witness(const Graph& g, const CoverAssignment& cover,
                                         const WitnessParams& params) {
  auto root = g.next_vertex(std::nullopt);
  if (!root) throw DomainError("run_witness: graph has no vertices");
  BuildReport report = build_budgeted(g, cover, params.budget, *root);
  if (report.spanning || report.persistent.empty()) return std::nullopt;

  WitnessBundle bundle;
  bundle.probe = uncovered_probe(g, report, cover);
  bundle.chain = attachment_chain(g, bundle.probe, params.budget);
  const auto& chain = bundle.chain.chain;
  const auto& ray = bundle.chain.ray_prefix;

  for (std::size_t i = 0; i < params.fan_count && i < chain.size(); ++i) {
    bundle.fans.push_back(domination_fan(g, chain[i], ray, params.fan_size, params.limits));
  }
  if (chain.size() < params.fan_count) {
    FanResult missing;
    missing.requested = params.fan_size;
    bundle.fans.push_back(missing);
  }
  bundle.inseparability =
      inseparability_evidence(g, bundle.probe, ray, params.separation_k, params.limits);

  // Probe edges of the ray above the lowest chain vertex.
  if (!chain.empty()) {
    const RootedTree& tree = bundle.probe.snapshot.tree;
    VertexId x = chain.front();
    auto u_pred = [&bundle](VertexId v) { return bundle.probe.in_u(v); };
    std::size_t start = tree.depth(x) + 1;
    for (std::size_t d = start; d + 1 < ray.size() && bundle.high_edges.size() < params.high_edge_count;
         ++d) {
      bundle.high_edges.push_back(probe_high_edges(g, tree, x, u_pred, Edge{ray[d], ray[d + 1]}));
    }
  }

  if (params.clique_order >= 2) {
    bundle.clique = build_clique_subdivision(g, bundle.chain, params.clique_order, params.limits);
  }
  return bundle;
}

}  // namespace nst
