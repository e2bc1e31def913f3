#include "nst/separators.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "nst/errors.hpp"

namespace nst {

namespace {

constexpr long kInf = 1L << 40;

// Unit-capacity vertex-split network: vertex i becomes in-node 2i and
// out-node 2i + 1 joined by an arc of the vertex capacity.
class SplitNetwork {
 public:
  struct Arc {
    int to;
    int rev;
    long cap;
    long flow;
  };

  explicit SplitNetwork(std::size_t vertices)
      : nodes_(2 * vertices + 2), source_(static_cast<int>(2 * vertices)),
        sink_(static_cast<int>(2 * vertices + 1)) {}

  int source() const { return source_; }
  int sink() const { return sink_; }

  void add_arc(int from, int to, long cap) {
    nodes_[from].push_back({to, static_cast<int>(nodes_[to].size()), cap, 0});
    nodes_[to].push_back({from, static_cast<int>(nodes_[from].size()) - 1, 0, 0});
  }

  // One unit along a shortest residual path; false if none exists.
  bool augment() {
    std::vector<std::pair<int, int>> via(nodes_.size(), {-1, -1});
    std::deque<int> queue{source_};
    via[source_] = {source_, -1};
    while (!queue.empty() && via[sink_].first < 0) {
      int u = queue.front();
      queue.pop_front();
      for (int i = 0; i < static_cast<int>(nodes_[u].size()); ++i) {
        const Arc& a = nodes_[u][i];
        if (a.cap - a.flow <= 0 || via[a.to].first >= 0) continue;
        via[a.to] = {u, i};
        queue.push_back(a.to);
      }
    }
    if (via[sink_].first < 0) return false;
    for (int v = sink_; v != source_;) {
      auto [u, i] = via[v];
      Arc& a = nodes_[u][i];
      a.flow += 1;
      nodes_[a.to][a.rev].flow -= 1;
      v = u;
    }
    return true;
  }

  std::vector<char> residual_reachable() const {
    std::vector<char> seen(nodes_.size(), 0);
    std::deque<int> queue{source_};
    seen[source_] = 1;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (const Arc& a : nodes_[u]) {
        if (a.cap - a.flow <= 0 || seen[a.to]) continue;
        seen[a.to] = 1;
        queue.push_back(a.to);
      }
    }
    return seen;
  }

  // Peels one unit source-to-sink walk off the flow, cancelling any cycles
  // met on the way.
  std::vector<int> take_path() {
    std::vector<int> walk{source_};
    std::vector<int> arc_used;
    std::unordered_map<int, std::size_t> pos{{source_, 0}};
    while (walk.back() != sink_) {
      int u = walk.back();
      int chosen = -1;
      for (int i = 0; i < static_cast<int>(nodes_[u].size()); ++i) {
        if (nodes_[u][i].cap > 0 && nodes_[u][i].flow > 0) {
          chosen = i;
          break;
        }
      }
      if (chosen < 0) throw InvariantViolation("flow decomposition hit a dead end");
      int v = nodes_[u][chosen].to;
      if (auto it = pos.find(v); it != pos.end()) {
        std::size_t p = it->second;
        push(u, chosen, -1);
        for (std::size_t k = p; k < arc_used.size(); ++k) push(walk[k], arc_used[k], -1);
        for (std::size_t k = p + 1; k < walk.size(); ++k) pos.erase(walk[k]);
        walk.resize(p + 1);
        arc_used.resize(p);
        continue;
      }
      pos.emplace(v, walk.size());
      walk.push_back(v);
      arc_used.push_back(chosen);
    }
    for (std::size_t k = 0; k < arc_used.size(); ++k) push(walk[k], arc_used[k], -1);
    return walk;
  }

  const std::vector<Arc>& arcs(int node) const { return nodes_[node]; }

 private:
  void push(int u, int i, long delta) {
    Arc& a = nodes_[u][i];
    a.flow += delta;
    nodes_[a.to][a.rev].flow -= delta;
  }

  std::vector<std::vector<Arc>> nodes_;
  int source_;
  int sink_;
};

bool shares(EndpointRule rule, std::size_t side_size) {
  switch (rule) {
    case EndpointRule::Shared: return true;
    case EndpointRule::Distinct: return false;
    case EndpointRule::Auto: return side_size == 1;
  }
  return false;
}

SeparationResult solve(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                       bool share_a, bool share_b, std::size_t cap) {
  for (VertexId v : a) {
    if (!g.has_vertex(v)) throw DomainError("separator query: unknown vertex " + std::to_string(v));
  }
  for (VertexId v : b) {
    if (!g.has_vertex(v)) throw DomainError("separator query: unknown vertex " + std::to_string(v));
  }

  SeparationResult result;
  VertexSet both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(both, both.end()));
  for (VertexId v : both) {
    if (result.paths.size() == cap) {
      result.capped = true;
      result.separator.clear();
      return result;
    }
    result.paths.push_back({v});
    result.separator.insert(v);
  }

  const auto& verts = g.vertices();
  std::unordered_map<VertexId, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx.emplace(verts[i], static_cast<int>(i));
  auto in_node = [&](VertexId v) { return 2 * idx.at(v); };
  auto out_node = [&](VertexId v) { return 2 * idx.at(v) + 1; };
  auto vertex_cap = [&](VertexId v) -> long {
    if ((share_a && a.count(v)) || (share_b && b.count(v))) return kInf;
    return 1;
  };

  SplitNetwork net(verts.size());
  for (VertexId v : a) {
    if (!both.count(v)) net.add_arc(net.source(), in_node(v), kInf);
  }
  for (VertexId v : verts) {
    if (both.count(v)) continue;
    net.add_arc(in_node(v), out_node(v), vertex_cap(v));
    if (b.count(v)) {
      net.add_arc(out_node(v), net.sink(), kInf);
      continue;  // paths end at their first B vertex
    }
    for (VertexId w : g.adjacency(v)) {
      if (both.count(w) || a.count(w)) continue;  // paths never re-enter A
      long c = (vertex_cap(v) == kInf && vertex_cap(w) == kInf) ? 1 : kInf;
      net.add_arc(out_node(v), in_node(w), c);
    }
  }

  std::size_t flow = 0;
  while (result.paths.size() + flow < cap && net.augment()) ++flow;
  if (result.paths.size() + flow == cap) {
    // Reaching the cap is only a real stop if more flow would be possible.
    SplitNetwork probe = net;
    result.capped = probe.augment();
  }

  if (!result.capped) {
    auto reach = net.residual_reachable();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      int in = static_cast<int>(2 * i);
      int out = in + 1;
      if (reach[in] && !reach[out]) result.separator.insert(verts[i]);
      if (!reach[out]) continue;
      for (const auto& arc : net.arcs(out)) {
        if (arc.cap == 1 && arc.to < net.source() && arc.to % 2 == 0 && !reach[arc.to]) {
          VertexId w = verts[static_cast<std::size_t>(arc.to / 2)];
          result.direct_edges.emplace_back(std::min(verts[i], w), std::max(verts[i], w));
        }
      }
    }
    std::sort(result.direct_edges.begin(), result.direct_edges.end());
  } else {
    result.separator.clear();
  }

  for (std::size_t k = 0; k < flow; ++k) {
    auto walk = net.take_path();
    Path p;
    for (int node : walk) {
      if (node < net.source() && node % 2 == 0) p.push_back(verts[static_cast<std::size_t>(node / 2)]);
    }
    result.paths.push_back(std::move(p));
  }
  return result;
}

}  // namespace

SeparationResult max_disjoint_paths(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                                    const DisjointPathOptions& options) {
  if (a.empty() || b.empty()) throw DomainError("max_disjoint_paths: empty side");
  return solve(g, a, b, shares(options.a_side, a.size()), shares(options.b_side, b.size()),
               options.cap);
}

MinSeparatorResult min_separator(const FiniteGraph& g, const VertexSet& a, const VertexSet& b) {
  MinSeparatorResult out;
  for (VertexId v : a) {
    if (b.count(v)) {
      out.shared_vertex = v;
      return out;
    }
  }
  for (VertexId u : a) {
    for (VertexId w : g.adjacency(u)) {
      if (b.count(w)) {
        out.direct_edge = Edge{u, w};
        return out;
      }
    }
  }
  if (a.empty() || b.empty()) {
    out.separator = VertexSet{};
    return out;
  }
  // With both sides shared no vertex of A u B can be cut, so the cut lies in
  // V - (A u B).
  auto r = solve(g, a, b, true, true, kNoCap);
  out.separator = r.separator;
  return out;
}

bool is_separator(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                  const VertexSet& s) {
  std::deque<VertexId> queue;
  VertexSet seen;
  for (VertexId v : a) {
    if (s.count(v) || !g.has_vertex(v)) continue;
    if (b.count(v)) return false;
    seen.insert(v);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    for (VertexId w : g.adjacency(u)) {
      if (s.count(w) || seen.count(w)) continue;
      if (b.count(w)) return false;
      seen.insert(w);
      queue.push_back(w);
    }
  }
  return true;
}

std::optional<std::string> check_path_system(const Graph& g, const std::vector<Path>& paths,
                                             const VertexSet& a, const VertexSet& b,
                                             bool share_a, bool share_b) {
  std::map<VertexId, std::size_t> owner;
  auto str = [](VertexId v) { return std::to_string(v); };
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    std::string tag = "path " + std::to_string(i);
    if (p.empty()) return tag + " is empty";
    if (!a.count(p.front())) return tag + " does not start in A";
    if (!b.count(p.back())) return tag + " does not end in B";
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k + 1 < p.size() && !g.adjacent(p[k], p[k + 1])) {
        return tag + " uses non-edge {" + str(p[k]) + "," + str(p[k + 1]) + "}";
      }
      if (std::count(p.begin(), p.end(), p[k]) != 1) return tag + " repeats vertex " + str(p[k]);
      bool first = k == 0;
      bool last = k + 1 == p.size();
      if (!first && a.count(p[k])) return tag + " re-enters A at " + str(p[k]);
      if (!last && b.count(p[k])) return tag + " passes through B at " + str(p[k]);
      bool shared_end = (first && share_a) || (last && share_b);
      if (shared_end) continue;
      auto [it, fresh] = owner.emplace(p[k], i);
      if (!fresh) {
        return "paths " + std::to_string(it->second) + " and " + std::to_string(i) +
               " share vertex " + str(p[k]);
      }
    }
  }
  // A shared endpoint must not also sit inside another path.
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (VertexId end : {paths[i].front(), paths[i].back()}) {
      auto it = owner.find(end);
      if (it != owner.end() && it->second != i &&
          ((share_a && a.count(end)) || (share_b && b.count(end)))) {
        return "shared endpoint " + str(end) + " is used inside path " +
               std::to_string(it->second);
      }
    }
  }
  return std::nullopt;
}

}  // namespace nst
