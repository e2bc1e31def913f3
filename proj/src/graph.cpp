#include "nst/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "nst/errors.hpp"
#include "nst/finite_graph.hpp"

namespace nst {

std::optional<VertexId> NeighborCursor::next() {
  auto y = graph_->neighbor_at(v_, pos_);
  if (y) ++pos_;
  return y;
}

void Graph::require_vertex(VertexId v) const {
  if (!do_has_vertex(v)) {
    throw DomainError(name() + ": unknown vertex " + std::to_string(v));
  }
}

std::optional<VertexId> Graph::next_vertex(std::optional<VertexId> after) const {
  return do_next_vertex(after);
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  return u != v && do_adjacent(u, v);
}

std::optional<VertexId> Graph::neighbor_at(VertexId v, std::size_t index) const {
  require_vertex(v);
  return do_neighbor_at(v, index);
}

std::optional<std::size_t> Graph::degree(VertexId v) const {
  require_vertex(v);
  return do_degree(v);
}

NeighborCursor Graph::neighbors(VertexId v) const {
  require_vertex(v);
  return NeighborCursor(*this, v);
}

bool Graph::same_component_avoiding(VertexId u, VertexId v, const VertexSet& avoid) const {
  require_vertex(u);
  require_vertex(v);
  if (avoid.count(u) || avoid.count(v)) {
    throw DomainError("same_component_avoiding: endpoint lies in the avoided set");
  }
  if (u == v) return true;
  return do_same_component(u, v, avoid);
}

VertexId Graph::component_rep(VertexId v, const VertexSet& avoid) const {
  require_vertex(v);
  if (avoid.count(v)) throw DomainError("component_rep: vertex lies in the avoided set");
  return do_component_rep(v, avoid);
}

VertexId Graph::component_rep_by_scan(VertexId v, const VertexSet& avoid) const {
  require_vertex(v);
  if (avoid.count(v)) throw DomainError("component_rep: vertex lies in the avoided set");
  for (auto w = next_vertex(std::nullopt); w && *w < v; w = next_vertex(*w)) {
    if (avoid.count(*w)) continue;
    if (do_same_component(*w, v, avoid)) return *w;
  }
  return v;
}

VertexId Graph::do_component_rep(VertexId v, const VertexSet& avoid) const {
  return component_rep_by_scan(v, avoid);
}

std::function<bool(VertexId)> Graph::component_membership(VertexId x,
                                                          const VertexSet& avoid) const {
  require_vertex(x);
  if (avoid.count(x)) throw DomainError("component_membership: vertex lies in the avoided set");
  return do_component_membership(x, avoid);
}

std::function<bool(VertexId)> Graph::do_component_membership(VertexId x,
                                                             const VertexSet& avoid) const {
  return [this, x, &avoid](VertexId y) {
    if (!do_has_vertex(y) || avoid.count(y)) return false;
    return y == x || do_same_component(y, x, avoid);
  };
}

std::optional<std::vector<VertexId>> Graph::enumerate_component(VertexId, const VertexSet&) const {
  return std::nullopt;
}

Ball ball(const Graph& g, VertexId center, std::size_t radius, std::size_t degree_cap) {
  return ball(g, std::vector<VertexId>{center}, radius, degree_cap);
}

Ball ball(const Graph& g, const std::vector<VertexId>& seeds, std::size_t radius,
          std::size_t degree_cap) {
  if (seeds.empty()) throw DomainError("ball: no centers");
  Ball out;
  out.centers = seeds;
  out.radius = radius;
  out.degree_cap = degree_cap;

  std::map<VertexId, std::size_t> dist;
  std::deque<VertexId> queue;
  for (VertexId s : seeds) {
    if (!g.has_vertex(s)) throw DomainError(g.name() + ": unknown vertex " + std::to_string(s));
    if (dist.emplace(s, 0).second) queue.push_back(s);
  }
  while (!queue.empty()) {
    VertexId u = queue.front();
    queue.pop_front();
    std::size_t du = dist[u];
    if (du == radius) continue;
    auto cursor = g.neighbors(u);
    std::size_t taken = 0;
    while (true) {
      if (taken == degree_cap) {
        if (g.neighbor_at(u, taken)) out.capped.push_back(u);
        break;
      }
      auto y = cursor.next();
      if (!y) break;
      ++taken;
      if (dist.emplace(*y, du + 1).second) queue.push_back(*y);
    }
  }
  std::sort(out.capped.begin(), out.capped.end());

  std::vector<VertexId> verts;
  verts.reserve(dist.size());
  for (const auto& [v, d] : dist) verts.push_back(v);
  // Induced edges come from the adjacency oracle, so vertices whose
  // enumeration was capped still get every edge inside the ball.
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      if (g.adjacent(verts[i], verts[j])) edges.emplace_back(verts[i], verts[j]);
    }
  }
  auto fg = std::make_shared<FiniteGraph>(std::move(verts), edges);
  fg->set_name(g.name() + "/ball");
  out.graph = std::move(fg);
  return out;
}

}  // namespace nst
