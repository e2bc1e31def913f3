#include "nst/finite_graph.hpp"

#include <algorithm>
#include <deque>

#include "nst/errors.hpp"

namespace nst {

FiniteGraph::FiniteGraph(std::vector<VertexId> vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw DomainError("graph: duplicate vertex id");
  }
  index_.reserve(vertices_.size());
  for (std::size_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);
  adjacency_.resize(vertices_.size());

  for (const auto& [u, v] : edges) {
    if (u == v) throw DomainError("graph: loop at vertex " + std::to_string(u));
    auto iu = index_.find(u);
    auto iv = index_.find(v);
    if (iu == index_.end() || iv == index_.end()) {
      throw DomainError("graph: edge {" + std::to_string(u) + "," + std::to_string(v) +
                        "} has a dangling endpoint");
    }
    adjacency_[iu->second].push_back(v);
    adjacency_[iv->second].push_back(u);
  }
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    auto& list = adjacency_[i];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) {
      throw DomainError("graph: duplicate edge {" + std::to_string(vertices_[i]) + "," +
                        std::to_string(*dup) + "}");
    }
  }
  edge_count_ = edges.size();
}

const std::vector<VertexId>& FiniteGraph::adjacency(VertexId v) const {
  require_vertex(v);
  return adjacency_[index_.at(v)];
}

std::vector<Edge> FiniteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    for (VertexId w : adjacency_[i]) {
      if (vertices_[i] < w) out.emplace_back(vertices_[i], w);
    }
  }
  return out;
}

std::optional<VertexId> FiniteGraph::do_next_vertex(std::optional<VertexId> after) const {
  auto it = after ? std::upper_bound(vertices_.begin(), vertices_.end(), *after)
                  : vertices_.begin();
  if (it == vertices_.end()) return std::nullopt;
  return *it;
}

bool FiniteGraph::do_adjacent(VertexId u, VertexId v) const {
  const auto& list = adjacency_[index_.at(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<VertexId> FiniteGraph::do_neighbor_at(VertexId v, std::size_t index) const {
  const auto& list = adjacency_[index_.at(v)];
  if (index >= list.size()) return std::nullopt;
  return list[index];
}

std::optional<std::size_t> FiniteGraph::do_degree(VertexId v) const {
  return adjacency_[index_.at(v)].size();
}

std::vector<VertexId> FiniteGraph::bfs_avoiding(VertexId start, const VertexSet& avoid) const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<VertexId> order{start};
  seen[index_.at(start)] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (VertexId w : adjacency_[index_.at(order[head])]) {
      auto iw = index_.at(w);
      if (seen[iw] || avoid.count(w)) continue;
      seen[iw] = 1;
      order.push_back(w);
    }
  }
  return order;
}

bool FiniteGraph::do_same_component(VertexId u, VertexId v, const VertexSet& avoid) const {
  auto reach = bfs_avoiding(u, avoid);
  return std::find(reach.begin(), reach.end(), v) != reach.end();
}

VertexId FiniteGraph::do_component_rep(VertexId v, const VertexSet& avoid) const {
  auto reach = bfs_avoiding(v, avoid);
  return *std::min_element(reach.begin(), reach.end());
}

std::function<bool(VertexId)> FiniteGraph::do_component_membership(VertexId x,
                                                                   const VertexSet& avoid) const {
  auto reach = bfs_avoiding(x, avoid);
  std::sort(reach.begin(), reach.end());
  return [members = std::move(reach)](VertexId y) {
    return std::binary_search(members.begin(), members.end(), y);
  };
}

std::optional<std::vector<VertexId>> FiniteGraph::enumerate_component(
    VertexId v, const VertexSet& avoid) const {
  require_vertex(v);
  if (avoid.count(v)) throw DomainError("enumerate_component: vertex lies in the avoided set");
  auto reach = bfs_avoiding(v, avoid);
  std::sort(reach.begin(), reach.end());
  return reach;
}

std::vector<std::vector<VertexId>> FiniteGraph::components_avoiding(const VertexSet& avoid) const {
  std::vector<char> seen(vertices_.size(), 0);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (seen[i] || avoid.count(vertices_[i])) continue;
    auto comp = bfs_avoiding(vertices_[i], avoid);
    for (VertexId w : comp) seen[index_.at(w)] = 1;
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool FiniteGraph::is_connected() const {
  if (vertices_.empty()) return true;
  return bfs_avoiding(vertices_.front(), {}).size() == vertices_.size();
}

FiniteGraph FiniteGraph::induced(const VertexSet& keep) const {
  std::vector<VertexId> verts;
  for (VertexId v : vertices_) {
    if (keep.count(v)) verts.push_back(v);
  }
  std::vector<Edge> es;
  for (const auto& [u, v] : edges()) {
    if (keep.count(u) && keep.count(v)) es.emplace_back(u, v);
  }
  FiniteGraph out(std::move(verts), es);
  out.set_name(name_ + "/induced");
  return out;
}

}  // namespace nst
