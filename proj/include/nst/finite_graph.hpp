#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nst/graph.hpp"

namespace nst {

using Edge = std::pair<VertexId, VertexId>;

/// Simple undirected graph on a finite set of arbitrary vertex ids.
/// Neighbour lists are kept sorted; connectivity is answered by BFS.
class FiniteGraph final : public Graph {
 public:
  FiniteGraph() = default;

  /// Rejects loops, duplicate edges (in either orientation), duplicate vertex
  /// ids and edges whose endpoints are not listed.
  FiniteGraph(std::vector<VertexId> vertices, const std::vector<Edge>& edges);

  std::string name() const override { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  bool is_finite() const override { return true; }

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<VertexId>& adjacency(VertexId v) const;

  /// Every edge once, as (smaller, larger), in ascending order.
  std::vector<Edge> edges() const;

  /// Components of G - avoid, each sorted, ordered by their minimum vertex.
  std::vector<std::vector<VertexId>> components_avoiding(const VertexSet& avoid) const;

  bool is_connected() const;

  /// Induced subgraph on `keep` (ids not in the graph are ignored).
  FiniteGraph induced(const VertexSet& keep) const;

  std::optional<std::vector<VertexId>> enumerate_component(VertexId v,
                                                           const VertexSet& avoid) const override;

 protected:
  bool do_has_vertex(VertexId v) const override { return index_.count(v) != 0; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override;
  bool do_adjacent(VertexId u, VertexId v) const override;
  std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const override;
  std::optional<std::size_t> do_degree(VertexId v) const override;
  bool do_same_component(VertexId u, VertexId v, const VertexSet& avoid) const override;
  VertexId do_component_rep(VertexId v, const VertexSet& avoid) const override;
  std::function<bool(VertexId)> do_component_membership(VertexId x,
                                                       const VertexSet& avoid) const override;

 private:
  std::vector<VertexId> bfs_avoiding(VertexId start, const VertexSet& avoid) const;

  std::string name_ = "finite";
  std::vector<VertexId> vertices_;
  std::unordered_map<VertexId, std::size_t> index_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

}  // namespace nst
