#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace nst {

using VertexId = std::uint64_t;
using VertexSet = std::set<VertexId>;
using Path = std::vector<VertexId>;

class FiniteGraph;

/// Forward-only enumeration of one vertex's neighbours in ascending id order.
/// Finite neighbourhoods end with std::nullopt; infinite ones never do.
class NeighborCursor {
 public:
  NeighborCursor(const class Graph& graph, VertexId v) : graph_(&graph), v_(v) {}

  std::optional<VertexId> next();
  std::size_t position() const { return pos_; }
  VertexId vertex() const { return v_; }

 private:
  const Graph* graph_;
  VertexId v_;
  std::size_t pos_ = 0;
};

/// Uniform access to finite graphs and to countably infinite graphs that are
/// presented by oracles. Every method is const; handles are shareable.
///
/// The public entry points check preconditions and throw DomainError; the
/// protected do_* hooks implement the family-specific part.
class Graph {
 public:
  virtual ~Graph() = default;

  virtual std::string name() const = 0;
  virtual bool is_finite() const = 0;

  bool has_vertex(VertexId v) const { return do_has_vertex(v); }

  /// Smallest vertex strictly greater than `after`, or the smallest vertex
  /// overall when `after` is empty.
  std::optional<VertexId> next_vertex(std::optional<VertexId> after) const;

  bool adjacent(VertexId u, VertexId v) const;

  /// The `index`-th neighbour of `v` in ascending order.
  std::optional<VertexId> neighbor_at(VertexId v, std::size_t index) const;

  /// Number of neighbours, or std::nullopt when the neighbourhood is infinite.
  std::optional<std::size_t> degree(VertexId v) const;

  NeighborCursor neighbors(VertexId v) const;

  /// Exact decision: do u and v lie in the same component of G - avoid?
  bool same_component_avoiding(VertexId u, VertexId v, const VertexSet& avoid) const;

  /// Canonical name of the component of v in G - avoid: its minimum vertex.
  VertexId component_rep(VertexId v, const VertexSet& avoid) const;

  /// The reference route for component_rep: ascending scan over vertex ids
  /// with the connectivity oracle. Terminates because v bounds the scan.
  VertexId component_rep_by_scan(VertexId v, const VertexSet& avoid) const;

  /// Membership predicate for the component of x in G - avoid. The predicate
  /// borrows `avoid`, which must outlive it and stay unmodified.
  std::function<bool(VertexId)> component_membership(VertexId x, const VertexSet& avoid) const;

  /// All members of the component of v in G - avoid when that component is
  /// known to be finite and cheap to list; std::nullopt otherwise.
  virtual std::optional<std::vector<VertexId>> enumerate_component(VertexId v,
                                                                   const VertexSet& avoid) const;

 protected:
  virtual bool do_has_vertex(VertexId v) const = 0;
  virtual std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const = 0;
  virtual bool do_adjacent(VertexId u, VertexId v) const = 0;
  virtual std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const = 0;
  virtual std::optional<std::size_t> do_degree(VertexId v) const = 0;
  virtual bool do_same_component(VertexId u, VertexId v, const VertexSet& avoid) const = 0;

  /// Families with a faster exact route override this; the default scans.
  virtual VertexId do_component_rep(VertexId v, const VertexSet& avoid) const;
  virtual std::function<bool(VertexId)> do_component_membership(VertexId x,
                                                               const VertexSet& avoid) const;

  void require_vertex(VertexId v) const;
};

inline constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

/// Finite truncation of a graph: the induced subgraph on every vertex reached
/// within `radius` steps, where each vertex contributes at most `degree_cap`
/// neighbours to the search.
struct Ball {
  std::vector<VertexId> centers;
  std::size_t radius = 0;
  std::size_t degree_cap = kNoCap;
  std::shared_ptr<const FiniteGraph> graph;
  /// Vertices whose neighbour enumeration was cut off by the cap.
  std::vector<VertexId> capped;

  bool truncated() const { return !capped.empty(); }
  VertexId center() const { return centers.front(); }
};

Ball ball(const Graph& g, VertexId center, std::size_t radius, std::size_t degree_cap = kNoCap);

/// Multi-source variant: every seed is a center.
Ball ball(const Graph& g, const std::vector<VertexId>& seeds, std::size_t radius,
          std::size_t degree_cap = kNoCap);

}  // namespace nst
