#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nst/finite_graph.hpp"
#include "nst/graph.hpp"

namespace nst {

/// How many paths may share an endpoint on one side. Auto shares the side
/// when it is a single vertex, so {a}-{b} queries count internally disjoint
/// a-b paths, {x}-B queries count fans, and set-set queries count fully
/// disjoint A-B paths.
enum class EndpointRule { Auto, Shared, Distinct };

struct DisjointPathOptions {
  std::size_t cap = kNoCap;
  EndpointRule a_side = EndpointRule::Auto;
  EndpointRule b_side = EndpointRule::Auto;
};

struct SeparationResult {
  /// A-B paths: each meets A only in its first vertex and B only in its last.
  /// A vertex in both sets forms a one-vertex path.
  std::vector<Path> paths;
  /// Vertex part of a minimum cut, meeting every path exactly once. Empty
  /// when the search stopped at the cap.
  VertexSet separator;
  /// Edges joining two shared endpoints. Each is one of the paths and no
  /// vertex set can cut it, so a nonempty list means "inseparable pair".
  std::vector<Edge> direct_edges;
  bool capped = false;

  std::size_t count() const { return paths.size(); }
  bool inseparable() const { return !direct_edges.empty(); }
};

/// Maximum number (up to options.cap) of A-B paths under the endpoint rule,
/// by augmenting paths on the vertex-split network with breadth-first search
/// and smallest-id tie-breaking. Unless capped, |separator| + |direct_edges|
/// equals the number of paths.
SeparationResult max_disjoint_paths(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                                    const DisjointPathOptions& options = {});

struct MinSeparatorResult {
  /// Minimum S within V - (A u B) meeting every A-B path; absent when none
  /// exists.
  std::optional<VertexSet> separator;
  /// Why none exists: an A-B edge, or a vertex in both sets.
  std::optional<Edge> direct_edge;
  std::optional<VertexId> shared_vertex;
};

MinSeparatorResult min_separator(const FiniteGraph& g, const VertexSet& a, const VertexSet& b);

/// True iff G - S contains no path from A - S to B - S.
bool is_separator(const FiniteGraph& g, const VertexSet& a, const VertexSet& b,
                  const VertexSet& s);

/// Independent check of a path system: every path starts in A, ends in B, is
/// simple, walks along graph edges, and touches A u B only at its ends; paths
/// share no vertex except endpoints on a side marked shared. Returns a
/// description of the first problem found.
std::optional<std::string> check_path_system(const Graph& g, const std::vector<Path>& paths,
                                             const VertexSet& a, const VertexSet& b,
                                             bool share_a, bool share_b);

}  // namespace nst
