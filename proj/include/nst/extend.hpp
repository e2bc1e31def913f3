#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nst/graph.hpp"
#include "nst/tree.hpp"

namespace nst {

struct ExtendOptions {
  /// Vertices the path search must not use as interior vertices. Empty for
  /// ordinary runs; adversarial demos use it to steer around a vertex.
  VertexSet avoid_interior;
  /// Recompute the whole attachment set of every component grafted into and
  /// assert that it is a chain. Otherwise only its top is searched for.
  bool verify_chain = true;
  /// A known member of N(D). Without verify_chain the top of the chain is
  /// then looked for in its uptree only.
  std::optional<VertexId> anchor;
};

struct ExtendResult {
  RootedTree tree;
  /// One path per graft, attachment vertex first, target last.
  std::vector<Path> grafts;
  std::uint64_t search_cost = 0;
};

/// Tree vertices with a neighbour in the component of x in G - T.
/// Locally finite vertices are checked through their neighbour lists; a
/// vertex t of infinite degree has a neighbour there iff t and x are connected
/// in G - (T - t).
VertexSet attachment_set(const Graph& g, const RootedTree& t, VertexId x);

/// The deepest tree vertex with a neighbour in the component of x in G - T.
/// For normal T this is the maximum of the attachment chain.
VertexId attachment_top(const Graph& g, const RootedTree& t, VertexId x);

/// Shortest path from tree vertex `from` to `to` whose interior avoids T and
/// lies in the component of `to` in G - T; ties go to the lexicographically
/// smallest vertex sequence. The depth limit is raised in doubling stages and
/// neighbour lists of infinite-degree vertices are read only up to the stage
/// width, so such vertices cannot stall the search. Through them the path is
/// shortest only among those visible in the first stage that finds one.
/// Throws BudgetError after `budget` neighbour lookups.
Path connecting_path(const Graph& g, const RootedTree& t, VertexId from, VertexId to,
                     std::uint64_t budget, const VertexSet& avoid_interior = {},
                     std::uint64_t* cost = nullptr);

/// Extends a normal tree T into the component D of G - T named by `d_rep` so
/// that every target is covered and the tree stays normal.
///
/// Targets are handled in ascending order. Each uncovered target x is joined
/// by a path grafted below the top of the attachment chain of its current
/// component D' of G - T'. The new vertices are pairwise comparable with
/// everything in N(D'), and every later T'-path out of them returns into
/// N(D') at or below the graft point, so normality is kept. Every graft after
/// the first hangs from an earlier graft, hence D meets T' in a connected set.
///
/// Throws DomainError if a target is outside D, BudgetError if a path search
/// exceeds `search_budget`.
ExtendResult extend_normal(const Graph& g, RootedTree t, VertexId d_rep,
                           const VertexSet& targets, std::uint64_t search_budget,
                           const ExtendOptions& options = {});

}  // namespace nst
