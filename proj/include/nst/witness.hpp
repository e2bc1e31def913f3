#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nst/construct.hpp"
#include "nst/cover.hpp"
#include "nst/graph.hpp"
#include "nst/separators.hpp"
#include "nst/tree.hpp"

namespace nst {

/// Infinite statements ("x dominates R", "U cannot be finitely separated from
/// R") are reported as finite evidence with an explicit size, never as a
/// verdict about the infinite graph.
enum class Evidence { Verified, Insufficient };

std::string to_string(Evidence e);

/// How large a finite piece of the host the witness searches may look at.
struct TruncationLimits {
  std::size_t radius = 1;
  std::size_t degree_cap = 32;
};

/// An uncovered component C of G - T with its least cover index n_C. The set
/// U is the union of all cover classes up to n_C, kept as one predicate.
struct FailureProbe {
  VertexId rep = 0;
  std::uint64_t cover_index = 0;
  CoverAssignment cover;
  BuildReport snapshot;
  /// C is what remained of a component after a step into it.
  bool persistent = false;

  bool in_u(VertexId v) const { return cover.level(v) <= cover_index; }
};

/// Picks the smallest persistent pending component, else the smallest pending
/// one. Throws DomainError for a spanning report or one with nothing pending.
FailureProbe uncovered_probe(const Graph& g, const BuildReport& report,
                             const CoverAssignment& cover);

struct ChainReport {
  /// Tree vertices with a verified neighbour in C, root side first.
  std::vector<VertexId> chain;
  /// Root path through the top of the chain.
  Path ray_prefix;
  std::uint64_t ticks = 0;
};

/// Dovetails the neighbour cursors of all tree vertices for `budget` ticks and
/// collects those that reach C. Throws InvariantViolation if the result is not
/// a chain, since normality of the tree guarantees one.
ChainReport attachment_chain(const Graph& g, const FailureProbe& probe, std::uint64_t budget);

struct DominationFan {
  VertexId center = 0;
  std::vector<Path> paths;
};

struct FanResult {
  Evidence status = Evidence::Insufficient;
  DominationFan fan;
  std::size_t requested = 0;
  std::vector<VertexId> capped;
};

/// Up to k paths from x to distinct vertices of the ray prefix, disjoint except
/// at x and meeting the ray only at their ends, found on a truncation around x
/// and the prefix. Every returned fan passes check_path_system.
FanResult domination_fan(const Graph& g, VertexId x, const Path& ray_prefix, std::size_t k,
                         const TruncationLimits& limits = {});

struct SeparationEvidence {
  Evidence status = Evidence::Insufficient;
  std::size_t requested = 0;
  std::vector<Path> paths;
  VertexSet u_side;
  std::vector<VertexId> capped;
};

/// k disjoint paths between U and the ray prefix on a truncation: by Menger no
/// vertex set of fewer than k vertices separates U from the ray.
SeparationEvidence inseparability_evidence(const Graph& g, const FailureProbe& probe,
                                           const Path& ray_prefix, std::size_t k,
                                           const TruncationLimits& limits = {});

struct HighEdgeProbe {
  Evidence status = Evidence::Insufficient;
  Edge edge{0, 0};
  std::optional<VertexId> neighbor_witness;
  std::optional<VertexId> u_witness;
};

/// For a tree edge e = uv with x < u < v, looks for a neighbour of x and a
/// vertex of U inside the uptree at v. An edge not yet in the tree gives
/// Insufficient; an edge violating the order precondition is a DomainError.
HighEdgeProbe probe_high_edges(const Graph& g, const RootedTree& tree, VertexId x,
                               const std::function<bool(VertexId)>& u_pred, Edge e);

struct CliqueSubdivision {
  std::vector<VertexId> branch;
  /// One path per pair (i, j), i < j, in lexicographic pair order, running
  /// from branch[i] to branch[j].
  std::vector<Path> paths;

  std::size_t order() const { return branch.size(); }
};

struct SubdivisionCheck {
  bool ok = true;
  std::string violation;
  std::optional<VertexId> vertex;
};

SubdivisionCheck verify_subdivision(const Graph& g, const CliqueSubdivision& k);

struct SubdivisionResult {
  Evidence status = Evidence::Insufficient;
  CliqueSubdivision subdivision;
  std::string note;
  std::vector<VertexId> capped;
};

/// Routes a subdivided clique on the given branch vertices inside `host`.
/// Pairs are handled in lexicographic order; each gets a shortest path in the
/// host after deleting every interior vertex used so far and every other
/// branch vertex. Stops at the first pair that cannot be routed and returns
/// the partial system.
SubdivisionResult route_clique_subdivision(const FiniteGraph& host,
                                           const std::vector<VertexId>& branch);

/// Branch vertices are the m lowest chain members; routing happens on a
/// truncation around the chain and ray prefix. Verified before return.
SubdivisionResult build_clique_subdivision(const Graph& g, const ChainReport& chain,
                                           std::size_t m, const TruncationLimits& limits = {});

struct WitnessParams {
  std::uint64_t budget = 100'000;
  std::size_t clique_order = 4;
  std::size_t fan_size = 5;
  std::size_t fan_count = 3;
  std::size_t separation_k = 5;
  std::size_t high_edge_count = 3;
  TruncationLimits limits;
};

struct WitnessBundle {
  FailureProbe probe;
  ChainReport chain;
  std::vector<FanResult> fans;
  SeparationEvidence inseparability;
  std::vector<HighEdgeProbe> high_edges;
  SubdivisionResult clique;

  bool verified() const;
};

/// Full failure analysis of a budgeted run. Returns std::nullopt when there is
/// nothing to witness: the run spans, or no pending component is persistent.
std::optional<WitnessBundle> run_witness(const Graph& g, const CoverAssignment& cover,
                                         const WitnessParams& params);

}  // namespace nst
