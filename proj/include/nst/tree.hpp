#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nst/finite_graph.hpp"
#include "nst/graph.hpp"

namespace nst {

enum class TreeCmp { Less, Greater, Equal, Incomparable };

std::string to_string(TreeCmp c);

/// Finite rooted tree stored as parent and depth maps, with child lists kept
/// alongside so uptrees can be walked without a full scan. The tree-order is
/// u <= v iff u lies on the root path of v.
class RootedTree {
 public:
  explicit RootedTree(VertexId root);

  /// Builds a tree from a parent map, computing depths. Throws DomainError on
  /// cycles, on parents that are not tree vertices, or on a parent entry for
  /// the root.
  static RootedTree from_parents(VertexId root, const std::map<VertexId, VertexId>& parents);

  VertexId root() const { return root_; }
  std::size_t size() const { return depth_.size(); }
  bool contains(VertexId v) const { return depth_.count(v) != 0; }

  std::optional<VertexId> parent(VertexId v) const;
  std::size_t depth(VertexId v) const;
  const std::map<VertexId, VertexId>& parents() const { return parent_; }
  const VertexSet& vertex_set() const { return vertices_; }

  /// Children of v, ascending.
  std::vector<VertexId> children(VertexId v) const;

  /// All t with v <= t, v first, in depth-first order.
  std::vector<VertexId> uptree(VertexId v) const;

  /// Root first, v last.
  Path root_path(VertexId v) const;

  /// Adds v below an existing tree vertex.
  void add_leaf(VertexId parent, VertexId v);

  /// Adds path[1..] as a chain hanging from path[0], which must be a tree
  /// vertex while the rest must be new.
  void graft(const Path& path);

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.root_ == b.root_ && a.parent_ == b.parent_;
  }

 private:
  void require(VertexId v) const;

  VertexId root_;
  std::map<VertexId, VertexId> parent_;
  std::map<VertexId, std::size_t> depth_;
  std::map<VertexId, std::vector<VertexId>> children_;
  VertexSet vertices_;
};

TreeCmp tree_cmp(const RootedTree& t, VertexId u, VertexId v);

/// v <= t in the tree-order, i.e. t lies in the uptree rooted at v.
bool in_uptree(const RootedTree& t, VertexId v, VertexId member);

bool is_chain(const RootedTree& t, const VertexSet& s);

/// The maximum of a nonempty chain. Throws InvariantViolation if `s` is not a
/// chain and DomainError if it is empty.
VertexId chain_max(const RootedTree& t, const VertexSet& s);

/// Vertex sets by depth, level 0 first; each level ascending.
std::vector<std::vector<VertexId>> levels(const RootedTree& t);

struct NormalityReport {
  bool normal = true;
  /// A graph edge inside the tree with incomparable ends.
  std::optional<Edge> offending_edge;
  /// Two incomparable attachment vertices of one component of G - T.
  std::optional<Edge> incomparable_attachments;
  std::optional<VertexId> component_rep;

  std::string describe() const;
};

/// Throws DomainError unless every tree vertex is a graph vertex and every
/// parent link is a graph edge.
void require_subtree(const FiniteGraph& g, const RootedTree& t);

/// Structural normality test: every graph edge inside T has comparable ends,
/// and for every component D of G - T the attachment set N(D) is a chain.
/// These two conditions together are equivalent to comparability of the ends
/// of every T-path, since a T-path either is such an edge or runs through one
/// component D between two members of N(D).
NormalityReport is_normal(const FiniteGraph& g, const RootedTree& t);

/// Reference check: enumerates every T-path explicitly. Refuses graphs with
/// more than kBruteforceLimit vertices.
inline constexpr std::size_t kBruteforceLimit = 12;
bool is_normal_bruteforce(const FiniteGraph& g, const RootedTree& t);

}  // namespace nst
