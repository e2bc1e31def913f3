#include "nst/extend.hpp"

#include <algorithm>
#include <unordered_map>

#include "nst/errors.hpp"

namespace nst {

namespace {

std::vector<VertexId> deepest_first(const RootedTree& t) {
  std::vector<VertexId> order(t.vertex_set().begin(), t.vertex_set().end());
  std::stable_sort(order.begin(), order.end(),
                   [&t](VertexId a, VertexId b) { return t.depth(a) > t.depth(b); });
  return order;
}

// `scratch` is a copy of the tree's vertex set, made on first need, for the
// infinite-degree test.
bool touches_component(const Graph& g, VertexId tv, VertexId x, const VertexSet& tree_set,
                       std::optional<VertexSet>& scratch,
                       const std::function<bool(VertexId)>& in_component) {
  if (auto deg = g.degree(tv)) {
    for (std::size_t i = 0; i < *deg; ++i) {
      VertexId y = *g.neighbor_at(tv, i);
      if (!tree_set.count(y) && in_component(y)) return true;
    }
    return false;
  }
  if (!scratch) scratch = tree_set;
  scratch->erase(tv);
  bool joined = g.same_component_avoiding(tv, x, *scratch);
  scratch->insert(tv);
  return joined;
}

}  // namespace

VertexSet attachment_set(const Graph& g, const RootedTree& t, VertexId x) {
  auto in_component = g.component_membership(x, t.vertex_set());
  std::optional<VertexSet> scratch;
  VertexSet out;
  for (VertexId tv : t.vertex_set()) {
    if (touches_component(g, tv, x, t.vertex_set(), scratch, in_component)) out.insert(tv);
  }
  return out;
}

VertexId attachment_top(const Graph& g, const RootedTree& t, VertexId x) {
  auto in_component = g.component_membership(x, t.vertex_set());
  std::optional<VertexSet> scratch;
  for (VertexId tv : deepest_first(t)) {
    if (touches_component(g, tv, x, t.vertex_set(), scratch, in_component)) return tv;
  }
  throw InvariantViolation("component of " + std::to_string(x) +
                           " has no attachment vertex; is the host connected?");
}

Path connecting_path(const Graph& g, const RootedTree& t, VertexId from, VertexId to,
                     std::uint64_t budget, const VertexSet& avoid_interior,
                     std::uint64_t* cost) {
  const VertexSet& tree_set = t.vertex_set();
  auto in_target_component = g.component_membership(to, tree_set);
  std::uint64_t spent = 0;

  for (std::uint64_t stage = 1;; stage *= 2) {
    const std::uint64_t width = stage;
    const std::uint64_t depth_limit = stage;
    bool cut = false;

    std::unordered_map<VertexId, VertexId> parent;
    std::vector<std::pair<VertexId, std::uint64_t>> queue{{from, 0}};
    parent.emplace(from, from);
    std::optional<VertexId> hit_from;

    for (std::size_t head = 0; head < queue.size() && !hit_from; ++head) {
      auto [u, du] = queue[head];
      if (du == depth_limit) {
        cut = true;
        continue;
      }
      // Only infinite neighbour lists are cut at the stage width.
      const auto deg = g.degree(u);
      const std::uint64_t limit = deg ? *deg : width;
      for (std::uint64_t i = 0;; ++i) {
        if (i == limit) {
          if (!deg && g.neighbor_at(u, i)) cut = true;
          break;
        }
        if (++spent > budget) {
          if (cost) *cost += spent;
          throw BudgetError("path search from " + std::to_string(from) + " to " +
                            std::to_string(to) + " exceeded its budget");
        }
        auto y = g.neighbor_at(u, i);
        if (!y) break;
        if (*y == to) {
          hit_from = u;
          break;
        }
        if (tree_set.count(*y) || avoid_interior.count(*y) || parent.count(*y)) continue;
        // Past the first step every non-tree vertex is in the component of
        // the current vertex, so only the first step needs the oracle.
        if (u == from && !in_target_component(*y)) continue;
        parent.emplace(*y, u);
        queue.emplace_back(*y, du + 1);
      }
    }

    if (hit_from) {
      if (cost) *cost += spent;
      Path path{to};
      for (VertexId v = *hit_from; v != from; v = parent.at(v)) path.push_back(v);
      path.push_back(from);
      std::reverse(path.begin(), path.end());
      return path;
    }
    if (!cut) {
      if (cost) *cost += spent;
      throw InvariantViolation("no path from " + std::to_string(from) + " to " +
                               std::to_string(to) + " through the target's component");
    }
  }
}

namespace {

// Deepest candidate with a neighbour in the component of x in G - T, or
// nothing if none has one.
std::optional<VertexId> deepest_touching(const Graph& g, const RootedTree& t, VertexId x,
                                         std::vector<VertexId> candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&t](VertexId a, VertexId b) { return t.depth(a) > t.depth(b); });
  auto in_component = g.component_membership(x, t.vertex_set());
  std::optional<VertexSet> scratch;
  for (VertexId tv : candidates) {
    if (touches_component(g, tv, x, t.vertex_set(), scratch, in_component)) return tv;
  }
  return std::nullopt;
}

VertexId graft_point(const Graph& g, const RootedTree& t, VertexId x,
                     const std::vector<VertexId>& added, const ExtendOptions& options) {
  if (options.verify_chain) {
    VertexSet attach = attachment_set(g, t, x);
    if (!is_chain(t, attach)) {
      throw InvariantViolation("attachment set of the component of " + std::to_string(x) +
                               " is not a chain");
    }
    return chain_max(t, attach);
  }
  // Once something was grafted into D, the component of x hangs from a new
  // vertex, and everything above a new vertex is new.
  if (!added.empty()) {
    if (auto top = deepest_touching(g, t, x, added)) return *top;
    throw InvariantViolation("component of " + std::to_string(x) +
                             " does not touch the vertices grafted so far");
  }
  // The top of a chain lies in the uptree of any of its members.
  if (options.anchor && t.contains(*options.anchor)) {
    if (auto top = deepest_touching(g, t, x, t.uptree(*options.anchor))) return *top;
  }
  return attachment_top(g, t, x);
}

}  // namespace

ExtendResult extend_normal(const Graph& g, RootedTree t, VertexId d_rep,
                           const VertexSet& targets, std::uint64_t search_budget,
                           const ExtendOptions& options) {
  if (t.contains(d_rep)) {
    throw DomainError("extend_normal: component name " + std::to_string(d_rep) +
                      " is a tree vertex");
  }
  {
    auto in_d = g.component_membership(d_rep, t.vertex_set());
    for (VertexId x : targets) {
      if (!in_d(x)) {
        throw DomainError("extend_normal: target " + std::to_string(x) +
                          " is not in the component of " + std::to_string(d_rep));
      }
    }
  }

  ExtendResult result{std::move(t), {}, 0};
  RootedTree& grown = result.tree;
  std::vector<VertexId> added;
  for (VertexId x : targets) {
    if (grown.contains(x)) continue;
    VertexId top = graft_point(g, grown, x, added, options);
    std::uint64_t remaining =
        search_budget > result.search_cost ? search_budget - result.search_cost : 0;
    Path path = connecting_path(g, grown, top, x, remaining, options.avoid_interior,
                                &result.search_cost);
    // The component of x in G - T' lies inside D.
    auto in_dx = g.component_membership(x, grown.vertex_set());
    for (std::size_t i = 1; i < path.size(); ++i) {
      if (!in_dx(path[i])) {
        throw InvariantViolation("grafted vertex " + std::to_string(path[i]) +
                                 " lies outside the component being extended");
      }
    }
    grown.graft(path);
    added.insert(added.end(), path.begin() + 1, path.end());
    result.grafts.push_back(std::move(path));
  }
  return result;
}

}  // namespace nst
