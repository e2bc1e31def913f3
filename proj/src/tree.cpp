#include "nst/tree.hpp"

#include <algorithm>
#include <functional>

#include "nst/errors.hpp"

namespace nst {

std::string to_string(TreeCmp c) {
  switch (c) {
    case TreeCmp::Less: return "LESS";
    case TreeCmp::Greater: return "GREATER";
    case TreeCmp::Equal: return "EQUAL";
    case TreeCmp::Incomparable: return "INCOMPARABLE";
  }
  return "?";
}

RootedTree::RootedTree(VertexId root) : root_(root) {
  depth_.emplace(root, 0);
  vertices_.insert(root);
}

RootedTree RootedTree::from_parents(VertexId root, const std::map<VertexId, VertexId>& parents) {
  if (parents.count(root)) throw DomainError("tree: the root has a parent entry");
  RootedTree t(root);
  std::map<VertexId, std::vector<VertexId>> kids;
  for (const auto& [v, p] : parents) kids[p].push_back(v);
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    auto it = kids.find(u);
    if (it == kids.end()) continue;
    for (VertexId c : it->second) {
      t.add_leaf(u, c);
      stack.push_back(c);
    }
  }
  if (t.size() != parents.size() + 1) {
    throw DomainError("tree: parent map does not describe a tree hanging from the root");
  }
  return t;
}

void RootedTree::require(VertexId v) const {
  if (!contains(v)) throw DomainError("tree: vertex " + std::to_string(v) + " is not in the tree");
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
  require(v);
  auto it = parent_.find(v);
  if (it == parent_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootedTree::depth(VertexId v) const {
  require(v);
  return depth_.at(v);
}

std::vector<VertexId> RootedTree::children(VertexId v) const {
  require(v);
  auto it = children_.find(v);
  return it == children_.end() ? std::vector<VertexId>{} : it->second;
}

std::vector<VertexId> RootedTree::uptree(VertexId v) const {
  require(v);
  std::vector<VertexId> out;
  std::vector<VertexId> stack{v};
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    out.push_back(u);
    if (auto it = children_.find(u); it != children_.end()) {
      stack.insert(stack.end(), it->second.rbegin(), it->second.rend());
    }
  }
  return out;
}

Path RootedTree::root_path(VertexId v) const {
  require(v);
  Path out{v};
  for (auto it = parent_.find(v); it != parent_.end(); it = parent_.find(it->second)) {
    out.push_back(it->second);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void RootedTree::add_leaf(VertexId parent, VertexId v) {
  require(parent);
  if (contains(v)) throw DomainError("tree: vertex " + std::to_string(v) + " already present");
  parent_.emplace(v, parent);
  depth_.emplace(v, depth_.at(parent) + 1);
  vertices_.insert(v);
  auto& kids = children_[parent];
  kids.insert(std::upper_bound(kids.begin(), kids.end(), v), v);
}

void RootedTree::graft(const Path& path) {
  if (path.empty()) throw DomainError("tree: empty graft");
  for (std::size_t i = 1; i < path.size(); ++i) add_leaf(path[i - 1], path[i]);
}

TreeCmp tree_cmp(const RootedTree& t, VertexId u, VertexId v) {
  std::size_t du = t.depth(u);
  std::size_t dv = t.depth(v);
  if (u == v) return TreeCmp::Equal;
  VertexId a = u;
  VertexId b = v;
  while (dv > du) {
    b = *t.parent(b);
    --dv;
  }
  while (du > dv) {
    a = *t.parent(a);
    --du;
  }
  if (a != b) return TreeCmp::Incomparable;
  return t.depth(u) < t.depth(v) ? TreeCmp::Less : TreeCmp::Greater;
}

bool in_uptree(const RootedTree& t, VertexId v, VertexId member) {
  auto c = tree_cmp(t, v, member);
  return c == TreeCmp::Less || c == TreeCmp::Equal;
}

bool is_chain(const RootedTree& t, const VertexSet& s) {
  for (VertexId v : s) t.depth(v);
  // A chain ordered by depth is a sequence of successive ancestors, so it
  // suffices to compare neighbours in that order.
  std::vector<VertexId> order(s.begin(), s.end());
  std::stable_sort(order.begin(), order.end(),
                   [&t](VertexId a, VertexId b) { return t.depth(a) < t.depth(b); });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (tree_cmp(t, order[i - 1], order[i]) == TreeCmp::Incomparable) return false;
    if (t.depth(order[i - 1]) == t.depth(order[i])) return false;
  }
  return true;
}

VertexId chain_max(const RootedTree& t, const VertexSet& s) {
  if (s.empty()) throw DomainError("chain_max: empty set");
  if (!is_chain(t, s)) throw InvariantViolation("chain_max: set is not a chain");
  return *std::max_element(s.begin(), s.end(),
                           [&t](VertexId a, VertexId b) { return t.depth(a) < t.depth(b); });
}

std::vector<std::vector<VertexId>> levels(const RootedTree& t) {
  std::vector<std::vector<VertexId>> out;
  for (VertexId v : t.vertex_set()) {
    std::size_t d = t.depth(v);
    if (out.size() <= d) out.resize(d + 1);
    out[d].push_back(v);
  }
  return out;
}

std::string NormalityReport::describe() const {
  if (normal) return "normal";
  if (offending_edge) {
    return "edge {" + std::to_string(offending_edge->first) + "," +
           std::to_string(offending_edge->second) + "} has incomparable ends";
  }
  if (incomparable_attachments) {
    return "component " + std::to_string(component_rep.value_or(0)) +
           " attaches at incomparable vertices " + std::to_string(incomparable_attachments->first) +
           " and " + std::to_string(incomparable_attachments->second);
  }
  return "not normal";
}

void require_subtree(const FiniteGraph& g, const RootedTree& t) {
  for (VertexId v : t.vertex_set()) {
    if (!g.has_vertex(v)) {
      throw DomainError("tree vertex " + std::to_string(v) + " is not a graph vertex");
    }
  }
  for (const auto& [v, p] : t.parents()) {
    if (!g.adjacent(v, p)) {
      throw DomainError("tree edge {" + std::to_string(p) + "," + std::to_string(v) +
                        "} is not a graph edge");
    }
  }
}

NormalityReport is_normal(const FiniteGraph& g, const RootedTree& t) {
  require_subtree(g, t);
  NormalityReport report;
  for (const auto& [u, v] : g.edges()) {
    if (t.contains(u) && t.contains(v) && tree_cmp(t, u, v) == TreeCmp::Incomparable) {
      report.normal = false;
      report.offending_edge = Edge{u, v};
      return report;
    }
  }
  for (const auto& comp : g.components_avoiding(t.vertex_set())) {
    VertexSet attach;
    for (VertexId d : comp) {
      for (VertexId w : g.adjacency(d)) {
        if (t.contains(w)) attach.insert(w);
      }
    }
    std::vector<VertexId> a(attach.begin(), attach.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = i + 1; j < a.size(); ++j) {
        if (tree_cmp(t, a[i], a[j]) == TreeCmp::Incomparable) {
          report.normal = false;
          report.incomparable_attachments = Edge{a[i], a[j]};
          report.component_rep = comp.front();
          return report;
        }
      }
    }
  }
  return report;
}

bool is_normal_bruteforce(const FiniteGraph& g, const RootedTree& t) {
  if (g.vertex_count() > kBruteforceLimit) {
    throw RefusalError("is_normal_bruteforce: graph has more than " +
                       std::to_string(kBruteforceLimit) + " vertices");
  }
  require_subtree(g, t);
  auto tree_edge = [&t](VertexId a, VertexId b) {
    auto pa = t.parents().find(a);
    auto pb = t.parents().find(b);
    return (pa != t.parents().end() && pa->second == b) ||
           (pb != t.parents().end() && pb->second == a);
  };

  // Depth-first enumeration of every simple path that starts in T, leaves it
  // through a non-tree edge and stays outside until it lands in T again.
  VertexSet on_path;
  bool ok = true;
  std::function<void(VertexId, VertexId)> walk = [&](VertexId start, VertexId at) {
    for (VertexId w : g.adjacency(at)) {
      if (!ok) return;
      if (t.contains(w)) {
        if (w == start) continue;
        if (at == start && tree_edge(start, w)) continue;
        if (tree_cmp(t, start, w) == TreeCmp::Incomparable) ok = false;
        continue;
      }
      if (on_path.count(w)) continue;
      on_path.insert(w);
      walk(start, w);
      on_path.erase(w);
    }
  };
  for (VertexId a : t.vertex_set()) {
    walk(a, a);
    if (!ok) return false;
  }
  return true;
}

}  // namespace nst
