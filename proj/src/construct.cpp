#include "nst/construct.hpp"

#include <algorithm>
#include <iterator>
#include <limits>

#include "nst/errors.hpp"
#include "nst/extend.hpp"

namespace nst {

VertexSet ExtensionTask::targets() const {
  VertexSet out{pick};
  for (const auto& [x, y] : chosen) out.insert(y);
  return out;
}

ConstructionState::ConstructionState(const Graph& g, CoverAssignment cover, VertexId root,
                                     BuildOptions options)
    : graph_(&g), cover_(std::move(cover)), options_(std::move(options)), tree_(root) {
  if (!g.has_vertex(root)) {
    throw DomainError(g.name() + ": root " + std::to_string(root) + " is not a vertex");
  }
  ring_.push_back({root, 0});
}

VertexId ConstructionState::resolve(VertexId y) {
  if (auto it = rep_cache_.find(y); it != rep_cache_.end()) return it->second;
  const VertexSet& t = tree_.vertex_set();
  if (auto members = graph_->enumerate_component(y, t)) {
    VertexId rep = members->front();
    for (VertexId m : *members) rep_cache_[m] = rep;
    auto& cached = cached_by_rep_[rep];
    cached.insert(cached.end(), members->begin(), members->end());
    return rep;
  }
  VertexId rep = graph_->component_rep(y, t);
  rep_cache_[y] = rep;
  cached_by_rep_[rep].push_back(y);
  return rep;
}

void ConstructionState::advance_one() {
  Cursor c = ring_.front();
  ring_.pop_front();
  ++ticks_;
  ++sweep_progress_;
  auto y = graph_->neighbor_at(c.vertex, c.position);
  if (!y) return;  // exhausted cursors leave the ring
  ++c.position;
  ring_.push_back(c);
  if (!tree_.contains(*y)) note_discovery(c.vertex, *y);
}

void ConstructionState::note_discovery(VertexId x, VertexId y) {
  discovered_[y].insert(x);
  VertexId rep = resolve(y);
  by_rep_[rep].insert(y);
  enqueue(rep);
}

void ConstructionState::enqueue(VertexId rep) {
  if (!queued_.insert(rep).second) return;
  queue_.push_back(build_task(rep));
}

ExtensionTask ConstructionState::build_task(VertexId rep) const {
  ExtensionTask task;
  task.rep = rep;
  task.created_at_size = tree_.size();
  if (auto it = by_rep_.find(rep); it != by_rep_.end()) {
    // Ascending iteration makes the first hit per attachment vertex its
    // smallest discovered neighbour in D.
    for (VertexId y : it->second) {
      for (VertexId x : discovered_.at(y)) {
        task.attachments.insert(x);
        if (cover_.avoided().count(y)) continue;
        task.chosen.emplace(x, y);
      }
    }
  }
  task.pick = cover_.pick(*graph_, rep, tree_.vertex_set());
  task.pick_level = cover_.level(task.pick);
  return task;
}

// Re-derives component names inside the component just extended. Every other
// component of G - T is untouched by the step and keeps its name and task.
VertexSet ConstructionState::regroup(VertexId old_rep, const std::vector<Path>& grafts) {
  for (const Path& path : grafts) {
    for (std::size_t i = 1; i < path.size(); ++i) discovered_.erase(path[i]);
  }
  if (auto it = cached_by_rep_.find(old_rep); it != cached_by_rep_.end()) {
    for (VertexId v : it->second) rep_cache_.erase(v);
    cached_by_rep_.erase(it);
  }
  VertexSet fresh;
  auto it = by_rep_.find(old_rep);
  if (it == by_rep_.end()) return fresh;
  VertexSet ys = std::move(it->second);
  by_rep_.erase(it);
  for (VertexId y : ys) {
    if (tree_.contains(y)) continue;
    VertexId rep = resolve(y);
    by_rep_[rep].insert(y);
    fresh.insert(rep);
  }
  for (VertexId rep : fresh) enqueue(rep);
  return fresh;
}

// A part of the extended component that still hangs from the attachment set
// used for the step was extended into without being absorbed.
void ConstructionState::mark_survivors(const VertexSet& fresh, const VertexSet& attach) {
  for (VertexId rep : fresh) {
    bool touches = false;
    for (VertexId y : by_rep_.at(rep)) {
      for (VertexId x : discovered_.at(y)) touches = touches || attach.count(x) != 0;
      if (touches) break;
    }
    if (touches) persisted_.insert(rep);
  }
}

void ConstructionState::discover_tasks(std::uint64_t tick_budget) {
  for (std::uint64_t i = 0; i < tick_budget && !ring_.empty(); ++i) advance_one();
}

bool ConstructionState::step() {
  if (queue_.empty()) return false;
  ExtensionTask stale = std::move(queue_.front());
  queue_.pop_front();
  queued_.erase(stale.rep);
  ++ticks_;
  sweep_progress_ = 0;

  StepEvent event;
  event.tick = ticks_;
  event.rep = stale.rep;
  if (tree_.contains(stale.rep) || resolve(stale.rep) != stale.rep ||
      !by_rep_.count(stale.rep)) {
    event.dropped = true;
    events_.push_back(std::move(event));
    return true;
  }

  ExtensionTask task = build_task(stale.rep);
  if (!is_chain(tree_, task.attachments)) {
    throw InvariantViolation("attachment set of component " + std::to_string(task.rep) +
                             " is not a chain");
  }
  if (task.chosen.size() < task.attachments.size()) {
    notices_.push_back("tick " + std::to_string(ticks_) + ": component " +
                       std::to_string(task.rep) +
                       " has attachment vertices whose only discovered neighbours are avoided");
  }

  ExtendOptions ext;
  ext.avoid_interior = cover_.avoided();
  ext.verify_chain = options_.verify_chain;
  if (!task.attachments.empty()) ext.anchor = chain_max(tree_, task.attachments);
  ExtendResult grown = extend_normal(*graph_, std::move(tree_), task.rep, task.targets(),
                                     options_.search_budget, ext);
  tree_ = std::move(grown.tree);

  // D meets the new tree in a connected set: exactly one new vertex hangs
  // from the old tree, every other one from a new vertex.
  VertexSet added;
  for (const Path& path : grown.grafts) added.insert(path.begin() + 1, path.end());
  std::size_t entry_points = 0;
  for (VertexId v : added) entry_points += added.count(*tree_.parent(v)) == 0;
  if (!added.empty() && entry_points != 1) {
    throw InvariantViolation("extension into component " + std::to_string(task.rep) +
                             " is not connected inside the component");
  }

  for (VertexId v : added) ring_.push_back({v, 0});
  ++steps_;
  event.attach.assign(task.attachments.begin(), task.attachments.end());
  event.grafts = std::move(grown.grafts);
  events_.push_back(event);
  VertexSet fresh = regroup(task.rep, events_.back().grafts);
  mark_survivors(fresh, task.attachments);
  if (options_.on_step) options_.on_step(tree_, events_.back());
  return true;
}

void ConstructionState::run(std::uint64_t tick_budget) {
  const std::uint64_t stop = ticks_ + tick_budget;
  while (ticks_ < stop) {
    if (!queue_.empty() && (ring_.empty() || sweep_progress_ >= ring_.size())) {
      step();
    } else if (!ring_.empty()) {
      advance_one();
    } else {
      break;
    }
  }
}

BuildReport ConstructionState::report() const {
  BuildReport r;
  r.tree = tree_;
  r.spanning = finished();
  r.pending.assign(queued_.begin(), queued_.end());
  std::set_intersection(queued_.begin(), queued_.end(), persisted_.begin(), persisted_.end(),
                        std::back_inserter(r.persistent));
  r.ticks = ticks_;
  r.steps = steps_;
  r.notices = notices_;
  r.events = events_;
  return r;
}

BuildReport build_finite(const FiniteGraph& g, const CoverAssignment& cover,
                         const BuildOptions& options) {
  if (g.vertex_count() == 0) throw DomainError("build_finite: empty graph");
  VertexId root = g.vertices().front();
  auto reach = g.enumerate_component(root, {});
  if (reach->size() != g.vertex_count()) {
    for (VertexId v : g.vertices()) {
      if (!std::binary_search(reach->begin(), reach->end(), v)) {
        throw DomainError("build_finite: graph is disconnected; vertex " + std::to_string(v) +
                          " is unreachable from " + std::to_string(root));
      }
    }
  }
  ConstructionState state(g, cover, root, options);
  state.run(std::numeric_limits<std::uint64_t>::max() - 1);
  BuildReport r = state.report();
  if (!r.spanning || r.tree.size() != g.vertex_count()) {
    throw InvariantViolation("build_finite stopped without spanning the graph");
  }
  return r;
}

BuildReport build_budgeted(const Graph& g, const CoverAssignment& cover, std::uint64_t budget,
                           VertexId root, const BuildOptions& options) {
  ConstructionState state(g, cover, root, options);
  state.run(budget);
  return state.report();
}

RootedTree replay(VertexId root, const std::vector<StepEvent>& events) {
  RootedTree t(root);
  for (const auto& e : events) {
    for (const Path& p : e.grafts) t.graft(p);
  }
  return t;
}

}  // namespace nst
