#pragma once

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "nst/cover.hpp"
#include "nst/finite_graph.hpp"
#include "nst/graph.hpp"
#include "nst/tree.hpp"

namespace nst {

/// Work item for one component D of G - T: its discovered attachment set
/// N(D), one chosen neighbour y_x in D per attachment vertex x, and the cover
/// pick v_D with its level n_D.
struct ExtensionTask {
  VertexId rep = 0;
  VertexSet attachments;
  std::map<VertexId, VertexId> chosen;
  VertexId pick = 0;
  std::uint64_t pick_level = 0;
  std::size_t created_at_size = 0;

  VertexSet targets() const;
};

/// One executed (or dropped) task, as recorded in the event log.
struct StepEvent {
  std::uint64_t tick = 0;
  VertexId rep = 0;
  std::vector<VertexId> attach;
  std::vector<Path> grafts;
  bool dropped = false;

  friend bool operator==(const StepEvent&, const StepEvent&) = default;
};

struct BuildReport {
  RootedTree tree{0};
  bool spanning = false;
  /// Component names with a live task when the run stopped, ascending.
  std::vector<VertexId> pending;
  /// Pending components that are what is left of a component after a step
  /// into it, and still hang from that step's attachment set.
  std::vector<VertexId> persistent;
  std::uint64_t ticks = 0;
  std::size_t steps = 0;
  std::vector<std::string> notices;
  std::vector<StepEvent> events;

  const VertexSet& covered() const { return tree.vertex_set(); }
};

struct BuildOptions {
  std::uint64_t search_budget = 1'000'000;
  /// Recompute N(D') exactly during every graft and assert it is a chain.
  /// This costs a pass over the whole tree per graft.
  bool verify_chain = false;
  /// Called after every executed step with the current tree.
  std::function<void(const RootedTree&, const StepEvent&)> on_step;
};

/// The greedy construction T_0 = {root} c T_1 c ... as a resumable,
/// deterministic scheduler.
///
/// A scheduler tick is either one discovery advance (one neighbour cursor of
/// one tree vertex moves one position, round-robin over tree vertices) or one
/// extension step. A step is taken once the queue is nonempty and a full sweep
/// of the live cursors has happened since the previous step. The queue is
/// first-in-first-out with at most one task per component name.
class ConstructionState {
 public:
  ConstructionState(const Graph& g, CoverAssignment cover, VertexId root,
                    BuildOptions options = {});

  /// Spends up to `tick_budget` ticks on discovery only.
  void discover_tasks(std::uint64_t tick_budget);

  /// Pops and executes the oldest task. Returns false if the queue is empty.
  /// An exception leaves the state unusable.
  bool step();

  /// Interleaves discovery and steps until `tick_budget` more ticks are spent
  /// or nothing is left to do.
  void run(std::uint64_t tick_budget);

  /// No live task and no cursor that can still advance.
  bool finished() const { return queue_.empty() && ring_.empty(); }

  const RootedTree& tree() const { return tree_; }
  const std::deque<ExtensionTask>& queue() const { return queue_; }
  const std::vector<StepEvent>& events() const { return events_; }
  std::uint64_t ticks() const { return ticks_; }
  std::size_t steps() const { return steps_; }
  const Graph& graph() const { return *graph_; }
  const CoverAssignment& cover() const { return cover_; }

  BuildReport report() const;

 private:
  struct Cursor {
    VertexId vertex;
    std::size_t position;
  };

  VertexId resolve(VertexId y);
  void advance_one();
  void note_discovery(VertexId x, VertexId y);
  void enqueue(VertexId rep);
  ExtensionTask build_task(VertexId rep) const;
  VertexSet regroup(VertexId old_rep, const std::vector<Path>& grafts);
  void mark_survivors(const VertexSet& fresh, const VertexSet& attach);

  const Graph* graph_;
  CoverAssignment cover_;
  BuildOptions options_;
  RootedTree tree_;

  std::deque<Cursor> ring_;
  std::uint64_t sweep_progress_ = 0;

  /// Outside vertex -> tree vertices that discovered it.
  std::map<VertexId, VertexSet> discovered_;
  /// Component name -> discovered outside vertices in that component.
  std::map<VertexId, VertexSet> by_rep_;
  /// Component names for the current tree; entries of an extended component
  /// are dropped through cached_by_rep_.
  std::unordered_map<VertexId, VertexId> rep_cache_;
  std::unordered_map<VertexId, std::vector<VertexId>> cached_by_rep_;

  std::deque<ExtensionTask> queue_;
  std::set<VertexId> queued_;
  std::set<VertexId> persisted_;
  std::vector<StepEvent> events_;
  std::vector<std::string> notices_;
  std::uint64_t ticks_ = 0;
  std::size_t steps_ = 0;
};

/// Builds a normal spanning tree of a finite connected graph rooted at its
/// smallest vertex. Throws DomainError naming an unreachable vertex when the
/// graph is disconnected.
BuildReport build_finite(const FiniteGraph& g, const CoverAssignment& cover,
                         const BuildOptions& options = {});

/// Runs the fair schedule for `budget` ticks from `root`.
BuildReport build_budgeted(const Graph& g, const CoverAssignment& cover, std::uint64_t budget,
                           VertexId root, const BuildOptions& options = {});

/// Rebuilds a tree from its root and event log.
RootedTree replay(VertexId root, const std::vector<StepEvent>& events);

}  // namespace nst
