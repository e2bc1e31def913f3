#include "nst/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "nst/errors.hpp"
#include "nst/finite_graph.hpp"

namespace nst {

namespace encoding {

VertexId grid_id(std::uint64_t x, std::uint64_t y) {
  std::uint64_t s = x + y;
  return s * (s + 1) / 2 + y;
}

std::pair<std::uint64_t, std::uint64_t> grid_coords(VertexId id) {
  auto w = static_cast<std::uint64_t>((std::sqrt(8.0 * static_cast<double>(id) + 1.0) - 1.0) / 2.0);
  while (w * (w + 1) / 2 > id) --w;
  while ((w + 1) * (w + 2) / 2 <= id) ++w;
  std::uint64_t y = id - w * (w + 1) / 2;
  return {w - y, y};
}

}  // namespace encoding

namespace {

// Locally finite infinite trees whose parent always has a smaller id than its
// children. Under that encoding the minimum of any subtree is its top vertex,
// so a component of T - F is named by the highest ancestor reachable from v.
class InfiniteTree : public Graph {
 public:
  bool is_finite() const override { return false; }

 protected:
  virtual std::optional<VertexId> parent(VertexId v) const = 0;
  virtual std::vector<VertexId> local_neighbors(VertexId v) const = 0;

  bool do_adjacent(VertexId u, VertexId v) const override {
    return parent(u) == v || parent(v) == u;
  }

  std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const override {
    auto list = local_neighbors(v);
    if (index >= list.size()) return std::nullopt;
    return list[index];
  }

  std::optional<std::size_t> do_degree(VertexId v) const override {
    return local_neighbors(v).size();
  }

  std::size_t depth(VertexId v) const {
    std::size_t d = 0;
    for (auto p = parent(v); p; p = parent(*p)) ++d;
    return d;
  }

  // Unique-path avoidance: walk both ends up to their meeting point.
  bool do_same_component(VertexId u, VertexId v, const VertexSet& avoid) const override {
    std::size_t du = depth(u);
    std::size_t dv = depth(v);
    while (du > dv) {
      u = *parent(u);
      --du;
      if (avoid.count(u)) return false;
    }
    while (dv > du) {
      v = *parent(v);
      --dv;
      if (avoid.count(v)) return false;
    }
    while (u != v) {
      u = *parent(u);
      v = *parent(v);
      if (avoid.count(u) || avoid.count(v)) return false;
    }
    return true;
  }

  VertexId do_component_rep(VertexId v, const VertexSet& avoid) const override {
    for (auto p = parent(v); p && !avoid.count(*p); p = parent(*p)) v = *p;
    return v;
  }
};

class BinaryTree final : public InfiniteTree {
 public:
  std::string name() const override { return "binary_tree"; }

 protected:
  bool do_has_vertex(VertexId v) const override { return v >= 1; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 1;
  }
  std::optional<VertexId> parent(VertexId v) const override {
    if (v <= 1) return std::nullopt;
    return v / 2;
  }
  std::vector<VertexId> local_neighbors(VertexId v) const override {
    std::vector<VertexId> out;
    if (v > 1) out.push_back(v / 2);
    out.push_back(2 * v);
    out.push_back(2 * v + 1);
    return out;
  }
};

class StarOfRays final : public InfiniteTree {
 public:
  explicit StarOfRays(std::uint64_t k) : k_(k) {}
  std::string name() const override { return "star_of_rays:" + std::to_string(k_); }

 protected:
  bool do_has_vertex(VertexId) const override { return true; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 0;
  }
  std::optional<VertexId> parent(VertexId v) const override {
    if (v == 0) return std::nullopt;
    if (v <= k_) return 0;
    return v - k_;
  }
  std::vector<VertexId> local_neighbors(VertexId v) const override {
    std::vector<VertexId> out;
    if (v == 0) {
      for (VertexId j = 1; j <= k_; ++j) out.push_back(j);
      return out;
    }
    out.push_back(*parent(v));
    out.push_back(v + k_);
    return out;
  }

 private:
  std::uint64_t k_;
};

class Comb final : public InfiniteTree {
 public:
  std::string name() const override { return "comb"; }

 protected:
  bool do_has_vertex(VertexId) const override { return true; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 0;
  }
  std::optional<VertexId> parent(VertexId v) const override {
    if (v == 0) return std::nullopt;
    if (v % 2 == 1) return v - 1;
    return v - 2;
  }
  std::vector<VertexId> local_neighbors(VertexId v) const override {
    if (v % 2 == 1) return {v - 1};
    std::vector<VertexId> out;
    if (v >= 2) out.push_back(v - 2);
    out.push_back(v + 1);
    out.push_back(v + 2);
    return out;
  }
};

class KOmega final : public Graph {
 public:
  std::string name() const override { return "komega"; }
  bool is_finite() const override { return false; }

 protected:
  bool do_has_vertex(VertexId) const override { return true; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 0;
  }
  bool do_adjacent(VertexId u, VertexId v) const override { return u != v; }
  std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const override {
    return index < v ? index : index + 1;
  }
  std::optional<std::size_t> do_degree(VertexId) const override { return std::nullopt; }
  // Removing finitely many vertices leaves infinitely many, all adjacent.
  bool do_same_component(VertexId, VertexId, const VertexSet&) const override { return true; }
  VertexId do_component_rep(VertexId, const VertexSet& avoid) const override {
    VertexId v = 0;
    while (avoid.count(v)) ++v;
    return v;
  }
  std::function<bool(VertexId)> do_component_membership(VertexId,
                                                       const VertexSet& avoid) const override {
    return [&avoid](VertexId y) { return avoid.count(y) == 0; };
  }
};

// Families whose connectivity in G - F is decided exactly by BFS inside a
// finite window that depends on the query. `in_window` describes the
// window; `escape` is a window vertex that is connected to everything outside
// the window whenever it is not avoided.
class WindowedGraph : public Graph {
 public:
  bool is_finite() const override { return false; }

 protected:
  struct Window {
    std::uint64_t bound = 0;
    VertexId escape = 0;
  };

  virtual Window window_for(const VertexSet& avoid, std::initializer_list<VertexId> extra,
                            std::uint64_t min_bound) const = 0;
  virtual bool in_window(VertexId v, const Window& w) const = 0;
  virtual std::vector<VertexId> window_neighbors(VertexId v, const Window& w) const = 0;

  std::vector<VertexId> bfs_in_window(VertexId start, const VertexSet& avoid,
                                      const Window& w) const {
    std::unordered_set<VertexId> seen{start};
    std::vector<VertexId> order{start};
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (VertexId y : window_neighbors(order[head], w)) {
        if (!in_window(y, w) || avoid.count(y) || !seen.insert(y).second) continue;
        order.push_back(y);
      }
    }
    return order;
  }

  bool do_same_component(VertexId u, VertexId v, const VertexSet& avoid) const override {
    Window w = window_for(avoid, {u, v}, 0);
    auto reach = bfs_in_window(u, avoid, w);
    return std::find(reach.begin(), reach.end(), v) != reach.end();
  }

  std::function<bool(VertexId)> do_component_membership(VertexId x,
                                                       const VertexSet& avoid) const override {
    Window w = window_for(avoid, {x}, 0);
    auto reach = bfs_in_window(x, avoid, w);
    bool reaches_outside = std::find(reach.begin(), reach.end(), w.escape) != reach.end();
    std::unordered_set<VertexId> members(reach.begin(), reach.end());
    return [this, w, reaches_outside, members = std::move(members), &avoid](VertexId y) {
      if (avoid.count(y)) return false;
      if (!in_window(y, w)) return reaches_outside;
      return members.count(y) != 0;
    };
  }
};

// Connectivity in N^2 - F is decided inside the box [0, B]^2 with B one more
// than the largest coordinate of u, v and F. The top row and right column of
// that box are free of F and connected, so any path that leaves the box can be
// rerouted along them; the box answer is therefore exact.
class Grid2d final : public WindowedGraph {
 public:
  std::string name() const override { return "grid2d"; }

 protected:
  bool do_has_vertex(VertexId) const override { return true; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 0;
  }
  std::vector<VertexId> local_neighbors(VertexId v) const {
    auto [x, y] = encoding::grid_coords(v);
    std::vector<VertexId> out;
    if (x > 0) out.push_back(encoding::grid_id(x - 1, y));
    if (y > 0) out.push_back(encoding::grid_id(x, y - 1));
    out.push_back(encoding::grid_id(x + 1, y));
    out.push_back(encoding::grid_id(x, y + 1));
    std::sort(out.begin(), out.end());
    return out;
  }
  std::vector<VertexId> window_neighbors(VertexId v, const Window&) const override {
    return local_neighbors(v);
  }
  bool do_adjacent(VertexId u, VertexId v) const override {
    auto [ux, uy] = encoding::grid_coords(u);
    auto [vx, vy] = encoding::grid_coords(v);
    std::uint64_t dx = ux > vx ? ux - vx : vx - ux;
    std::uint64_t dy = uy > vy ? uy - vy : vy - uy;
    return dx + dy == 1;
  }
  std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const override {
    auto list = local_neighbors(v);
    if (index >= list.size()) return std::nullopt;
    return list[index];
  }
  std::optional<std::size_t> do_degree(VertexId v) const override {
    return local_neighbors(v).size();
  }

  Window window_for(const VertexSet& avoid, std::initializer_list<VertexId> extra,
                    std::uint64_t min_bound) const override {
    std::uint64_t m = min_bound;
    auto bump = [&m](VertexId v) {
      auto [x, y] = encoding::grid_coords(v);
      m = std::max({m, x, y});
    };
    for (VertexId v : avoid) bump(v);
    for (VertexId v : extra) bump(v);
    Window w;
    w.bound = m + 1;
    w.escape = encoding::grid_id(w.bound, w.bound);
    return w;
  }
  bool in_window(VertexId v, const Window& w) const override {
    auto [x, y] = encoding::grid_coords(v);
    return x <= w.bound && y <= w.bound;
  }

  // Every id below v has coordinate sum at most x_v + y_v, so a box of that
  // size holds all candidates for the minimum.
  VertexId do_component_rep(VertexId v, const VertexSet& avoid) const override {
    auto [x, y] = encoding::grid_coords(v);
    Window w = window_for(avoid, {v}, x + y);
    auto reach = bfs_in_window(v, avoid, w);
    return *std::min_element(reach.begin(), reach.end());
  }
};

// A ray (vertex r + 1 for position r) plus vertex 0 joined to every even
// position. Beyond the largest id of u, v and F the ray tail is free and
// connected, and of its first two vertices one is odd (joined to 0), so BFS on
// ids [0, max + 2] is exact.
class DominatedRay final : public WindowedGraph {
 public:
  std::string name() const override { return "dominated_ray"; }

 protected:
  bool do_has_vertex(VertexId) const override { return true; }
  std::optional<VertexId> do_next_vertex(std::optional<VertexId> after) const override {
    return after ? *after + 1 : 0;
  }
  bool do_adjacent(VertexId u, VertexId v) const override {
    if (u > v) std::swap(u, v);
    if (u == 0) return v % 2 == 1;
    return v == u + 1;
  }
  std::optional<VertexId> do_neighbor_at(VertexId v, std::size_t index) const override {
    if (v == 0) return 2 * static_cast<VertexId>(index) + 1;
    auto list = ray_neighbors(v);
    if (index >= list.size()) return std::nullopt;
    return list[index];
  }
  std::optional<std::size_t> do_degree(VertexId v) const override {
    if (v == 0) return std::nullopt;
    return ray_neighbors(v).size();
  }
  std::vector<VertexId> window_neighbors(VertexId v, const Window& w) const override {
    if (v != 0) return ray_neighbors(v);
    std::vector<VertexId> out;
    for (VertexId j = 1; j <= w.bound; j += 2) out.push_back(j);
    return out;
  }
  std::vector<VertexId> ray_neighbors(VertexId v) const {
    std::vector<VertexId> out;
    if (v % 2 == 1) out.push_back(0);
    if (v >= 2) out.push_back(v - 1);
    out.push_back(v + 1);
    return out;
  }

  Window window_for(const VertexSet& avoid, std::initializer_list<VertexId> extra,
                    std::uint64_t min_bound) const override {
    std::uint64_t m = min_bound;
    for (VertexId v : avoid) m = std::max(m, v);
    for (VertexId v : extra) m = std::max(m, v);
    Window w;
    w.bound = m + 2;
    w.escape = w.bound;
    return w;
  }
  bool in_window(VertexId v, const Window& w) const override { return v <= w.bound; }

  VertexId do_component_rep(VertexId v, const VertexSet& avoid) const override {
    Window w = window_for(avoid, {v}, 0);
    auto reach = bfs_in_window(v, avoid, w);
    return *std::min_element(reach.begin(), reach.end());
  }
};

std::shared_ptr<const Graph> finite_family(const std::string& label, std::uint64_t n,
                                           std::vector<Edge> edges) {
  std::vector<VertexId> verts(n);
  for (std::uint64_t i = 0; i < n; ++i) verts[i] = i;
  auto g = std::make_shared<FiniteGraph>(std::move(verts), edges);
  g->set_name(label);
  return g;
}

struct FamilyInfo {
  std::size_t param_count;
  std::uint64_t min_param;
};

const std::unordered_map<std::string, FamilyInfo>& family_table() {
  static const std::unordered_map<std::string, FamilyInfo> table{
      {"path", {1, 1}},  {"cycle", {1, 3}},         {"complete", {1, 1}},
      {"binary_tree", {0, 0}}, {"grid2d", {0, 0}},  {"komega", {0, 0}},
      {"star_of_rays", {1, 1}}, {"dominated_ray", {0, 0}}, {"comb", {0, 0}},
  };
  return table;
}

}  // namespace

std::string FamilySpec::to_string() const {
  std::string out = name;
  for (auto p : params) out += ":" + std::to_string(p);
  return out;
}

FamilySpec parse_family_spec(const std::string& text) {
  FamilySpec spec;
  std::size_t start = 0;
  bool first = true;
  while (true) {
    auto colon = text.find(':', start);
    std::string part = text.substr(start, colon == std::string::npos ? std::string::npos
                                                                      : colon - start);
    if (first) {
      spec.name = part;
      first = false;
    } else {
      std::uint64_t value = 0;
      auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
      if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
        throw DomainError("family spec '" + text + "': parameter '" + part + "' is not a natural");
      }
      spec.params.push_back(value);
    }
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  auto it = family_table().find(spec.name);
  if (it == family_table().end()) throw DomainError("unknown graph family '" + spec.name + "'");
  if (spec.params.size() != it->second.param_count) {
    throw DomainError("family '" + spec.name + "' expects " +
                      std::to_string(it->second.param_count) + " parameter(s)");
  }
  return spec;
}

std::shared_ptr<const Graph> make_family(const FamilySpec& spec) {
  auto it = family_table().find(spec.name);
  if (it == family_table().end()) throw DomainError("unknown graph family '" + spec.name + "'");
  if (spec.params.size() != it->second.param_count) {
    throw DomainError("family '" + spec.name + "' expects " +
                      std::to_string(it->second.param_count) + " parameter(s)");
  }
  if (it->second.param_count == 1 && spec.params[0] < it->second.min_param) {
    throw DomainError("family '" + spec.name + "' needs parameter >= " +
                      std::to_string(it->second.min_param));
  }

  const std::string& name = spec.name;
  if (name == "path" || name == "cycle" || name == "complete") {
    std::uint64_t n = spec.params[0];
    std::vector<Edge> edges;
    if (name == "complete") {
      for (std::uint64_t i = 0; i < n; ++i)
        for (std::uint64_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    } else {
      for (std::uint64_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      if (name == "cycle") edges.emplace_back(n - 1, 0);
    }
    return finite_family(spec.to_string(), n, std::move(edges));
  }
  if (name == "binary_tree") return std::make_shared<BinaryTree>();
  if (name == "grid2d") return std::make_shared<Grid2d>();
  if (name == "komega") return std::make_shared<KOmega>();
  if (name == "star_of_rays") return std::make_shared<StarOfRays>(spec.params[0]);
  if (name == "dominated_ray") return std::make_shared<DominatedRay>();
  return std::make_shared<Comb>();
}

}  // namespace nst
