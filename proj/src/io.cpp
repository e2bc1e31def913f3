#include "nst/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "nst/errors.hpp"

namespace nst::io {

namespace {

// Pairwise adjacency queries for lazy hosts stop beyond this many vertices.
constexpr std::size_t kDotPairLimit = 1500;

VertexId as_id(const json& j, const std::string& what) {
  if (!j.is_number_unsigned()) throw DomainError(what + ": expected a vertex id, got " + j.dump());
  return j.get<VertexId>();
}

VertexId key_id(const std::string& key, const std::string& what) {
  if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
    throw DomainError(what + ": key \"" + key + "\" is not a vertex id");
  }
  try {
    return std::stoull(key);
  } catch (const std::out_of_range&) {
    throw DomainError(what + ": key \"" + key + "\" is out of range");
  }
}

const json& field(const json& j, const char* name, const std::string& what) {
  if (!j.is_object()) throw DomainError(what + ": expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw DomainError(what + ": missing \"" + name + "\"");
  return *it;
}

json path_list(const std::vector<Path>& paths) {
  json out = json::array();
  for (const Path& p : paths) out.push_back(p);
  return out;
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

std::vector<Edge> drawn_edges(const Graph& g, const std::vector<VertexId>& drawn) {
  std::vector<Edge> out;
  if (const auto* fg = dynamic_cast<const FiniteGraph*>(&g)) {
    VertexSet keep(drawn.begin(), drawn.end());
    for (const Edge& e : fg->edges()) {
      if (keep.count(e.first) && keep.count(e.second)) out.push_back(e);
    }
    return out;
  }
  if (drawn.size() > kDotPairLimit) return out;
  for (std::size_t i = 0; i < drawn.size(); ++i) {
    for (std::size_t j = i + 1; j < drawn.size(); ++j) {
      if (g.adjacent(drawn[i], drawn[j])) out.emplace_back(drawn[i], drawn[j]);
    }
  }
  return out;
}

bool tree_edge(const RootedTree& t, VertexId u, VertexId v) {
  return (t.contains(v) && t.parent(v) == u) || (t.contains(u) && t.parent(u) == v);
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << text;
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(what + ": " + e.what());
  }
}

FiniteGraph graph_from_json(const json& j) {
  const std::string what = "graph JSON";
  const json& vs = field(j, "vertices", what);
  const json& es = field(j, "edges", what);
  if (!vs.is_array() || !es.is_array()) throw DomainError(what + ": vertices and edges must be arrays");
  std::vector<VertexId> vertices;
  for (const json& v : vs) vertices.push_back(as_id(v, what));
  std::vector<Edge> edges;
  for (const json& e : es) {
    if (!e.is_array() || e.size() != 2) throw DomainError(what + ": edge " + e.dump() + " is not a pair");
    edges.emplace_back(as_id(e[0], what), as_id(e[1], what));
  }
  return FiniteGraph(std::move(vertices), edges);
}

json graph_to_json(const FiniteGraph& g) {
  json edges = json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e));
  return {{"vertices", g.vertices()}, {"edges", edges}};
}

FiniteGraph load_graph(const std::filesystem::path& path) {
  FiniteGraph g = graph_from_json(parse_json(read_file(path), path.string()));
  g.set_name(path.filename().string());
  return g;
}

RootedTree tree_from_json(const json& j) {
  const std::string what = "tree JSON";
  VertexId root = as_id(field(j, "root", what), what);
  const json& ps = field(j, "parents", what);
  if (!ps.is_object()) throw DomainError(what + ": parents must be an object");
  std::map<VertexId, VertexId> parents;
  for (const auto& [key, value] : ps.items()) {
    parents.emplace(key_id(key, what), as_id(value, what));
  }
  return RootedTree::from_parents(root, parents);
}

json tree_to_json(const RootedTree& t) {
  json parents = json::object();
  for (const auto& [v, p] : t.parents()) parents[std::to_string(v)] = p;
  return {{"root", t.root()}, {"parents", parents}};
}

RootedTree load_tree(const std::filesystem::path& path) {
  return tree_from_json(parse_json(read_file(path), path.string()));
}

std::map<VertexId, std::uint64_t> cover_table_from_json(const json& j) {
  const std::string what = "cover table JSON";
  const json& ls = field(j, "levels", what);
  if (!ls.is_object()) throw DomainError(what + ": levels must be an object");
  std::map<VertexId, std::uint64_t> out;
  for (const auto& [key, value] : ls.items()) {
    if (!value.is_number_unsigned()) throw DomainError(what + ": level " + value.dump() + " is not a natural");
    out.emplace(key_id(key, what), value.get<std::uint64_t>());
  }
  return out;
}

json event_to_json(const StepEvent& e) {
  json j = {{"tick", e.tick}, {"rep", e.rep}, {"attach", e.attach}, {"grafts", path_list(e.grafts)}};
  if (e.dropped) j["dropped"] = true;
  return j;
}

std::string event_log(const std::vector<StepEvent>& events) {
  std::string out;
  for (const auto& e : events) {
    out += event_to_json(e).dump();
    out += '\n';
  }
  return out;
}

std::vector<StepEvent> parse_event_log(const std::string& text) {
  std::vector<StepEvent> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = parse_json(line, "event log");
    try {
      StepEvent e;
      e.tick = j.at("tick").get<std::uint64_t>();
      e.rep = j.at("rep").get<VertexId>();
      e.attach = j.at("attach").get<std::vector<VertexId>>();
      e.grafts = j.at("grafts").get<std::vector<Path>>();
      e.dropped = j.value("dropped", false);
      out.push_back(std::move(e));
    } catch (const json::exception& ex) {
      throw DomainError(std::string("event log: ") + ex.what());
    }
  }
  return out;
}

json separation_to_json(const SeparationResult& r) {
  json direct = json::array();
  for (const Edge& e : r.direct_edges) direct.push_back(edge_json(e));
  json j = {{"count", r.count()},
            {"paths", path_list(r.paths)},
            {"capped", r.capped},
            {"direct_edges", direct},
            {"inseparable", r.inseparable()}};
  if (r.capped) {
    j["separator"] = nullptr;
  } else {
    j["separator"] = r.separator;
  }
  return j;
}

json witness_to_json(const WitnessBundle& b) {
  const FailureProbe& p = b.probe;
  json probe = {{"rep", p.rep},
                {"cover", p.cover.describe()},
                {"cover_index", p.cover_index},
                {"persistent", p.persistent},
                {"tree_size", p.snapshot.tree.size()},
                {"ticks", p.snapshot.ticks},
                {"steps", p.snapshot.steps},
                {"pending", p.snapshot.pending}};

  json fans = json::array();
  for (const auto& f : b.fans) {
    fans.push_back({{"center", f.fan.center},
                    {"requested", f.requested},
                    {"found", f.fan.paths.size()},
                    {"status", to_string(f.status)},
                    {"capped", f.capped},
                    {"paths", path_list(f.fan.paths)}});
  }
  const SeparationEvidence& s = b.inseparability;
  json insep = {{"requested", s.requested},
                {"found", s.paths.size()},
                {"status", to_string(s.status)},
                {"u_side_size", s.u_side.size()},
                {"capped", s.capped},
                {"paths", path_list(s.paths)}};

  json high = json::array();
  for (const auto& h : b.high_edges) {
    json item = {{"edge", edge_json(h.edge)}, {"status", to_string(h.status)}};
    item["neighbor_witness"] = h.neighbor_witness ? json(*h.neighbor_witness) : json(nullptr);
    item["u_witness"] = h.u_witness ? json(*h.u_witness) : json(nullptr);
    high.push_back(item);
  }
  const SubdivisionResult& c = b.clique;
  json clique = {{"order", c.subdivision.order()},
                 {"status", to_string(c.status)},
                 {"branch", c.subdivision.branch},
                 {"paths", path_list(c.subdivision.paths)},
                 {"capped", c.capped}};
  if (!c.note.empty()) clique["note"] = c.note;

  return {{"verified", b.verified()},
          {"probe", probe},
          {"chain", b.chain.chain},
          {"chain_ticks", b.chain.ticks},
          {"ray_prefix", b.chain.ray_prefix},
          {"fans", fans},
          {"inseparability", insep},
          {"high_edges", high},
          {"clique", clique}};
}

std::string tree_dot(const Graph& g, const RootedTree& t) {
  std::vector<VertexId> drawn;
  if (const auto* fg = dynamic_cast<const FiniteGraph*>(&g)) {
    drawn = fg->vertices();
  } else {
    drawn.assign(t.vertex_set().begin(), t.vertex_set().end());
  }
  std::ostringstream out;
  out << "graph tree {\n";
  for (VertexId v : drawn) {
    out << "  " << v;
    if (v == t.root()) out << " [shape=doublecircle]";
    else if (!t.contains(v)) out << " [color=gray]";
    out << ";\n";
  }
  VertexSet seen;
  for (const Edge& e : drawn_edges(g, drawn)) {
    out << "  " << e.first << " -- " << e.second;
    if (!tree_edge(t, e.first, e.second)) out << " [style=dashed]";
    out << ";\n";
  }
  // Parent links are drawn even when the pair scan was skipped.
  if (!dynamic_cast<const FiniteGraph*>(&g) && drawn.size() > kDotPairLimit) {
    for (const auto& [v, p] : t.parents()) out << "  " << p << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string separation_dot(const FiniteGraph& g, const SeparationResult& r) {
  std::set<Edge> on_path;
  for (const Path& p : r.paths) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      on_path.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
    }
  }
  std::ostringstream out;
  out << "graph separation {\n";
  for (VertexId v : g.vertices()) {
    out << "  " << v;
    if (r.separator.count(v)) out << " [shape=box, color=red]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (on_path.count(e)) out << " [penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string witness_dot(const WitnessBundle& b) {
  const RootedTree& t = b.probe.snapshot.tree;
  VertexSet drawn(t.vertex_set().begin(), t.vertex_set().end());
  std::set<Edge> highlighted;
  for (const Path& p : b.clique.subdivision.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      drawn.insert(p[i]);
      if (i + 1 < p.size()) highlighted.emplace(std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1]));
    }
  }
  VertexSet chain(b.chain.chain.begin(), b.chain.chain.end());
  VertexSet ray(b.chain.ray_prefix.begin(), b.chain.ray_prefix.end());
  VertexSet branch(b.clique.subdivision.branch.begin(), b.clique.subdivision.branch.end());
  drawn.insert(b.probe.rep);

  std::ostringstream out;
  out << "graph witness {\n";
  for (VertexId v : drawn) {
    out << "  " << v;
    if (branch.count(v)) out << " [style=filled, fillcolor=red]";
    else if (chain.count(v)) out << " [style=filled, fillcolor=orange]";
    else if (v == b.probe.rep) out << " [shape=box, color=blue]";
    else if (ray.count(v)) out << " [color=orange]";
    out << ";\n";
  }
  for (const auto& [v, p] : t.parents()) {
    Edge e{std::min(v, p), std::max(v, p)};
    out << "  " << p << " -- " << v;
    if (highlighted.count(e)) out << " [color=red, penwidth=2]";
    out << ";\n";
  }
  for (const Edge& e : highlighted) {
    if (tree_edge(t, e.first, e.second)) continue;
    out << "  " << e.first << " -- " << e.second << " [color=red, penwidth=2, style=dashed];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace nst::io
