#include "nst/cover.hpp"

#include <tuple>

#include "nst/errors.hpp"

namespace nst {

CoverAssignment CoverAssignment::singleton() { return CoverAssignment{}; }

CoverAssignment CoverAssignment::constant(std::uint64_t level) {
  CoverAssignment c;
  c.kind_ = Kind::Constant;
  c.constant_ = level;
  return c;
}

CoverAssignment CoverAssignment::table(std::map<VertexId, std::uint64_t> levels) {
  CoverAssignment c;
  c.kind_ = Kind::Table;
  c.table_ = std::move(levels);
  return c;
}

CoverAssignment CoverAssignment::with_avoid(VertexSet avoid) const {
  CoverAssignment c = *this;
  c.avoid_ = std::move(avoid);
  return c;
}

std::uint64_t CoverAssignment::level(VertexId v) const {
  switch (kind_) {
    case Kind::Singleton: return v;
    case Kind::Constant: return constant_;
    case Kind::Table: {
      auto it = table_.find(v);
      if (it == table_.end()) {
        throw DomainError("cover table has no level for vertex " + std::to_string(v));
      }
      return it->second;
    }
  }
  return 0;
}

VertexId CoverAssignment::pick(const Graph& g, VertexId rep, const VertexSet& tree) const {
  if (kind_ == Kind::Table) {
    auto members = g.enumerate_component(rep, tree);
    if (!members) throw DomainError("table covers need a host with finite components");
    std::optional<VertexId> best;
    bool best_avoided = true;
    for (VertexId v : *members) {
      bool avoided = avoid_.count(v) != 0;
      if (!best || std::make_tuple(avoided, level(v), v) <
                       std::make_tuple(best_avoided, level(*best), *best)) {
        best = v;
        best_avoided = avoided;
      }
    }
    return *best;
  }

  // Singleton and constant levels are both minimised by the smallest member.
  if (!avoid_.count(rep)) return rep;
  auto member = g.component_membership(rep, tree);
  std::uint64_t scanned = 0;
  for (auto v = g.next_vertex(rep); v && scanned < kScanLimit; v = g.next_vertex(*v), ++scanned) {
    if (!avoid_.count(*v) && member(*v)) return *v;
  }
  return rep;
}

std::string CoverAssignment::describe() const {
  std::string out;
  switch (kind_) {
    case Kind::Singleton: out = "singleton"; break;
    case Kind::Constant: out = "constant:" + std::to_string(constant_); break;
    case Kind::Table: out = "table"; break;
  }
  if (!avoid_.empty()) {
    out += "+avoid:";
    bool first = true;
    for (VertexId v : avoid_) {
      if (!first) out += ",";
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

}  // namespace nst
