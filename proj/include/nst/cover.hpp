#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "nst/graph.hpp"

namespace nst {

/// A countable cover V(G) = V_0 u V_1 u ... given as a level function, with
/// v in V_level(v), and an exact "minimal level inside a component" pick.
///
/// Exact picks exist for the shipped kinds only:
///   singleton  level(v) = v; the smallest member of a component has the
///              smallest level, so an ascending scan is exact.
///   constant   level(v) = c; every member is minimal, the smallest id wins.
///   table      explicit levels for a finite host; components are enumerated.
///
/// An avoid set turns the pick adversarial: avoided vertices are skipped
/// whenever the component has another member. This deliberately breaks the
/// minimality contract and exists to demonstrate the failure analysis.
class CoverAssignment {
 public:
  enum class Kind { Singleton, Constant, Table };

  static CoverAssignment singleton();
  static CoverAssignment constant(std::uint64_t level);
  static CoverAssignment table(std::map<VertexId, std::uint64_t> levels);

  CoverAssignment with_avoid(VertexSet avoid) const;

  Kind kind() const { return kind_; }
  const VertexSet& avoided() const { return avoid_; }
  const std::map<VertexId, std::uint64_t>& table_levels() const { return table_; }

  /// Throws DomainError for a table cover without an entry for v.
  std::uint64_t level(VertexId v) const;

  /// A member of the component of `rep` in G - tree whose level is minimal
  /// among the levels occurring there (subject to the avoid set).
  VertexId pick(const Graph& g, VertexId rep, const VertexSet& tree) const;

  /// "singleton", "constant:c" or "table", with "+avoid:a,b" when adversarial.
  std::string describe() const;

  /// Bound on the ascending id scan of singleton/constant picks.
  static constexpr std::uint64_t kScanLimit = 1u << 20;

 private:
  Kind kind_ = Kind::Singleton;
  std::uint64_t constant_ = 0;
  std::map<VertexId, std::uint64_t> table_;
  VertexSet avoid_;
};

}  // namespace nst
