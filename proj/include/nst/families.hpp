#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "nst/graph.hpp"

namespace nst {

/// A built-in graph family plus its numeric parameters, e.g. "star_of_rays:4".
struct FamilySpec {
  std::string name;
  std::vector<std::uint64_t> params;

  std::string to_string() const;
};

/// Parses "name" or "name:p1[:p2...]". Throws DomainError on unknown names,
/// missing or extra parameters and non-numeric parameters.
FamilySpec parse_family_spec(const std::string& text);

/// Finite families (path, cycle, complete) come back as FiniteGraph.
std::shared_ptr<const Graph> make_family(const FamilySpec& spec);

/// Vertex encodings used by the infinite families.
namespace encoding {

/// Cantor pairing on the quarter grid.
VertexId grid_id(std::uint64_t x, std::uint64_t y);
std::pair<std::uint64_t, std::uint64_t> grid_coords(VertexId id);

/// dominated_ray: the extra vertex is 0, ray position r is vertex r + 1.
inline constexpr VertexId kDominatingVertex = 0;
inline constexpr VertexId dominated_ray_vertex(std::uint64_t r) { return r + 1; }

/// comb: spine position r is 2r, its tooth is 2r + 1.
inline constexpr VertexId comb_spine(std::uint64_t r) { return 2 * r; }
inline constexpr VertexId comb_tooth(std::uint64_t r) { return 2 * r + 1; }

/// star_of_rays(k): center 0, ray j at distance d >= 1 is 1 + (d - 1) k + j.
inline constexpr VertexId star_vertex(std::uint64_t k, std::uint64_t ray, std::uint64_t dist) {
  return 1 + (dist - 1) * k + ray;
}

}  // namespace encoding

}  // namespace nst
