#pragma once

// JSON polytope files. Coordinates are ambient coordinates multiplied by the
// declared denominator; every index is 0-based.

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "ehrtri/reflexive.hpp"

namespace ehrtri {

struct PolytopeFile {
  LatticePolytope polytope;
  std::optional<Triangulation> triangulation;

  friend bool operator==(const PolytopeFile&, const PolytopeFile&) = default;
};

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolytopeFile& f);
/// Throws InvalidInput for schema violations and NotInLattice for points
/// outside the declared lattice.
PolytopeFile polytope_file_from_json(const nlohmann::json& j);

PolytopeFile read_polytope_file(const std::string& path);
void write_polytope_file(const PolytopeFile& f, const std::string& path);

/// The file's triangulation, or the boundary join when none is stored.
Triangulation triangulation_or_boundary_join(const PolytopeFile& f);

}  // namespace ehrtri
