#pragma once

// Bundled inputs and expected values for the reproduction runs.

#include <string>
#include <vector>

#include "ehrtri/polytope_io.hpp"

namespace ehrtri {

/// conv{(1,0), (0,1), (0,-1), (-1,0)} cut along the segment between (0,1)
/// and (0,-1). Lifting gives the two-cone subdivision of index 2.
PolytopeFile square_with_diagonal();

WeightedSimplexSpec seven_dim_spec();   // weights (1,2,2,4,4,4,4), b = 7
WeightedSimplexSpec eleven_dim_spec();  // weights (1,1,1,2,4,4,4,4,4,4,4), b = 11

PolytopeFile weighted_simplex_file(const WeightedSimplexSpec& spec);

struct Check {
  std::string name;
  nlohmann::json expected;
  nlohmann::json actual;
  bool pass = false;
  /// Reported but not counted towards the overall result.
  bool informational = false;
};

struct Reproduction {
  std::string name;
  std::vector<Check> checks;
  bool pass = true;
  /// Headline value, e.g. the computed h*-vector.
  std::string summary;
  std::vector<std::string> notes;
};

nlohmann::json to_json(const Reproduction& r);
nlohmann::json to_json(const HStarVector& h);
nlohmann::json to_json(const UniPoly& p);

/// One of ex1.4, ex4.3, ex4.4, thm1.3, thm1.4, thm1.5. Throws InvalidInput
/// for other names.
Reproduction reproduce(const std::string& which);

std::vector<std::string> reproduction_names();

}  // namespace ehrtri
