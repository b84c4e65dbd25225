// Construction recipes ("crosspoly(3)", "susp(cycle(6))", ...) and the
// catalog of flag spheres used by the verification suites.
#pragma once

#include "flagcx/complex.hpp"
#include "flagcx/moves.hpp"

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flagcx {

struct Recipe {
  enum class Kind { CrossPoly, Cycle, Susp, Cone, Subdiv, Contract, File };

  Kind kind = Kind::CrossPoly;
  std::vector<int> args;
  std::shared_ptr<const Recipe> inner;
  std::string path;
};

class RecipeParseError : public std::invalid_argument {
 public:
  RecipeParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar: crosspoly(d) | cycle(n) | susp(R) | cone(R) | subdiv(R,a,b) |
/// contract(R,a,b) | file(path). Whitespace is ignored outside file paths.
Recipe parse_recipe(std::string_view text);

std::string to_string(const Recipe& r);

struct BuiltComplex {
  SimplicialComplex complex;
  /// True when every step starts from a sphere and preserves PL type.
  bool sphere_provenance = false;
};

/// subdiv uses the fresh label as new vertex; contract keeps the smaller label
/// and requires the link condition. Throws std::invalid_argument on bad steps.
BuiltComplex build_recipe(const Recipe& r);
BuiltComplex build_recipe(std::string_view text);

/// Construction history certifying a complex as a PL sphere: a recipe with
/// sphere provenance followed by moves.
struct SphereProvenance {
  Recipe recipe;
  std::vector<Move> moves;
};

struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  SphereProvenance provenance;
  int d = 0;  // dim + 1
};

struct CatalogOptions {
  int max_cross_polytope = 5;
  int max_cycle = 12;
  int octahedron_subdivision_steps = 3;
};

/// ∂C_d, n-cycles, their single and double suspensions, and every
/// isomorphism class reachable from the octahedron by up to the given
/// number of edge subdivisions.
std::vector<CatalogEntry> sphere_catalog(const CatalogOptions& options = {});

}  // namespace flagcx
