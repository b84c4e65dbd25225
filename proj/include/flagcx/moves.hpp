// Stellar edge subdivisions, edge contractions, and move-path search.
#pragma once

#include "flagcx/complex.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flagcx {

enum class MoveKind { Subdivide, Contract };

/// For Subdivide, `vertex` is the new vertex; for Contract, the surviving endpoint.
struct Move {
  MoveKind kind = MoveKind::Subdivide;
  Face edge;
  Vertex vertex = 0;

  static Move subdivide(Vertex a, Vertex b, Vertex v) { return {MoveKind::Subdivide, Face{a, b}, v}; }
  static Move contract(Vertex a, Vertex b) { return {MoveKind::Contract, Face{a, b}, std::min(a, b)}; }

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveSequence {
  SimplicialComplex start;
  std::vector<Move> moves;
};

class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Replaces the star of e = {a,b} by the cone from v over its boundary.
SimplicialComplex edge_subdivide(const SimplicialComplex& k, const Face& e, Vertex v);

/// lk(a) ∩ lk(b) = lk(ab). Throws InvalidMove if e is not an edge.
bool link_condition(const SimplicialComplex& k, const Face& e);

/// Identifies the endpoints of e, keeping the smaller label.
/// Throws InvalidMove if e is not an edge or the link condition fails.
SimplicialComplex edge_contract(const SimplicialComplex& k, const Face& e);

/// True iff e passes the link condition and contracting it leaves a flag complex.
bool flag_contractible(const SimplicialComplex& k, const Face& e);

/// Applies one move after validating it; throws InvalidMove.
SimplicialComplex apply_move(const SimplicialComplex& k, const Move& m);

/// Every intermediate complex, start first. Throws InvalidMove on an invalid
/// step or when `require_flag` is set and some complex is not flag.
std::vector<SimplicialComplex> replay(const MoveSequence& seq, bool require_flag = true);

/// #subdivisions - #contractions after validating the sequence.
int net_subdivision_count(const MoveSequence& seq);

struct SearchBudget {
  int max_depth = 6;
  std::size_t max_states = 200000;
};

struct PathSearchStats {
  std::size_t states = 0;
  int depth_reached = 0;
  bool budget_exhausted = false;
};

struct MovePath {
  MoveSequence sequence;
  /// Maps the final complex of `sequence` onto the requested target.
  VertexMap isomorphism;
};

struct PathSearchResult {
  std::optional<MovePath> path;
  PathSearchStats stats;
};

/// Bounded search for a flag-preserving move sequence from `from` to a
/// complex isomorphic to `to`. A miss does not certify non-equivalence.
PathSearchResult find_move_path(const SimplicialComplex& from, const SimplicialComplex& to,
                                const SearchBudget& budget = {});

/// Reproducible random walk of valid flag-preserving moves. Subdivides with
/// probability 0.6 when a contraction is also available. New vertices get
/// the fresh label. Throws InvalidMove when no move is available.
MoveSequence random_flag_walk(const SimplicialComplex& k, int steps, std::uint64_t seed);

/// Edges of K (faces with two vertices).
std::vector<Face> edges_of(const SimplicialComplex& k);

}  // namespace flagcx
