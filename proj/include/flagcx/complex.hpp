// Finite abstract simplicial complexes stored by their facets.
#pragma once

#include "flagcx/polynomial.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace flagcx {

using Vertex = int;
using VertexMap = std::map<Vertex, Vertex>;

/// Dimension reported for the void complex (no faces at all).
inline constexpr int kVoidDimension = std::numeric_limits<int>::min();

/// A face: a strictly increasing list of vertex labels. The empty face is valid.
class Face {
 public:
  Face() = default;
  /// Sorts the input; throws std::invalid_argument on a repeated vertex.
  Face(std::initializer_list<Vertex> vs);
  explicit Face(std::vector<Vertex> vs);

  /// Skips validation; caller guarantees strictly increasing input.
  static Face from_sorted(std::vector<Vertex> vs) {
    Face f;
    f.v_ = std::move(vs);
    return f;
  }

  [[nodiscard]] std::size_t size() const noexcept { return v_.size(); }
  [[nodiscard]] bool empty() const noexcept { return v_.empty(); }
  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return v_; }
  [[nodiscard]] Vertex operator[](std::size_t i) const { return v_[i]; }
  [[nodiscard]] auto begin() const noexcept { return v_.begin(); }
  [[nodiscard]] auto end() const noexcept { return v_.end(); }

  [[nodiscard]] bool contains(Vertex v) const;
  [[nodiscard]] bool is_subset_of(const Face& other) const;
  [[nodiscard]] bool disjoint_from(const Face& other) const;

  [[nodiscard]] Face united(const Face& other) const;
  [[nodiscard]] Face minus(const Face& other) const;
  [[nodiscard]] Face without(Vertex v) const;
  [[nodiscard]] Face with(Vertex v) const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> v_;
};

struct FaceHash {
  std::size_t operator()(const Face& f) const noexcept;
};

/// Simplicial complex given by its inclusion-maximal faces.
///
/// The void complex has no faces; the empty complex {∅} has exactly the
/// empty face. Every vertex label occurs in some facet.
class SimplicialComplex {
 public:
  /// The void complex.
  SimplicialComplex() = default;

  static SimplicialComplex void_complex() { return {}; }
  static SimplicialComplex empty_face_complex();
  /// Keeps the inclusion-maximal members of `faces`.
  static SimplicialComplex from_facets(std::vector<Face> faces);

  [[nodiscard]] bool is_void() const noexcept { return facets_.empty(); }
  /// max facet size - 1; kVoidDimension for the void complex.
  [[nodiscard]] int dimension() const noexcept;
  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<Face>& facets() const noexcept { return facets_; }
  [[nodiscard]] std::size_t num_vertices() const noexcept { return vertices_.size(); }

  [[nodiscard]] bool has_vertex(Vertex v) const;
  [[nodiscard]] bool contains(const Face& f) const;
  [[nodiscard]] bool is_pure() const;
  /// Smallest label larger than every vertex (0 for vertex-free complexes).
  [[nodiscard]] Vertex fresh_vertex() const noexcept;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Face> facets_;
};

/// Same as SimplicialComplex::from_facets.
SimplicialComplex build_from_facets(std::vector<Face> faces);

/// Free-function alias of SimplicialComplex::dimension.
int dimension(const SimplicialComplex& k);

/// All faces with k+1 vertices, sorted lexicographically.
std::vector<Face> enumerate_faces(const SimplicialComplex& k, int dim);

/// Every face including the empty one, sorted by size then lexicographically.
std::vector<Face> all_faces(const SimplicialComplex& k);

/// Σ f_{i-1} x^i with f_{-1} = 1. Throws std::invalid_argument on the void complex.
Polynomial f_vector(const SimplicialComplex& k);

struct FlagCheck {
  bool flag = true;
  /// Minimal non-face whose vertices are pairwise adjacent.
  std::optional<Face> witness;
};

FlagCheck is_flag(const SimplicialComplex& k);

/// Simple undirected graph.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  [[nodiscard]] const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  [[nodiscard]] const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const;
  [[nodiscard]] std::vector<Vertex> neighbors(Vertex v) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<Vertex, Vertex>> edges_;  // sorted, first < second
};

Graph one_skeleton(const SimplicialComplex& k);

/// Faces are the cliques of `g`.
SimplicialComplex clique_complex(const Graph& g);

/// {G : G ∩ F = ∅, G ∪ F ∈ K}. Throws std::invalid_argument if F is not a face.
SimplicialComplex link(const SimplicialComplex& k, const Face& f);

/// Faces of K not containing p. Throws std::invalid_argument on unknown p.
SimplicialComplex antistar(const SimplicialComplex& k, Vertex p);

/// Faces of K not containing F as a subset.
SimplicialComplex face_antistar(const SimplicialComplex& k, const Face& f);

/// Faces of K using only the given vertices.
SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> vertices);

/// Faces common to both complexes.
SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map);

struct JoinResult {
  SimplicialComplex complex;
  /// Labels given to the second operand's vertices (identity if none clashed).
  VertexMap relabeling;
};

/// {F1 ∪ F2}. If the vertex sets meet, the second operand is relabeled to
/// consecutive labels above the first operand's largest vertex.
JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b);

SimplicialComplex cone(const SimplicialComplex& k);
SimplicialComplex suspension(const SimplicialComplex& k);
SimplicialComplex double_suspension(const SimplicialComplex& k);

/// Boundary of the d-dimensional cross polytope; antipodal pairs (2i, 2i+1).
SimplicialComplex cross_polytope_boundary(int d);

/// n-cycle on vertices 0..n-1, n >= 4.
SimplicialComplex cycle_complex(int n);

}  // namespace flagcx
