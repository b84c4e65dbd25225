// Canonical labeling and isomorphism testing for small complexes.
#pragma once

#include "flagcx/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace flagcx {

/// Isomorphism-invariant relabeling of a complex onto 0..n-1.
struct CanonicalForm {
  /// Facets after relabeling, sorted.
  std::vector<Face> facets;
  /// order[i] is the original vertex that received canonical label i.
  std::vector<Vertex> order;

  /// Flat integer encoding of `facets`, suitable as a hash key.
  [[nodiscard]] std::vector<int> key() const;
};

/// Individualization-refinement search for the lexicographically least
/// relabeled facet list, with orbit pruning from discovered automorphisms.
CanonicalForm canonical_form(const SimplicialComplex& k);

/// Cheap invariant: sorted facet-size profile and vertex-degree profile.
std::vector<int> invariant_profile(const SimplicialComplex& k);

/// Vertex bijection a -> b carrying faces to faces, if one exists.
std::optional<VertexMap> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b);

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

struct KeyHash {
  std::size_t operator()(const std::vector<int>& key) const noexcept;
};

}  // namespace flagcx
