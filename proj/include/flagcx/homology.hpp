// Reduced simplicial homology over prime fields and the rationals,
// Reisner-criterion Cohen–Macaulay tests and sphere certification.
#pragma once

#include "flagcx/catalog.hpp"
#include "flagcx/complex.hpp"
#include "flagcx/polynomial.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagcx {

/// characteristic is 0 (rationals) or a prime.
struct FieldSpec {
  int characteristic = 2;

  /// Throws std::invalid_argument unless 0 or prime.
  static FieldSpec make(int characteristic);
  static FieldSpec rationals() { return FieldSpec{0}; }
  [[nodiscard]] std::string name() const;
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(int n);

/// Dense row-major integer matrix.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<int> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  int& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  [[nodiscard]] int at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Oriented boundary ∂_k from k-faces (columns) to (k-1)-faces (rows), both
/// in enumerate_faces order. ∂_0 maps every vertex to the empty face.
IntMatrix boundary_matrix(const SimplicialComplex& k, int dim);

/// Gaussian elimination mod p, or fraction-free Bareiss elimination over Q.
std::size_t matrix_rank(const IntMatrix& m, FieldSpec field);

/// Entry i is the reduced Betti number in degree i-1, for degrees -1..dim.
/// Throws std::invalid_argument on the void complex.
std::vector<int> reduced_betti(const SimplicialComplex& k, FieldSpec field = {});

struct CMWitness {
  Face face;
  int degree = 0;
};

/// witness is set iff is_cm is false.
struct CMReport {
  bool is_cm = true;
  std::optional<CMWitness> witness;
  FieldSpec field;
};

/// Reisner: H̃_i(lk F) = 0 for every face F (including ∅) and i < dim lk F.
CMReport is_cohen_macaulay(const SimplicialComplex& k, FieldSpec field = {});

struct DoublyCMReport {
  bool is_doubly_cm = false;
  CMReport complex;
  /// First vertex whose antistar fails, with its CM report when that is the cause.
  std::optional<Vertex> failing_vertex;
  std::optional<CMReport> antistar;
  bool dimension_drop = false;
  FieldSpec field;
};

DoublyCMReport is_doubly_cm(const SimplicialComplex& k, FieldSpec field = {});

/// h with an explicit d: Σ f_{i-1} x^i (1-x)^{d-i}.
Polynomial h_polynomial_in_dimension(const SimplicialComplex& k, int d);

struct AstLinkReport {
  Vertex vertex = 0;
  /// Doubly CM with dim Ast = dim K; the inequality is asserted only then.
  bool hypothesis = false;
  Polynomial h_link;
  Polynomial h_antistar;
  /// h_K = h_Ast + x·h_lk, with d = dim K + 1 throughout.
  bool split_holds = false;
  bool inequality_holds = false;
  std::optional<int> failing_index;
};

/// Throws std::invalid_argument if v is not a vertex.
AstLinkReport h_ast_link_inequality(const SimplicialComplex& k, Vertex v, FieldSpec field = {});

enum class SphereStatus { CertifiedSphere, CertifiedByProvenance, Unknown };

std::string to_string(SphereStatus s);

struct SphereCertificate {
  SphereStatus status = SphereStatus::Unknown;
  std::string reason;
};

/// Exact for dim ≤ 2. For dim ≥ 3 certified only when the provenance recipe
/// has sphere provenance and its replayed moves end isomorphic to k.
SphereCertificate certify_sphere(const SimplicialComplex& k, const SphereProvenance* provenance = nullptr);

}  // namespace flagcx
