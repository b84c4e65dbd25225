// Double-suspension remainders, the iterated γ-decomposition of flag spheres,
// Boolean seeds and the local/global Boolean audit.
#pragma once

#include "flagcx/complex.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/moves.hpp"
#include "flagcx/polynomial.hpp"
#include "flagcx/vectors.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace flagcx {

/// Whether the doubly-CM hypothesis of a lower-bound claim is certified.
/// Claims are asserted only when certified.
struct Hypothesis {
  bool certified = false;
  std::string basis;
};

/// Doubly CM over the given field.
Hypothesis doubly_cm_hypothesis(const SimplicialComplex& k, FieldSpec field = {});

struct ChainStep {
  Face edge;
  /// h(previous link) - (1+x)^2 h(next link)
  Polynomial remainder;
};

/// h(K) = approx + Σ_j (1+x)^{2(j-1)} chain[j-1].remainder = approx + remainder.
struct RemainderReport {
  Face base;
  Polynomial approx;  // (1+x)^{|F|} h(lk F)
  Polynomial remainder;
  bool nonnegative = false;
  std::vector<ChainStep> chain;
  bool chain_nonnegative = false;
  Hypothesis hypothesis;
  /// Certified hypothesis with a negative coefficient somewhere.
  [[nodiscard]] bool violation() const { return hypothesis.certified && !(nonnegative && chain_nonnegative); }
};

/// F must be a face with an even number of vertices; it is read as the edges
/// {F_0,F_1}, {F_2,F_3}, ... Throws std::invalid_argument otherwise.
RemainderReport double_susp_remainder(const SimplicialComplex& k, const Face& f, const Hypothesis& hypothesis);
RemainderReport double_susp_remainder(const SimplicialComplex& k, const Face& f);

struct CrossPolytopeBoundReport {
  int d = 0;
  Polynomial h;
  /// index i holds h_i - C(d,i)
  std::vector<Integer> excess;
  bool holds = false;
  bool equality = false;
  bool strict_somewhere = false;
  Integer gamma1;
  Hypothesis hypothesis;
  [[nodiscard]] bool violation() const { return hypothesis.certified && !holds; }
};

CrossPolytopeBoundReport cross_polytope_bound_check(const SimplicialComplex& k, const Hypothesis& hypothesis);
CrossPolytopeBoundReport cross_polytope_bound_check(const SimplicialComplex& k);

struct SignedTerm {
  int sign = 1;
  SimplicialComplex complex;  // the complex before the move
  Face edge;
  Polynomial poly;  // h(lk_complex(edge))
};

struct PathExpansion {
  std::vector<SignedTerm> terms;
  Polynomial signed_sum;  // Σ sign·poly
  int positive = 0;
  int negative = 0;
};

/// One +h(lk e_i) per subdivision and one -h(lk e_i) per contraction along the
/// path, links taken before each move. x·signed_sum = h(K) - (1+x)^2 h(lk_K e).
/// Throws std::invalid_argument when the path does not start at a complex
/// isomorphic to susp²(lk_K e), does not end at one isomorphic to K, or
/// contains an invalid move.
PathExpansion path_remainder_expansion(const SimplicialComplex& k, const Face& e, const MoveSequence& path);

enum class EdgeStrategy { LargestLink, SmallestLink, FirstEdge };

std::string to_string(EdgeStrategy s);
/// "largest-link", "smallest-link", "first-edge"; throws std::invalid_argument.
EdgeStrategy parse_edge_strategy(const std::string& name);

struct DecompOptions {
  EdgeStrategy strategy = EdgeStrategy::LargestLink;
  SearchBudget path_budget{12, 20000};
};

/// complex_id < 0 marks an unattributed remainder whose poly is the raw
/// quotient (h(L) - (1+x)^2 h(lk_L q)) / x.
struct DecompTerm {
  int sign = 1;
  int complex_id = -1;
  Face face;
  Polynomial poly;  // h(lk_{complex}(face)) when attributed

  [[nodiscard]] bool attributed() const { return complex_id >= 0; }
};

enum class NodeKind { Root, Suspension, Remainder, RawRemainder };

std::string to_string(NodeKind k);

struct TermSplit {
  std::size_t term = 0;
  Face edge;  // relative to lk_{complex}(face)
  bool attributed = false;
  std::size_t path_length = 0;
  PathSearchStats stats;
};

/// Node value: sign · x^r (1+x)^{2m-2r} · Σ term.sign·term.poly.
struct DecompNode {
  int m = 0;
  int r = 0;
  int sign = 1;
  NodeKind kind = NodeKind::Root;
  int parent = -1;
  std::vector<DecompTerm> terms;
  std::vector<std::size_t> children;
  std::vector<TermSplit> splits;  // one per term of an expanded node

  [[nodiscard]] bool expanded() const { return !splits.empty(); }
  [[nodiscard]] Polynomial bracket() const;
  [[nodiscard]] int positive_terms() const;
  [[nodiscard]] int negative_terms() const;
};

struct DecompTree {
  int d = 0;
  EdgeStrategy strategy = EdgeStrategy::LargestLink;
  std::vector<SimplicialComplex> complexes;
  std::vector<DecompNode> nodes;  // nodes[0] is the root

  [[nodiscard]] int depth() const;
  [[nodiscard]] std::size_t unattributed_count() const;
};

/// The caller is responsible for K being a flag sphere; on other input
/// expansion degrades to unattributed remainders but stays exact.
DecompTree iterated_gamma_decomposition(const SimplicialComplex& k, const DecompOptions& options = {});

/// Σ over leaves of node values. Throws std::invalid_argument on a malformed tree.
Polynomial reconstruct_h(const DecompTree& tree);

/// Σ over leaves of sign·term.sign·x^r·γ(term.poly, d-2m).
GammaVector collect_gamma(const DecompTree& tree);

struct BracketCheck {
  std::size_t node = 0;
  bool attributed = true;
  bool nonnegative = true;
  bool terms_balanced = true;  // #positive ≥ #negative
};

std::vector<BracketCheck> bracket_checks(const DecompTree& tree);

/// Leaf brackets summed with node signs per power pair (m, r).
struct LevelBracket {
  int m = 0;
  int r = 0;
  Polynomial sum;
  bool nonnegative = false;
};

std::vector<LevelBracket> level_brackets(const DecompTree& tree);

struct BooleanSeed {
  /// Faces on the auxiliary vertices d, d+1, ..., d+γ_1-1.
  SimplicialComplex s;
  int d = 0;
};

/// Γ = {F ∪ G : F ∈ S, G ⊆ {0..d-2|F|-1}}, all faces sorted by size.
std::vector<Face> boolean_expansion(const BooleanSeed& seed);

/// Face counts of Γ by brute-force enumeration of subsets of the ground set.
Polynomial enumerate_boolean_f(const BooleanSeed& seed);

struct BooleanBudget {
  std::size_t max_nodes = 1000000;
  int max_aux_vertices = 12;
};

enum class BooleanStatus { Found, Impossible, NotFound };

std::string to_string(BooleanStatus s);

struct BooleanSearchResult {
  BooleanStatus status = BooleanStatus::NotFound;
  std::optional<BooleanSeed> seed;
  std::optional<GammaVector> gamma;
  std::optional<int> failing_index;
  std::string reason;
  std::size_t nodes = 0;
  bool verified = false;  // enumeration of Γ reproduces h
};

/// Impossible when h is not palindromic, some γ_j < 0, γ_0 ≠ 1, or the face
/// counts violate Kruskal–Katona; NotFound when the budget runs out.
BooleanSearchResult boolean_gamma_search(const Polynomial& h, int d, const BooleanBudget& budget = {});

struct EdgeAudit {
  Face edge;
  Polynomial h_link;
  BooleanSearchResult local;
  /// γ_1(K) - γ_1(lk e)
  Integer status_difference;
};

struct PairAudit {
  Face e1;
  Face e2;
  int intersection_dimension = 0;
  bool intersection_is_link_of_union = false;
  /// |γ_1(lk e1) - γ_1(lk e2)|
  Integer conflict;
};

struct AuditReport {
  int d = 0;
  BooleanSearchResult global;
  std::vector<EdgeAudit> edges;
  std::vector<PairAudit> pairs;
  bool all_local_found = true;
  Integer max_status_difference;
  Integer max_conflict;
};

AuditReport local_global_audit(const SimplicialComplex& k, const BooleanBudget& budget = {});

}  // namespace flagcx
