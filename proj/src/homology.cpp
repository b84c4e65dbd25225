#include "flagcx/homology.hpp"

#include "flagcx/isomorphism.hpp"
#include "flagcx/moves.hpp"
#include "flagcx/vectors.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace flagcx {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::make(int characteristic) {
  if (characteristic != 0 && !is_prime(characteristic))
    throw std::invalid_argument("field characteristic must be 0 or prime, got " + std::to_string(characteristic));
  return FieldSpec{characteristic};
}

std::string FieldSpec::name() const { return characteristic == 0 ? "Q" : "GF(" + std::to_string(characteristic) + ")"; }

namespace {

// faces bucketed by size; bucket[i] holds faces with i vertices
std::vector<std::vector<Face>> faces_by_size(const SimplicialComplex& k) {
  std::vector<std::vector<Face>> buckets(static_cast<std::size_t>(k.dimension()) + 2);
  for (auto& f : all_faces(k)) buckets[f.size()].push_back(std::move(f));
  return buckets;
}

IntMatrix boundary_between(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  IntMatrix m(lower.size(), upper.size());
  std::unordered_map<Face, std::size_t, FaceHash> index;
  for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
  for (std::size_t c = 0; c < upper.size(); ++c) {
    const auto& vs = upper[c].vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) m.at(index.at(upper[c].without(vs[i])), c) = i % 2 == 0 ? 1 : -1;
  }
  return m;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  std::vector<std::vector<std::int64_t>> a(m.rows, std::vector<std::int64_t>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = ((m.at(r, c) % p) + p) % p;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    std::int64_t inv = mod_pow(a[rank][c], p - 2, p);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      std::int64_t factor = a[r][c] * inv % p;
      for (std::size_t j = c; j < m.cols; ++j) a[r][j] = ((a[r][j] - factor * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// fraction-free elimination; every stored entry is a minor of m
std::size_t rank_rational(const IntMatrix& m) {
  std::vector<std::vector<Integer>> a(m.rows, std::vector<Integer>(m.cols));
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c) a[r][c] = m.at(r, c);
  Integer prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < m.rows && a[pivot][c] == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < m.rows; ++r) {
      for (std::size_t j = c + 1; j < m.cols; ++j) a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

}  // namespace

IntMatrix boundary_matrix(const SimplicialComplex& k, int dim) {
  if (k.is_void()) throw std::invalid_argument("boundary_matrix: void complex");
  if (dim < 0 || dim > k.dimension()) throw std::invalid_argument("boundary_matrix: degree out of range");
  auto buckets = faces_by_size(k);
  return boundary_between(buckets[static_cast<std::size_t>(dim)], buckets[static_cast<std::size_t>(dim) + 1]);
}

std::size_t matrix_rank(const IntMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  return field.characteristic == 0 ? rank_rational(m) : rank_mod_p(m, field.characteristic);
}

std::vector<int> reduced_betti(const SimplicialComplex& k, FieldSpec field) {
  if (k.is_void()) throw std::invalid_argument("reduced_betti: void complex");
  auto buckets = faces_by_size(k);
  const std::size_t n = buckets.size();  // degrees -1..dim
  // ranks[i] = rank of the boundary from size-i faces to size-(i-1) faces
  std::vector<std::size_t> ranks(n + 1, 0);
  for (std::size_t i = 1; i < n; ++i) ranks[i] = matrix_rank(boundary_between(buckets[i - 1], buckets[i]), field);
  std::vector<int> betti(n);
  for (std::size_t i = 0; i < n; ++i)
    betti[i] = static_cast<int>(buckets[i].size() - ranks[i] - ranks[i + 1]);
  return betti;
}

CMReport is_cohen_macaulay(const SimplicialComplex& k, FieldSpec field) {
  if (k.is_void()) throw std::invalid_argument("is_cohen_macaulay: void complex");
  CMReport report{true, std::nullopt, field};
  // overlapping links recur, so Betti numbers are memoized by the link itself
  std::map<std::vector<Face>, std::vector<int>> memo;
  for (const auto& f : all_faces(k)) {
    SimplicialComplex lk = link(k, f);
    int ld = lk.dimension();
    if (ld <= 0) continue;  // nothing below degree 0 can be nonzero for a nonempty link
    auto [it, inserted] = memo.try_emplace(lk.facets());
    if (inserted) it->second = reduced_betti(lk, field);
    const auto& betti = it->second;
    for (int i = -1; i < ld; ++i) {
      if (betti[static_cast<std::size_t>(i + 1)] != 0) {
        report.is_cm = false;
        report.witness = CMWitness{f, i};
        return report;
      }
    }
  }
  return report;
}

DoublyCMReport is_doubly_cm(const SimplicialComplex& k, FieldSpec field) {
  DoublyCMReport report;
  report.field = field;
  report.complex = is_cohen_macaulay(k, field);
  if (!report.complex.is_cm) return report;
  for (Vertex v : k.vertices()) {
    SimplicialComplex ast = antistar(k, v);
    if (ast.dimension() != k.dimension()) {
      report.failing_vertex = v;
      report.dimension_drop = true;
      return report;
    }
    CMReport sub = is_cohen_macaulay(ast, field);
    if (!sub.is_cm) {
      report.failing_vertex = v;
      report.antistar = sub;
      return report;
    }
  }
  report.is_doubly_cm = true;
  return report;
}

Polynomial h_polynomial_in_dimension(const SimplicialComplex& k, int d) {
  Polynomial f = f_vector(k);
  Polynomial h;
  const Polynomial one_minus_x{1, -1};
  for (int i = 0; i <= f.degree(); ++i) {
    Polynomial term = Polynomial::monomial(f.coeff(i), i);
    if (d - i < 0) throw std::invalid_argument("h_polynomial_in_dimension: d below dimension");
    for (int j = 0; j < d - i; ++j) term = term * one_minus_x;
    h = h + term;
  }
  return h;
}

AstLinkReport h_ast_link_inequality(const SimplicialComplex& k, Vertex v, FieldSpec field) {
  if (!k.has_vertex(v)) throw std::invalid_argument("h_ast_link_inequality: unknown vertex " + std::to_string(v));
  const int d = k.dimension() + 1;
  SimplicialComplex ast = antistar(k, v);
  SimplicialComplex lk = link(k, Face{v});
  AstLinkReport r;
  r.vertex = v;
  r.hypothesis = is_doubly_cm(k, field).is_doubly_cm && ast.dimension() == k.dimension();
  r.h_link = h_polynomial_in_dimension(lk, d - 1);
  r.h_antistar = h_polynomial_in_dimension(ast, d);
  r.split_holds = h_polynomial_in_dimension(k, d) == r.h_antistar + r.h_link.shifted(1);
  r.inequality_holds = true;
  for (int i = 0; i <= d; ++i) {
    if (r.h_link.coeff(i) > r.h_antistar.coeff(i)) {
      r.inequality_holds = false;
      r.failing_index = i;
      break;
    }
  }
  return r;
}

std::string to_string(SphereStatus s) {
  switch (s) {
    case SphereStatus::CertifiedSphere: return "certified-sphere";
    case SphereStatus::CertifiedByProvenance: return "certified-by-provenance";
    case SphereStatus::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool connected(const SimplicialComplex& k) {
  const auto& vs = k.vertices();
  if (vs.empty()) return true;
  Graph g = one_skeleton(k);
  std::set<Vertex> seen{vs.front()};
  std::queue<Vertex> todo;
  todo.push(vs.front());
  while (!todo.empty()) {
    Vertex v = todo.front();
    todo.pop();
    for (Vertex w : g.neighbors(v))
      if (seen.insert(w).second) todo.push(w);
  }
  return seen.size() == vs.size();
}

// connected 1-dim complex in which every vertex lies on exactly two edges
bool is_circle(const SimplicialComplex& k) {
  if (k.dimension() != 1 || !k.is_pure() || k.vertices().size() < 3) return false;
  std::map<Vertex, int> degree;
  for (const auto& e : k.facets())
    for (Vertex v : e.vertices()) ++degree[v];
  for (const auto& [v, deg] : degree)
    if (deg != 2) return false;
  return connected(k);
}

SphereCertificate exact_low_dimension(const SimplicialComplex& k) {
  const int dim = k.dimension();
  if (dim == -1) return {SphereStatus::CertifiedSphere, "the empty face complex is the (-1)-sphere"};
  if (dim == 0) {
    if (k.vertices().size() == 2) return {SphereStatus::CertifiedSphere, "two points"};
    return {SphereStatus::Unknown, "0-dimensional with " + std::to_string(k.vertices().size()) + " points"};
  }
  if (dim == 1) {
    if (is_circle(k)) return {SphereStatus::CertifiedSphere, "connected cycle"};
    return {SphereStatus::Unknown, "not a single cycle"};
  }
  if (!k.is_pure()) return {SphereStatus::Unknown, "not pure"};
  for (Vertex v : k.vertices())
    if (!is_circle(link(k, Face{v})))
      return {SphereStatus::Unknown, "link of vertex " + std::to_string(v) + " is not a cycle"};
  if (!connected(k)) return {SphereStatus::Unknown, "not connected"};
  Polynomial f = f_vector(k);
  Integer euler = f.coeff(1) - f.coeff(2) + f.coeff(3);
  if (euler != 2) return {SphereStatus::Unknown, "Euler characteristic " + euler.str()};
  return {SphereStatus::CertifiedSphere, "connected closed surface with Euler characteristic 2"};
}

}  // namespace

SphereCertificate certify_sphere(const SimplicialComplex& k, const SphereProvenance* provenance) {
  if (k.is_void()) return {SphereStatus::Unknown, "void complex"};
  if (k.dimension() <= 2) return exact_low_dimension(k);
  if (provenance == nullptr) return {SphereStatus::Unknown, "dimension >= 3 requires provenance"};
  try {
    BuiltComplex built = build_recipe(provenance->recipe);
    if (!built.sphere_provenance)
      return {SphereStatus::Unknown, "recipe " + to_string(provenance->recipe) + " does not certify a sphere"};
    SimplicialComplex current = std::move(built.complex);
    for (const auto& m : provenance->moves) current = apply_move(current, m);
    if (!isomorphic(current, k)) return {SphereStatus::Unknown, "provenance does not reproduce the complex"};
  } catch (const std::exception& e) {
    return {SphereStatus::Unknown, std::string("provenance replay failed: ") + e.what()};
  }
  return {SphereStatus::CertifiedByProvenance, "built by " + to_string(provenance->recipe) + " and " +
                                                   std::to_string(provenance->moves.size()) + " valid moves"};
}

}  // namespace flagcx
