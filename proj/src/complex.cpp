#include "flagcx/complex.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include <boost/container_hash/hash.hpp>

namespace flagcx {

// ---------------------------------------------------------------- Face

Face::Face(std::initializer_list<Vertex> vs) : Face(std::vector<Vertex>(vs)) {}

Face::Face(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end())
    throw std::invalid_argument("face has a repeated vertex");
}

bool Face::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.v_.begin(), other.v_.end(), v_.begin(), v_.end());
}

bool Face::disjoint_from(const Face& other) const {
  auto i = v_.begin();
  auto j = other.v_.begin();
  while (i != v_.end() && j != other.v_.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i;
    else ++j;
  }
  return true;
}

Face Face::united(const Face& other) const {
  std::vector<Vertex> out;
  std::set_union(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Face Face::minus(const Face& other) const {
  std::vector<Vertex> out;
  std::set_difference(v_.begin(), v_.end(), other.v_.begin(), other.v_.end(), std::back_inserter(out));
  return from_sorted(std::move(out));
}

Face Face::without(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(v_.size());
  for (Vertex u : v_)
    if (u != v) out.push_back(u);
  return from_sorted(std::move(out));
}

Face Face::with(Vertex v) const {
  if (contains(v)) return *this;
  std::vector<Vertex> out = v_;
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return from_sorted(std::move(out));
}

std::size_t FaceHash::operator()(const Face& f) const noexcept {
  return boost::hash_range(f.begin(), f.end());
}

// ---------------------------------------------------------------- SimplicialComplex

SimplicialComplex SimplicialComplex::empty_face_complex() { return from_facets({Face{}}); }

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  SimplicialComplex k;
  for (auto& f : faces) {
    bool subsumed = std::any_of(k.facets_.begin(), k.facets_.end(),
                                [&](const Face& g) { return g.size() > f.size() && f.is_subset_of(g); });
    if (!subsumed) k.facets_.push_back(std::move(f));
  }
  std::sort(k.facets_.begin(), k.facets_.end());
  for (const auto& f : k.facets_) k.vertices_.insert(k.vertices_.end(), f.begin(), f.end());
  std::sort(k.vertices_.begin(), k.vertices_.end());
  k.vertices_.erase(std::unique(k.vertices_.begin(), k.vertices_.end()), k.vertices_.end());
  return k;
}

int SimplicialComplex::dimension() const noexcept {
  if (facets_.empty()) return kVoidDimension;
  std::size_t m = 0;
  for (const auto& f : facets_) m = std::max(m, f.size());
  return static_cast<int>(m) - 1;
}

bool SimplicialComplex::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SimplicialComplex::contains(const Face& f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](const Face& g) { return f.is_subset_of(g); });
}

bool SimplicialComplex::is_pure() const {
  if (facets_.empty()) return true;
  auto s = facets_.front().size();
  return std::all_of(facets_.begin(), facets_.end(), [s](const Face& f) { return f.size() == s; });
}

Vertex SimplicialComplex::fresh_vertex() const noexcept {
  return vertices_.empty() ? 0 : vertices_.back() + 1;
}

SimplicialComplex build_from_facets(std::vector<Face> faces) {
  return SimplicialComplex::from_facets(std::move(faces));
}

int dimension(const SimplicialComplex& k) { return k.dimension(); }

// ---------------------------------------------------------------- face enumeration

namespace {

// Collect every face of K. Uses 64-bit masks when the vertex set is small enough.
std::vector<Face> collect_faces(const SimplicialComplex& k) {
  std::vector<Face> out;
  if (k.is_void()) return out;
  const auto& vs = k.vertices();
  if (vs.size() <= 64) {
    std::unordered_set<std::uint64_t> seen;
    for (const auto& f : k.facets()) {
      std::uint64_t mask = 0;
      for (Vertex v : f) {
        auto idx = std::lower_bound(vs.begin(), vs.end(), v) - vs.begin();
        mask |= std::uint64_t{1} << idx;
      }
      // enumerate submasks, including zero
      std::uint64_t sub = mask;
      while (true) {
        seen.insert(sub);
        if (sub == 0) break;
        sub = (sub - 1) & mask;
      }
    }
    out.reserve(seen.size());
    for (auto m : seen) {
      std::vector<Vertex> face;
      face.reserve(std::popcount(m));
      while (m) {
        int idx = std::countr_zero(m);
        face.push_back(vs[idx]);
        m &= m - 1;
      }
      out.push_back(Face::from_sorted(std::move(face)));
    }
  } else {
    std::set<Face> seen;
    for (const auto& f : k.facets()) {
      const auto n = f.size();
      if (n >= 63) throw std::length_error("facet too large to enumerate");
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        std::vector<Vertex> face;
        for (std::size_t i = 0; i < n; ++i)
          if (m >> i & 1) face.push_back(f[i]);
        seen.insert(Face::from_sorted(std::move(face)));
      }
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::vector<Face> all_faces(const SimplicialComplex& k) { return collect_faces(k); }

std::vector<Face> enumerate_faces(const SimplicialComplex& k, int dim) {
  std::vector<Face> out;
  if (dim < -1) return out;
  for (auto& f : collect_faces(k))
    if (static_cast<int>(f.size()) == dim + 1) out.push_back(std::move(f));
  return out;
}

Polynomial f_vector(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("f_vector: void complex");
  std::vector<Integer> counts(static_cast<std::size_t>(k.dimension()) + 2);
  for (const auto& f : collect_faces(k)) counts[f.size()] += 1;
  return Polynomial(std::move(counts));
}

// ---------------------------------------------------------------- graphs and flagness

Graph::Graph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (auto [a, b] : edges) {
    if (a == b) throw std::invalid_argument("graph: loop at vertex " + std::to_string(a));
    if (a > b) std::swap(a, b);
    if (!std::binary_search(vertices_.begin(), vertices_.end(), a) ||
        !std::binary_search(vertices_.begin(), vertices_.end(), b))
      throw std::invalid_argument("graph: edge endpoint not a vertex");
    edges_.emplace_back(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair{a, b});
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto [a, b] : edges_) {
    if (a == v) out.push_back(b);
    else if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph one_skeleton(const SimplicialComplex& k) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) edges.emplace_back(f[i], f[j]);
  return Graph(k.vertices(), std::move(edges));
}

namespace {

// Bron–Kerbosch with pivoting over vertex indices.
class CliqueFinder {
 public:
  explicit CliqueFinder(const Graph& g) : verts_(g.vertices()), adj_(verts_.size()) {
    for (auto [a, b] : g.edges()) {
      auto ia = index(a);
      auto ib = index(b);
      adj_[ia].push_back(ib);
      adj_[ib].push_back(ia);
    }
    for (auto& row : adj_) std::sort(row.begin(), row.end());
  }

  std::vector<Face> maximal_cliques() {
    std::vector<int> r;
    std::vector<int> p(verts_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = static_cast<int>(i);
    std::vector<int> x;
    out_.clear();
    expand(r, p, x);
    return std::move(out_);
  }

 private:
  std::size_t index(Vertex v) const {
    return static_cast<std::size_t>(std::lower_bound(verts_.begin(), verts_.end(), v) - verts_.begin());
  }

  std::vector<int> intersect_adj(const std::vector<int>& s, int v) const {
    std::vector<int> out;
    std::set_intersection(s.begin(), s.end(), adj_[v].begin(), adj_[v].end(), std::back_inserter(out));
    return out;
  }

  void expand(std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
    if (p.empty() && x.empty()) {
      std::vector<Vertex> face;
      for (int i : r) face.push_back(verts_[i]);
      out_.emplace_back(std::move(face));
      return;
    }
    int pivot = !p.empty() ? p.front() : x.front();
    std::size_t best = 0;
    for (int u : p) {
      auto c = intersect_adj(p, u).size();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    std::vector<int> candidates;
    std::set_difference(p.begin(), p.end(), adj_[pivot].begin(), adj_[pivot].end(),
                        std::back_inserter(candidates));
    for (int v : candidates) {
      r.push_back(v);
      expand(r, intersect_adj(p, v), intersect_adj(x, v));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.insert(std::upper_bound(x.begin(), x.end(), v), v);
    }
  }

  std::vector<Vertex> verts_;
  std::vector<std::vector<int>> adj_;
  std::vector<Face> out_;
};

}  // namespace

SimplicialComplex clique_complex(const Graph& g) {
  if (g.vertices().empty()) return SimplicialComplex::empty_face_complex();
  return SimplicialComplex::from_facets(CliqueFinder(g).maximal_cliques());
}

FlagCheck is_flag(const SimplicialComplex& k) {
  if (k.is_void()) return {};
  for (const auto& clique : CliqueFinder(one_skeleton(k)).maximal_cliques()) {
    if (k.contains(clique)) continue;
    // shrink to a minimal non-face
    Face w = clique;
    bool shrunk = true;
    while (shrunk) {
      shrunk = false;
      for (Vertex v : w) {
        Face smaller = w.without(v);
        if (!k.contains(smaller)) {
          w = std::move(smaller);
          shrunk = true;
          break;
        }
      }
    }
    return {false, w};
  }
  return {};
}

// ---------------------------------------------------------------- face operators

SimplicialComplex link(const SimplicialComplex& k, const Face& f) {
  std::vector<Face> parts;
  for (const auto& g : k.facets())
    if (f.is_subset_of(g)) parts.push_back(g.minus(f));
  if (parts.empty()) throw std::invalid_argument("link: not a face of the complex");
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex antistar(const SimplicialComplex& k, Vertex p) {
  if (!k.has_vertex(p)) throw std::invalid_argument("antistar: unknown vertex " + std::to_string(p));
  std::vector<Face> parts;
  parts.reserve(k.facets().size());
  for (const auto& g : k.facets()) parts.push_back(g.without(p));
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex face_antistar(const SimplicialComplex& k, const Face& f) {
  if (!k.contains(f)) throw std::invalid_argument("face_antistar: not a face of the complex");
  std::vector<Face> parts;
  for (const auto& g : k.facets()) {
    if (!f.is_subset_of(g)) {
      parts.push_back(g);
      continue;
    }
    for (Vertex v : f) parts.push_back(g.without(v));
  }
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> vertices) {
  Face keep{std::vector<Vertex>(vertices.begin(), vertices.end())};
  std::vector<Face> parts;
  for (const auto& g : k.facets()) parts.push_back(g.minus(g.minus(keep)));
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex intersection(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Face> parts;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) parts.push_back(f.minus(f.minus(g)));
  return SimplicialComplex::from_facets(std::move(parts));
}

SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map) {
  std::set<Vertex> images;
  for (Vertex v : k.vertices()) {
    auto it = map.find(v);
    images.insert(it == map.end() ? v : it->second);
  }
  if (images.size() != k.num_vertices()) throw std::invalid_argument("relabel: map is not injective");
  std::vector<Face> parts;
  for (const auto& g : k.facets()) {
    std::vector<Vertex> vs;
    for (Vertex v : g) {
      auto it = map.find(v);
      vs.push_back(it == map.end() ? v : it->second);
    }
    parts.emplace_back(std::move(vs));
  }
  return SimplicialComplex::from_facets(std::move(parts));
}

JoinResult join(const SimplicialComplex& a, const SimplicialComplex& b) {
  JoinResult out;
  bool clash = false;
  for (Vertex v : b.vertices())
    if (a.has_vertex(v)) clash = true;
  Vertex next = a.fresh_vertex();
  for (Vertex v : b.vertices()) out.relabeling[v] = clash ? next++ : v;
  if (a.is_void() || b.is_void()) return out;

  SimplicialComplex bb = clash ? relabel(b, out.relabeling) : b;
  std::vector<Face> parts;
  for (const auto& f : a.facets())
    for (const auto& g : bb.facets()) parts.push_back(f.united(g));
  out.complex = SimplicialComplex::from_facets(std::move(parts));
  return out;
}

namespace {
SimplicialComplex zero_sphere() { return SimplicialComplex::from_facets({Face{0}, Face{1}}); }
}  // namespace

SimplicialComplex cone(const SimplicialComplex& k) {
  return join(k, SimplicialComplex::from_facets({Face{0}})).complex;
}

SimplicialComplex suspension(const SimplicialComplex& k) { return join(k, zero_sphere()).complex; }

SimplicialComplex double_suspension(const SimplicialComplex& k) { return suspension(suspension(k)); }

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw std::invalid_argument("cross_polytope_boundary: d must be >= 1");
  SimplicialComplex k = zero_sphere();
  for (int i = 1; i < d; ++i) k = suspension(k);
  return k;
}

SimplicialComplex cycle_complex(int n) {
  if (n < 4) throw std::invalid_argument("cycle_complex: n must be >= 4");
  std::vector<Face> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Face{i, (i + 1) % n});
  return SimplicialComplex::from_facets(std::move(edges));
}

}  // namespace flagcx
