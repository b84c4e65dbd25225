#include "flagcx/isomorphism.hpp"

#include <algorithm>
#include <numeric>

#include <boost/container_hash/hash.hpp>

namespace flagcx {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const SimplicialComplex& k) : verts_(k.vertices()), n_(static_cast<int>(verts_.size())) {
    inc_.resize(n_);
    for (const auto& f : k.facets()) {
      std::vector<int> idx;
      for (Vertex v : f) idx.push_back(index(v));
      for (int i : idx) inc_[i].push_back(static_cast<int>(facets_.size()));
      facets_.push_back(std::move(idx));
    }
  }

  CanonicalForm run() {
    search(std::vector<int>(n_, 0), {});
    CanonicalForm out;
    out.order.resize(n_);
    for (int v = 0; v < n_; ++v) out.order[best_lab_[v]] = verts_[v];
    for (const auto& f : facets_) {
      std::vector<Vertex> relabeled;
      for (int v : f) relabeled.push_back(best_lab_[v]);
      std::sort(relabeled.begin(), relabeled.end());
      out.facets.push_back(Face::from_sorted(std::move(relabeled)));
    }
    std::sort(out.facets.begin(), out.facets.end());
    return out;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    int cells = count_cells(colors);
    while (true) {
      std::vector<std::vector<int>> sigs(n_);
      for (int v = 0; v < n_; ++v) {
        std::vector<std::vector<int>> around;
        around.reserve(inc_[v].size());
        for (int f : inc_[v]) {
          std::vector<int> c;
          for (int u : facets_[f])
            if (u != v) c.push_back(colors[u]);
          std::sort(c.begin(), c.end());
          around.push_back(std::move(c));
        }
        std::sort(around.begin(), around.end());
        auto& s = sigs[v];
        s.push_back(colors[v]);
        for (const auto& c : around) {
          s.push_back(static_cast<int>(c.size()));
          s.insert(s.end(), c.begin(), c.end());
        }
      }
      auto sorted = sigs;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (int v = 0; v < n_; ++v)
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[v]) - sorted.begin());
      int now = static_cast<int>(sorted.size());
      if (now == cells) return colors;
      cells = now;
    }
  }

 private:
  int index(Vertex v) const {
    return static_cast<int>(std::lower_bound(verts_.begin(), verts_.end(), v) - verts_.begin());
  }

  static int count_cells(const std::vector<int>& colors) {
    auto c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  std::vector<int> encode(const std::vector<int>& lab) const {
    std::vector<std::vector<int>> fs;
    for (const auto& f : facets_) {
      std::vector<int> r;
      for (int v : f) r.push_back(lab[v]);
      std::sort(r.begin(), r.end());
      fs.push_back(std::move(r));
    }
    std::sort(fs.begin(), fs.end());
    std::vector<int> enc{n_, static_cast<int>(fs.size())};
    for (const auto& f : fs) {
      enc.push_back(static_cast<int>(f.size()));
      enc.insert(enc.end(), f.begin(), f.end());
    }
    return enc;
  }

  void leaf(const std::vector<int>& lab) {
    auto enc = encode(lab);
    if (best_lab_.empty() || enc < best_enc_) {
      best_enc_ = std::move(enc);
      best_lab_ = lab;
      best_inv_.assign(n_, 0);
      for (int v = 0; v < n_; ++v) best_inv_[best_lab_[v]] = v;
    } else if (enc == best_enc_) {
      std::vector<int> g(n_);
      for (int v = 0; v < n_; ++v) g[v] = best_inv_[lab[v]];
      autos_.push_back(std::move(g));
    }
  }

  int find(std::vector<int>& parent, int v) const {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }

  bool pruned(int v, const std::vector<int>& explored, const std::vector<int>& path) const {
    if (explored.empty()) return false;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& g : autos_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](int p) { return g[p] == p; });
      if (!fixes) continue;
      for (int u = 0; u < n_; ++u) {
        int a = find(parent, u);
        int b = find(parent, g[u]);
        if (a != b) parent[a] = b;
      }
    }
    int rv = find(parent, v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(parent, e) == rv; });
  }

  void search(std::vector<int> colors, std::vector<int> path) {
    colors = refine(std::move(colors));
    std::vector<int> count(n_, 0);
    for (int c : colors) ++count[c];
    int target = -1;
    for (int c = 0; c < n_; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(colors);
      return;
    }
    std::vector<int> explored;
    for (int v = 0; v < n_; ++v) {
      if (colors[v] != target) continue;
      if (pruned(v, explored, path)) continue;
      explored.push_back(v);
      std::vector<int> child(n_);
      for (int u = 0; u < n_; ++u) child[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  std::vector<Vertex> verts_;
  int n_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> best_enc_;
  std::vector<int> best_lab_;
  std::vector<int> best_inv_;
  std::vector<std::vector<int>> autos_;
};

}  // namespace

std::vector<int> CanonicalForm::key() const {
  std::vector<int> enc{static_cast<int>(order.size()), static_cast<int>(facets.size())};
  for (const auto& f : facets) {
    enc.push_back(static_cast<int>(f.size()));
    enc.insert(enc.end(), f.begin(), f.end());
  }
  return enc;
}

CanonicalForm canonical_form(const SimplicialComplex& k) { return Canonizer(k).run(); }

std::vector<int> invariant_profile(const SimplicialComplex& k) {
  std::vector<int> sizes;
  std::vector<int> degrees(k.num_vertices(), 0);
  for (const auto& f : k.facets()) {
    sizes.push_back(static_cast<int>(f.size()));
    for (Vertex v : f) {
      auto idx = std::lower_bound(k.vertices().begin(), k.vertices().end(), v) - k.vertices().begin();
      ++degrees[idx];
    }
  }
  std::sort(sizes.begin(), sizes.end());
  std::sort(degrees.begin(), degrees.end());
  std::vector<int> out{static_cast<int>(k.num_vertices()), static_cast<int>(sizes.size())};
  out.insert(out.end(), sizes.begin(), sizes.end());
  out.insert(out.end(), degrees.begin(), degrees.end());
  return out;
}

std::optional<VertexMap> find_isomorphism(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (invariant_profile(a) != invariant_profile(b)) return std::nullopt;
  auto ca = canonical_form(a);
  auto cb = canonical_form(b);
  if (ca.facets != cb.facets || ca.order.size() != cb.order.size()) return std::nullopt;
  VertexMap map;
  for (std::size_t i = 0; i < ca.order.size(); ++i) map[ca.order[i]] = cb.order[i];
  return map;
}

bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  return find_isomorphism(a, b).has_value();
}

std::size_t KeyHash::operator()(const std::vector<int>& key) const noexcept {
  return boost::hash_range(key.begin(), key.end());
}

}  // namespace flagcx
