// Independent reference computations used to cross-check the library.
// Everything here works from raw facet lists by brute force and shares no
// code path with the implementation under test beyond the Face type.
#pragma once

#include "flagcx/complex.hpp"
#include "flagcx/polynomial.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bitset>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using flagcx::Face;
using flagcx::Integer;
using flagcx::SimplicialComplex;
using flagcx::Vertex;
using Rational = boost::multiprecision::cpp_rational;
using FaceSet = std::set<std::vector<Vertex>>;

/// Every subset of every facet, including the empty set for nonvoid input.
inline FaceSet faces(const std::vector<std::vector<Vertex>>& facets) {
  FaceSet out;
  for (const auto& f : facets) {
    const std::size_t n = f.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) s.push_back(f[i]);
      std::sort(s.begin(), s.end());
      out.insert(s);
    }
  }
  return out;
}

inline FaceSet faces(const SimplicialComplex& k) {
  std::vector<std::vector<Vertex>> fs;
  for (const auto& f : k.facets()) fs.push_back(f.vertices());
  return faces(fs);
}

/// f_{i-1} at index i.
inline std::vector<Integer> f_vector(const FaceSet& fs) {
  std::size_t top = 0;
  for (const auto& f : fs) top = std::max(top, f.size());
  std::vector<Integer> out(top + 1, 0);
  for (const auto& f : fs) out[f.size()] += 1;
  return out;
}

inline Integer binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h_k = Σ_{i=0}^{k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
inline std::vector<Integer> h_vector(const std::vector<Integer>& f, int d) {
  std::vector<Integer> h(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k && i < static_cast<int>(f.size()); ++i) {
      Integer term = binom(d - i, k - i) * f[static_cast<std::size_t>(i)];
      h[static_cast<std::size_t>(k)] += ((k - i) % 2 == 0) ? term : Integer(-term);
    }
  return h;
}

/// Forward substitution in h_i = Σ_j γ_j C(d-2j, i-j), i = 0..⌊d/2⌋.
inline std::vector<Integer> gamma_vector(const std::vector<Integer>& h, int d) {
  std::vector<Integer> g(static_cast<std::size_t>(d / 2) + 1, 0);
  for (int i = 0; i <= d / 2; ++i) {
    Integer rest = i < static_cast<int>(h.size()) ? h[static_cast<std::size_t>(i)] : Integer(0);
    for (int j = 0; j < i; ++j) rest -= g[static_cast<std::size_t>(j)] * binom(d - 2 * j, i - j);
    g[static_cast<std::size_t>(i)] = rest;
  }
  return g;
}

inline FaceSet link(const FaceSet& fs, const std::vector<Vertex>& f) {
  FaceSet out;
  for (const auto& g : fs) {
    bool disjoint = std::none_of(g.begin(), g.end(), [&](Vertex v) { return std::count(f.begin(), f.end(), v); });
    if (!disjoint) continue;
    std::vector<Vertex> u = g;
    u.insert(u.end(), f.begin(), f.end());
    std::sort(u.begin(), u.end());
    if (fs.count(u)) out.insert(g);
  }
  return out;
}

/// Every clique of the 1-skeleton is a face.
inline bool is_flag(const FaceSet& fs) {
  std::set<Vertex> vs;
  std::set<std::pair<Vertex, Vertex>> edges;
  for (const auto& f : fs) {
    for (Vertex v : f) vs.insert(v);
    if (f.size() == 2) edges.insert({f[0], f[1]});
  }
  std::vector<Vertex> v(vs.begin(), vs.end());
  for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.push_back(v[i]);
    bool clique = true;
    for (std::size_t i = 0; i < s.size() && clique; ++i)
      for (std::size_t j = i + 1; j < s.size() && clique; ++j) clique = edges.count({s[i], s[j]}) > 0;
    if (clique && !fs.count(s)) return false;
  }
  return true;
}

/// Rank over GF(2) with bitset rows.
inline std::size_t rank_gf2(std::vector<std::vector<int>> m) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  std::vector<std::bitset<512>> rows;
  for (const auto& r : m) {
    std::bitset<512> b;
    for (std::size_t c = 0; c < cols; ++c)
      if (r[c] % 2 != 0) b.set(c);
    rows.push_back(b);
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p].test(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(c)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

/// Rank over Q by Gauss–Jordan with exact rationals.
inline std::size_t rank_rational(const std::vector<std::vector<int>>& m) {
  if (m.empty()) return 0;
  std::vector<std::vector<Rational>> a;
  for (const auto& r : m) a.emplace_back(r.begin(), r.end());
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      Rational factor = a[r][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[r][j] -= factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// Oriented boundary from size-(k+1) faces to size-k faces, with rows and
/// columns in set order. Orientation uses (-1)^position.
inline std::vector<std::vector<int>> boundary(const FaceSet& fs, std::size_t k) {
  std::vector<std::vector<Vertex>> lower;
  std::vector<std::vector<Vertex>> upper;
  for (const auto& f : fs) {
    if (f.size() == k) lower.push_back(f);
    if (f.size() == k + 1) upper.push_back(f);
  }
  std::map<std::vector<Vertex>, std::size_t> row;
  for (std::size_t i = 0; i < lower.size(); ++i) row[lower[i]] = i;
  std::vector<std::vector<int>> m(lower.size(), std::vector<int>(upper.size(), 0));
  for (std::size_t c = 0; c < upper.size(); ++c)
    for (std::size_t i = 0; i < upper[c].size(); ++i) {
      std::vector<Vertex> g = upper[c];
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(i));
      m[row.at(g)][c] = (i % 2 == 0) ? 1 : -1;
    }
  return m;
}

/// Reduced Betti numbers for degrees -1..dim; characteristic 2 or 0 only.
inline std::vector<int> reduced_betti(const FaceSet& fs, int characteristic) {
  std::size_t top = 0;
  for (const auto& f : fs) top = std::max(top, f.size());
  // rank of the boundary from size-k faces to size-(k-1) faces
  auto rank = [&](std::size_t k) -> std::size_t {
    if (k == 0 || k > top) return 0;
    auto m = boundary(fs, k - 1);
    return characteristic == 2 ? rank_gf2(m) : rank_rational(m);
  };
  std::vector<int> out;
  for (std::size_t size = 0; size <= top; ++size) {
    std::size_t n = static_cast<std::size_t>(std::count_if(fs.begin(), fs.end(), [&](const auto& f) { return f.size() == size; }));
    out.push_back(static_cast<int>(n - rank(size) - rank(size + 1)));
  }
  return out;
}

inline std::vector<Integer> coeffs(const flagcx::Polynomial& p, std::size_t len) {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(p.coeff(static_cast<int>(i)));
  return out;
}

}  // namespace oracle
