// Acceptance runner: one PASS/FAIL line per criterion with its time limit.
// Library results are compared against the brute-force oracles wherever an
// independent computation is feasible.
#include "flagcx/catalog.hpp"
#include "flagcx/decomposition.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/isomorphism.hpp"
#include "flagcx/moves.hpp"
#include "flagcx/suites.hpp"
#include "flagcx/vectors.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

using namespace flagcx;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

/// Collects the first failure message; later ones are only counted.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (first_.empty()) first_ = what;
  }
  [[nodiscard]] Outcome outcome(const std::string& summary) const {
    std::ostringstream out;
    out << summary << "; " << checks_ << " checks";
    if (failures_ > 0) out << ", " << failures_ << " failed, first: " << first_;
    return {failures_ == 0, out.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::vector<Integer> oracle_h(const oracle::FaceSet& fs, int d) { return oracle::h_vector(oracle::f_vector(fs), d); }

std::vector<Integer> oracle_h(const SimplicialComplex& k, int d) { return oracle_h(oracle::faces(k), d); }

bool same(const Polynomial& p, const std::vector<Integer>& c) {
  return p == Polynomial(std::vector<Integer>(c.begin(), c.end()));
}

std::string poly_str(const Polynomial& p) { return p.to_string(); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = sphere_catalog();
  return c;
}

Outcome subdivision_identity() {
  Tally t;
  std::vector<const CatalogEntry*> pool;
  for (const auto& e : catalog())
    if (e.d >= 2 && e.d <= 4) pool.push_back(&e);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const CatalogEntry& e = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    int steps = std::uniform_int_distribution<int>(0, 8)(rng);
    SimplicialComplex k = replay(random_flag_walk(e.complex, steps, rng())).back();
    auto edges = edges_of(k);
    Face edge = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    SimplicialComplex sub = edge_subdivide(k, edge, k.fresh_vertex());
    auto fk = oracle::faces(k);
    auto before = oracle_h(fk, e.d);
    auto after = oracle_h(sub, e.d);
    auto lk = oracle_h(oracle::link(fk, edge.vertices()), e.d - 2);
    bool ok = true;
    for (int j = 0; j <= e.d; ++j) {
      Integer rhs = j >= 1 && j - 1 < static_cast<int>(lk.size()) ? lk[static_cast<std::size_t>(j - 1)] : Integer(0);
      ok = ok && after[static_cast<std::size_t>(j)] - before[static_cast<std::size_t>(j)] == rhs;
    }
    t.expect(ok, e.name + " edge " + std::to_string(edge[0]) + "," + std::to_string(edge[1]));
    t.expect(h_polynomial(sub) - h_polynomial(k) == h_polynomial(link(k, edge)).shifted(1), "library identity on " + e.name);
  }
  return t.outcome("200 seeded (sphere, walk, edge) samples with d <= 4");
}

Outcome net_count() {
  Tally t;
  std::mt19937_64 rng(2);
  std::size_t prefixes = 0;
  for (int w = 0; w < 50; ++w) {
    int d = 2 + w % 3;
    int len = std::uniform_int_distribution<int>(0, 20)(rng);
    MoveSequence walk = random_flag_walk(cross_polytope_boundary(d), len, rng());
    auto chain = replay(walk);
    auto base = oracle_h(chain.front(), d);
    int net = 0;
    for (std::size_t i = 0; i <= walk.moves.size(); ++i) {
      if (i > 0) net += walk.moves[i - 1].kind == MoveKind::Subdivide ? 1 : -1;
      auto h = oracle_h(chain[i], d);
      Integer df0 = static_cast<long>(chain[i].num_vertices()) - static_cast<long>(chain.front().num_vertices());
      Integer dh1 = h[1] - base[1];
      MoveSequence prefix{walk.start, std::vector<Move>(walk.moves.begin(), walk.moves.begin() + static_cast<long>(i))};
      t.expect(net == df0 && df0 == dh1 && net_subdivision_count(prefix) == net,
               "walk " + std::to_string(w) + " prefix " + std::to_string(i));
      ++prefixes;
    }
  }
  return t.outcome("50 walks from boundary cross-polytopes d = 2..4, " + std::to_string(prefixes) + " prefixes");
}

Outcome lower_bound() {
  Tally t;
  std::size_t spheres = 0;
  for (const auto& e : catalog()) {
    if (certify_sphere(e.complex, &e.provenance).status == SphereStatus::Unknown) {
      t.expect(false, e.name + " not certified");
      continue;
    }
    ++spheres;
    auto fs = oracle::faces(e.complex);
    auto h = oracle_h(fs, e.d);
    for (const auto& f : fs) {
      if (f.empty() || f.size() % 2) continue;
      int size = static_cast<int>(f.size());
      Polynomial approx =
          Polynomial::one_plus_x_pow(size) * Polynomial(oracle_h(oracle::link(fs, f), e.d - size));
      Polynomial remainder = Polynomial(h) - approx;
      RemainderReport r = double_susp_remainder(e.complex, Face(f), Hypothesis{true, "sphere"});
      t.expect(nonnegative(remainder), e.name + " remainder " + poly_str(remainder));
      t.expect(r.remainder == remainder && !r.violation(), e.name + " library remainder disagrees");
    }
  }
  return t.outcome(std::to_string(spheres) + " certified catalog spheres, every nonempty even face");
}

Outcome cross_polytope() {
  Tally t;
  std::size_t equalities = 0;
  std::size_t subdivided = 0;
  for (const auto& e : catalog()) {
    auto h = oracle_h(e.complex, e.d);
    bool holds = true;
    bool equal = true;
    for (int i = 0; i <= e.d; ++i) {
      Integer ex = h[static_cast<std::size_t>(i)] - oracle::binom(e.d, i);
      holds = holds && ex >= 0;
      equal = equal && ex == 0;
    }
    bool is_cross = isomorphic(e.complex, cross_polytope_boundary(e.d));
    auto g = oracle::gamma_vector(h, e.d);
    Integer g1 = g.size() > 1 ? g[1] : Integer(0);
    CrossPolytopeBoundReport r = cross_polytope_bound_check(e.complex, Hypothesis{true, "sphere"});
    t.expect(holds, e.name + " below binomials");
    t.expect(equal == is_cross, e.name + " equality does not match the cross-polytope");
    t.expect(g1 >= 0, e.name + " negative gamma_1");
    t.expect(r.holds == holds && r.equality == equal && r.gamma1 == g1, e.name + " library report disagrees");
    if (e.name.rfind("subdiv(", 0) == 0) {
      ++subdivided;
      t.expect(!equal, e.name + " subdivided member attains equality");
    }
    if (equal) ++equalities;
  }
  return t.outcome(std::to_string(equalities) + " equality cases, all cross-polytopes; " + std::to_string(subdivided) +
                   " subdivided members strict");
}

Outcome reconstruction() {
  Tally t;
  std::size_t trees = 0;
  std::size_t raw = 0;
  for (EdgeStrategy s : {EdgeStrategy::LargestLink, EdgeStrategy::SmallestLink, EdgeStrategy::FirstEdge}) {
    for (const auto& e : catalog()) {
      DecompTree tree = iterated_gamma_decomposition(e.complex, {s, {12, 20000}});
      ++trees;
      raw += tree.unattributed_count();
      auto h = oracle_h(e.complex, e.d);
      std::string tag = e.name + " " + to_string(s);
      t.expect(same(reconstruct_h(tree), h), tag + " reconstruction");
      t.expect(tree.depth() <= e.d / 2, tag + " depth");
      for (const auto& b : bracket_checks(tree))
        if (b.attributed) t.expect(b.nonnegative, tag + " negative bracket at node " + std::to_string(b.node));
      auto g = oracle::gamma_vector(h, e.d);
      t.expect(collect_gamma(tree).gammas == g, tag + " collected gamma");
      t.expect(collect_gamma(tree) == gamma_vector(h_polynomial(e.complex), e.d), tag + " gamma_vector");
    }
  }
  return t.outcome(std::to_string(trees) + " trees over 3 strategies, " + std::to_string(raw) + " unattributed terms");
}

/// Face counts of Γ from its explicit face list, after checking the list is
/// a simplicial complex without repeats.
std::optional<Polynomial> counted_expansion(const BooleanSeed& seed) {
  auto faces = boolean_expansion(seed);
  oracle::FaceSet set;
  for (const auto& f : faces) set.insert(f.vertices());
  if (set.size() != faces.size()) return std::nullopt;
  std::vector<std::vector<Vertex>> all(set.begin(), set.end());
  if (oracle::faces(all) != set) return std::nullopt;
  auto f = oracle::f_vector(set);
  return Polynomial(std::vector<Integer>(f.begin(), f.end()));
}

Outcome boolean_search() {
  Tally t;
  auto found = [&](const Polynomial& h, int d, std::size_t seed_faces, const std::string& name) {
    BooleanSearchResult r = boolean_gamma_search(h, d);
    if (r.status != BooleanStatus::Found) {
      t.expect(false, name + " no seed: " + r.reason);
      return;
    }
    auto counted = counted_expansion(*r.seed);
    t.expect(r.verified, name + " not verified");
    t.expect(counted && *counted == h, name + " enumeration of Gamma");
    t.expect(enumerate_boolean_f(*r.seed) == h, name + " subset enumeration");
    t.expect(all_faces(r.seed->s).size() == seed_faces, name + " seed size");
  };
  found(h_polynomial(cross_polytope_boundary(3)), 3, 1, "octahedron");
  found(h_polynomial(cycle_complex(5)), 2, 2, "pentagon");
  found(h_polynomial(cycle_complex(6)), 2, 3, "hexagon");
  t.expect(gamma_vector(h_polynomial(cycle_complex(6)), 2).gammas == std::vector<Integer>{1, 2}, "hexagon gamma");
  for (int d = 1; d <= 5; ++d) found(h_polynomial(cross_polytope_boundary(d)), d, 1, "crosspoly(" + std::to_string(d) + ")");
  BooleanSearchResult bad = boolean_gamma_search(Polynomial{1, 1, 1}, 2);
  t.expect(bad.status == BooleanStatus::Impossible && bad.failing_index == 1, "1+x+x^2 not reported impossible");
  return t.outcome("octahedron, pentagon, hexagon, crosspoly(1..5) found; 1+x+x^2 impossible");
}

/// Every complex whose Betti numbers a (doubly) CM check of k computes.
void betti_inputs(const SimplicialComplex& k, std::map<std::vector<Face>, SimplicialComplex>& out) {
  auto add_links = [&](const SimplicialComplex& c) {
    for (const auto& f : all_faces(c)) {
      SimplicialComplex lk = link(c, f);
      out.emplace(lk.facets(), lk);
    }
  };
  add_links(k);
  for (Vertex v : k.vertices()) add_links(antistar(k, v));
}

bool within_oracle_size(const oracle::FaceSet& fs) {
  std::map<std::size_t, std::size_t> count;
  for (const auto& f : fs) ++count[f.size()];
  for (const auto& [size, n] : count)
    if (n > 200) return false;
  return true;
}

Outcome cm_certification() {
  Tally t;
  const FieldSpec gf2{2};
  for (int d = 1; d <= 4; ++d) {
    DoublyCMReport r = is_doubly_cm(cross_polytope_boundary(d), gf2);
    t.expect(r.is_doubly_cm, "crosspoly(" + std::to_string(d) + ") not doubly CM");
  }
  t.expect(is_doubly_cm(cross_polytope_boundary(3), gf2).is_doubly_cm, "octahedron");
  t.expect(is_cohen_macaulay(bowtie(), gf2).is_cm, "bowtie not CM");
  t.expect(!is_doubly_cm(bowtie(), gf2).is_doubly_cm, "bowtie doubly CM");
  t.expect(!is_cohen_macaulay(two_disjoint_edges(), gf2).is_cm, "two disjoint edges CM");

  std::map<std::vector<Face>, SimplicialComplex> inputs;
  for (int d = 1; d <= 4; ++d) betti_inputs(cross_polytope_boundary(d), inputs);
  betti_inputs(bowtie(), inputs);
  betti_inputs(two_disjoint_edges(), inputs);
  std::size_t compared = 0;
  std::size_t skipped = 0;
  for (const auto& [key, c] : inputs) {
    auto fs = oracle::faces(c);
    if (!within_oracle_size(fs)) {
      ++skipped;
      continue;
    }
    ++compared;
    std::string tag = "Betti of " + std::to_string(c.facets().size()) + "-facet complex";
    t.expect(reduced_betti(c, gf2) == oracle::reduced_betti(fs, 2), tag + " over GF(2)");
    t.expect(reduced_betti(c, FieldSpec{0}) == oracle::reduced_betti(fs, 0), tag + " over Q");
  }
  t.expect(skipped == 0, std::to_string(skipped) + " Betti inputs exceed 200x200");
  return t.outcome(std::to_string(compared) + " distinct Betti inputs matched the rank oracles");
}

Outcome suspension_gamma() {
  Tally t;
  for (const auto& e : catalog()) {
    if (e.d > 5) continue;
    SimplicialComplex s2 = double_suspension(e.complex);
    auto g = oracle::gamma_vector(oracle_h(e.complex, e.d), e.d);
    auto g2 = oracle::gamma_vector(oracle_h(s2, e.d + 2), e.d + 2);
    GammaVector lib = gamma_vector(h_polynomial(s2), e.d + 2);
    bool ok = true;
    for (std::size_t j = 0; j < g2.size(); ++j) {
      Integer base = j < g.size() ? g[j] : Integer(0);
      ok = ok && g2[j] == base && lib[j] == base;
    }
    t.expect(ok, e.name);
  }
  return t.outcome("every catalog sphere against its double suspension");
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  auto t0 = Clock::now();
  std::size_t spheres = catalog().size();
  double catalog_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  std::printf("catalog: %zu spheres built in %.2fs\n", spheres, catalog_seconds);

  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "subdivision identity", 10, subdivision_identity},
      {2, "net-count law", 10, net_count},
      {3, "double-suspension lower bound", 60, lower_bound},
      {4, "cross-polytope bound", 10, cross_polytope},
      {5, "decomposition reconstruction", 120, reconstruction},
      {6, "Boolean seed search", 10, boolean_search},
      {7, "Cohen-Macaulay certification", 30, cm_certification},
      {8, "double suspension keeps gamma", 5, suspension_gamma},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    bool pass = o.passed && seconds < c.limit;
    all = all && pass;
    std::printf("%s  %d  %-32s %.2fs/<%.0fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.name, seconds, c.limit,
                o.detail.c_str());
  }
  std::printf("%s  9  %-32s bounded evidence only: criteria 1-8 over %zu catalog spheres with d <= 5; "
              "general flag spheres and higher gamma entries are not checked\n",
              all ? "PASS" : "FAIL", "large-scale claims", spheres);
  return all ? 0 : 1;
}
