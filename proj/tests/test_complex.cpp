#include "flagcx/complex.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using namespace flagcx;

namespace {

oracle::FaceSet library_faces(const SimplicialComplex& k) {
  oracle::FaceSet out;
  for (const auto& f : all_faces(k)) out.insert(f.vertices());
  return out;
}

// random complex on up to n vertices from a few random facets
SimplicialComplex random_complex(std::mt19937_64& rng, int n) {
  std::vector<Face> facets;
  int count = std::uniform_int_distribution<int>(1, 6)(rng);
  for (int i = 0; i < count; ++i) {
    std::vector<Vertex> vs;
    for (int v = 0; v < n; ++v)
      if (std::bernoulli_distribution(0.4)(rng)) vs.push_back(v);
    facets.emplace_back(vs);
  }
  return SimplicialComplex::from_facets(facets);
}

}  // namespace

TEST_CASE("faces reject repeated vertices and sort their input") {
  CHECK(Face{3, 1, 2}.vertices() == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(Face({1, 1}), std::invalid_argument);
  CHECK(Face{1, 2}.united(Face{2, 5}) == Face{1, 2, 5});
  CHECK(Face{1, 2, 5}.minus(Face{2}) == Face{1, 5});
  CHECK(Face{1, 2}.disjoint_from(Face{3}));
}

TEST_CASE("void and empty-face complexes are distinct") {
  SimplicialComplex v = SimplicialComplex::void_complex();
  SimplicialComplex e = SimplicialComplex::empty_face_complex();
  CHECK(v.is_void());
  CHECK_FALSE(e.is_void());
  CHECK(v.dimension() == kVoidDimension);
  CHECK(e.dimension() == -1);
  CHECK(all_faces(v).empty());
  CHECK(all_faces(e).size() == 1);
  CHECK_THROWS_AS((void)f_vector(v), std::invalid_argument);
  CHECK(f_vector(e) == Polynomial{1});
}

TEST_CASE("face enumeration matches brute force on random complexes") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex k = random_complex(rng, 8);
    auto expected = oracle::faces(k);
    CHECK(library_faces(k) == expected);
    auto f = oracle::f_vector(expected);
    CHECK(oracle::coeffs(f_vector(k), f.size()) == f);
    for (int d = -1; d <= k.dimension(); ++d)
      for (const auto& face : enumerate_faces(k, d)) CHECK(static_cast<int>(face.size()) == d + 1);
  }
}

TEST_CASE("links match brute force on random complexes") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    SimplicialComplex k = random_complex(rng, 7);
    auto fs = oracle::faces(k);
    for (const auto& f : fs) {
      SimplicialComplex lk = link(k, Face(f));
      CHECK(library_faces(lk) == oracle::link(fs, f));
    }
  }
  CHECK_THROWS_AS((void)link(cycle_complex(5), Face{0, 2}), std::invalid_argument);
}

TEST_CASE("flagness matches the clique oracle") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    SimplicialComplex k = random_complex(rng, 7);
    FlagCheck c = is_flag(k);
    CHECK(c.flag == oracle::is_flag(oracle::faces(k)));
    if (!c.flag) {
      REQUIRE(c.witness);
      CHECK_FALSE(k.contains(*c.witness));
      for (Vertex v : *c.witness) CHECK(k.contains(c.witness->without(v)));
    }
  }
  CHECK_FALSE(is_flag(SimplicialComplex::from_facets({Face{0, 1}, Face{1, 2}, Face{0, 2}})).flag);
  CHECK(is_flag(cycle_complex(4)).flag);
}

TEST_CASE("clique complex of a one-skeleton") {
  SimplicialComplex oct = cross_polytope_boundary(3);
  CHECK(clique_complex(one_skeleton(oct)).facets() == oct.facets());
  CHECK(clique_complex(Graph{}).dimension() == -1);
}

TEST_CASE("standard constructions") {
  SimplicialComplex oct = cross_polytope_boundary(3);
  CHECK(oct.vertices().size() == 6);
  CHECK(oct.facets().size() == 8);
  CHECK(f_vector(oct) == Polynomial{1, 6, 12, 8});
  CHECK(f_vector(cross_polytope_boundary(1)) == Polynomial{1, 2});
  CHECK_THROWS_AS((void)cross_polytope_boundary(0), std::invalid_argument);

  CHECK(f_vector(cycle_complex(5)) == Polynomial{1, 5, 5});
  CHECK_THROWS_AS((void)cycle_complex(3), std::invalid_argument);

  SimplicialComplex c = cone(cycle_complex(5));
  CHECK(f_vector(c) == Polynomial{1, 6, 10, 5});
  SimplicialComplex s = suspension(cycle_complex(5));
  CHECK(f_vector(s) == Polynomial{1, 7, 15, 10});
  CHECK(double_suspension(cycle_complex(4)).facets().size() == cross_polytope_boundary(4).facets().size());
}

TEST_CASE("join relabels clashing vertices") {
  SimplicialComplex a = SimplicialComplex::from_facets({Face{0, 1}});
  SimplicialComplex b = SimplicialComplex::from_facets({Face{0}, Face{1}});
  JoinResult j = join(a, b);
  CHECK(j.complex.facets().size() == 2);
  CHECK(j.complex.dimension() == 2);
  CHECK(join(a, SimplicialComplex::empty_face_complex()).complex.facets() == a.facets());
}

TEST_CASE("antistar, induced subcomplex, intersection and relabel") {
  SimplicialComplex oct = cross_polytope_boundary(3);
  SimplicialComplex ast = antistar(oct, 0);
  CHECK(f_vector(ast) == Polynomial{1, 5, 8, 4});
  CHECK_THROWS_AS((void)antistar(oct, 99), std::invalid_argument);
  std::vector<Vertex> keep{0, 2, 4};
  CHECK(induced_subcomplex(oct, keep).facets() == std::vector<Face>{Face{0, 2, 4}});
  SimplicialComplex inter = intersection(link(oct, Face{0}), link(oct, Face{2}));
  CHECK(inter.facets() == link(oct, Face{0, 2}).facets());
  CHECK_THROWS_AS((void)relabel(oct, VertexMap{{0, 1}, {1, 1}}), std::invalid_argument);
}
