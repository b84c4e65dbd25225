#include "flagcx/catalog.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/suites.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace flagcx;

namespace {

const FieldSpec kGF2{2};
const FieldSpec kQ{0};

SimplicialComplex projective_plane() {
  return SimplicialComplex::from_facets({Face{1, 2, 3}, Face{1, 3, 4}, Face{1, 4, 5}, Face{1, 5, 6}, Face{1, 2, 6},
                                         Face{2, 3, 5}, Face{2, 4, 5}, Face{2, 4, 6}, Face{3, 4, 6}, Face{3, 5, 6}});
}

void check_against_oracle(const SimplicialComplex& k) {
  auto fs = oracle::faces(k);
  CHECK(reduced_betti(k, kGF2) == oracle::reduced_betti(fs, 2));
  CHECK(reduced_betti(k, kQ) == oracle::reduced_betti(fs, 0));
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::make(0).name() == "Q");
  CHECK(FieldSpec::make(7).name() == "GF(7)");
  CHECK_THROWS_AS((void)FieldSpec::make(9), std::invalid_argument);
  CHECK_THROWS_AS((void)FieldSpec::make(1), std::invalid_argument);
  CHECK(is_prime(2));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("reduced Betti numbers of small complexes") {
  CHECK(reduced_betti(cross_polytope_boundary(3), kGF2) == std::vector<int>{0, 0, 0, 1});
  CHECK(reduced_betti(SimplicialComplex::from_facets({Face{0}, Face{1}})) == std::vector<int>{0, 1});
  CHECK(reduced_betti(SimplicialComplex::from_facets({Face{0, 1, 2}})) == std::vector<int>{0, 0, 0, 0});
  CHECK(reduced_betti(SimplicialComplex::empty_face_complex()) == std::vector<int>{1});
  CHECK_THROWS_AS((void)reduced_betti(SimplicialComplex::void_complex()), std::invalid_argument);
}

TEST_CASE("torsion makes homology field dependent") {
  SimplicialComplex rp2 = projective_plane();
  CHECK(reduced_betti(rp2, kGF2) == std::vector<int>{0, 0, 1, 1});
  CHECK(reduced_betti(rp2, kQ) == std::vector<int>{0, 0, 0, 0});
  CHECK(reduced_betti(rp2, FieldSpec{3}) == std::vector<int>{0, 0, 0, 0});
  check_against_oracle(rp2);
  CHECK(is_cohen_macaulay(rp2, kQ).is_cm);
  CMReport gf2 = is_cohen_macaulay(rp2, kGF2);
  CHECK_FALSE(gf2.is_cm);
  REQUIRE(gf2.witness);
  CHECK(gf2.witness->face.empty());
  CHECK(gf2.witness->degree == 1);
}

TEST_CASE("Betti numbers agree with independent rank oracles") {
  for (const auto& e : sphere_catalog()) {
    check_against_oracle(e.complex);
    check_against_oracle(cone(e.complex));
    check_against_oracle(antistar(e.complex, e.complex.vertices().front()));
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Face> facets;
    for (int i = 0; i < 6; ++i) {
      std::vector<Vertex> vs;
      for (int v = 0; v < 8; ++v)
        if (std::bernoulli_distribution(0.35)(rng)) vs.push_back(v);
      facets.emplace_back(vs);
    }
    check_against_oracle(SimplicialComplex::from_facets(facets));
  }
}

TEST_CASE("boundary matrices compose to zero") {
  SimplicialComplex k = cross_polytope_boundary(4);
  for (int dim = 1; dim <= k.dimension(); ++dim) {
    IntMatrix a = boundary_matrix(k, dim - 1);
    IntMatrix b = boundary_matrix(k, dim);
    REQUIRE(a.cols == b.rows);
    for (std::size_t r = 0; r < a.rows; ++r)
      for (std::size_t c = 0; c < b.cols; ++c) {
        int sum = 0;
        for (std::size_t i = 0; i < a.cols; ++i) sum += a.at(r, i) * b.at(i, c);
        CHECK(sum == 0);
      }
  }
  CHECK_THROWS_AS((void)boundary_matrix(k, 4), std::invalid_argument);
}

TEST_CASE("Cohen-Macaulay examples") {
  CHECK(is_cohen_macaulay(cross_polytope_boundary(3)).is_cm);
  for (FieldSpec f : {kGF2, kQ, FieldSpec{3}}) {
    CHECK(is_cohen_macaulay(bowtie(), f).is_cm);
    CHECK_FALSE(is_doubly_cm(bowtie(), f).is_doubly_cm);
  }
  CMReport two = is_cohen_macaulay(two_disjoint_edges());
  CHECK_FALSE(two.is_cm);
  REQUIRE(two.witness);
  CHECK(two.witness->face.empty());
  CHECK(two.witness->degree == 0);
  CMReport ok = is_cohen_macaulay(cycle_complex(5));
  CHECK_FALSE(ok.witness);
  // the filled bowtie has a vertex link with two components
  SimplicialComplex filled = SimplicialComplex::from_facets({Face{0, 1, 2}, Face{0, 3, 4}});
  CMReport f = is_cohen_macaulay(filled);
  CHECK_FALSE(f.is_cm);
  CHECK(f.witness->face == Face{0});
}

TEST_CASE("doubly Cohen-Macaulay") {
  for (int d = 1; d <= 4; ++d) CHECK(is_doubly_cm(cross_polytope_boundary(d)).is_doubly_cm);
  DoublyCMReport b = is_doubly_cm(bowtie());
  REQUIRE(b.failing_vertex);
  CHECK(*b.failing_vertex == 0);
  REQUIRE(b.antistar);
  CHECK(b.antistar->witness->degree == 0);
  // a single vertex loses its dimension when deleted
  DoublyCMReport point = is_doubly_cm(SimplicialComplex::from_facets({Face{0}}));
  CHECK_FALSE(point.is_doubly_cm);
  CHECK(point.dimension_drop);
  // a 2-ball is CM; deleting its cone point leaves a circle of lower dimension
  SimplicialComplex disk = cone(cycle_complex(5));
  CHECK(is_cohen_macaulay(disk).is_cm);
  CHECK_FALSE(is_doubly_cm(disk).is_doubly_cm);
}

TEST_CASE("antistar and link split h") {
  SUBCASE("octahedron") {
    AstLinkReport r = h_ast_link_inequality(cross_polytope_boundary(3), 0);
    CHECK(r.hypothesis);
    CHECK(r.h_link == Polynomial{1, 2, 1});
    CHECK(r.h_antistar == Polynomial{1, 2, 1});
    CHECK(r.split_holds);
    CHECK(r.inequality_holds);
  }
  SUBCASE("square") {
    AstLinkReport r = h_ast_link_inequality(cycle_complex(4), 0);
    CHECK(r.h_link == Polynomial{1, 1});
    CHECK(r.h_antistar == Polynomial{1, 1});
    CHECK(r.split_holds);
    CHECK(r.inequality_holds);
  }
  SUBCASE("pentagon") {
    AstLinkReport r = h_ast_link_inequality(cycle_complex(5), 2);
    CHECK(r.h_link == Polynomial{1, 1});
    CHECK(r.h_antistar == Polynomial{1, 2});
    CHECK(r.inequality_holds);
  }
  SUBCASE("hypothesis failure is reported") {
    AstLinkReport r = h_ast_link_inequality(bowtie(), 0);
    CHECK_FALSE(r.hypothesis);
    CHECK(r.split_holds);
  }
  CHECK_THROWS_AS((void)h_ast_link_inequality(cycle_complex(4), 9), std::invalid_argument);
}

TEST_CASE("the split and the inequality hold at every vertex of every catalog sphere") {
  for (const auto& e : sphere_catalog()) {
    if (e.d > 4) continue;
    for (Vertex v : e.complex.vertices()) {
      AstLinkReport r = h_ast_link_inequality(e.complex, v);
      CHECK_MESSAGE(r.split_holds, e.name);
      CHECK(r.hypothesis);
      CHECK(r.inequality_holds);
    }
  }
}

TEST_CASE("sphere certification") {
  CHECK(certify_sphere(cycle_complex(12)).status == SphereStatus::CertifiedSphere);
  CHECK(certify_sphere(cross_polytope_boundary(3)).status == SphereStatus::CertifiedSphere);
  CHECK(certify_sphere(cross_polytope_boundary(1)).status == SphereStatus::CertifiedSphere);
  CHECK(certify_sphere(SimplicialComplex::empty_face_complex()).status == SphereStatus::CertifiedSphere);
  CHECK(certify_sphere(projective_plane()).status == SphereStatus::Unknown);
  CHECK(certify_sphere(cone(cycle_complex(5))).status == SphereStatus::Unknown);
  CHECK(certify_sphere(SimplicialComplex::void_complex()).status == SphereStatus::Unknown);
  SimplicialComplex two_cycles = SimplicialComplex::from_facets(
      {Face{0, 1}, Face{1, 2}, Face{0, 2}, Face{3, 4}, Face{4, 5}, Face{3, 5}});
  CHECK(certify_sphere(two_cycles).status == SphereStatus::Unknown);

  SimplicialComplex c4 = cross_polytope_boundary(4);
  CHECK(certify_sphere(c4).status == SphereStatus::Unknown);
  MoveSequence walk = random_flag_walk(c4, 3, 5);
  SimplicialComplex moved = replay(walk).back();
  SphereProvenance prov{parse_recipe("crosspoly(4)"), walk.moves};
  CHECK(certify_sphere(moved, &prov).status == SphereStatus::CertifiedByProvenance);
  SphereProvenance wrong{parse_recipe("susp(susp(cycle(12)))"), {}};
  CHECK(certify_sphere(moved, &wrong).status == SphereStatus::Unknown);
  SphereProvenance cone_recipe{parse_recipe("cone(susp(cycle(5)))"), {}};
  CHECK(certify_sphere(build_recipe("cone(susp(cycle(5)))").complex, &cone_recipe).status == SphereStatus::Unknown);
}

TEST_CASE("Euler characteristic equals the alternating Betti sum") {
  for (const auto& e : sphere_catalog()) {
    auto f = oracle::f_vector(oracle::faces(e.complex));
    auto betti = reduced_betti(e.complex, kQ);
    Integer chi_f = 0;
    Integer chi_b = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      chi_f += (i % 2 == 0) ? Integer(-f[i]) : f[i];
      chi_b += (i % 2 == 0) ? -betti[i] : betti[i];
    }
    CHECK(chi_f == chi_b);
  }
}
