#include "flagcx/suites.hpp"

#include "flagcx/decomposition.hpp"
#include "flagcx/isomorphism.hpp"
#include "flagcx/reports.hpp"
#include "flagcx/vectors.hpp"

#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace flagcx {

SimplicialComplex bowtie() {
  return SimplicialComplex::from_facets({Face{0, 1}, Face{1, 2}, Face{0, 2}, Face{0, 3}, Face{3, 4}, Face{0, 4}});
}

SimplicialComplex two_disjoint_edges() { return SimplicialComplex::from_facets({Face{0, 1}, Face{2, 3}}); }

namespace {

using SuiteFn = std::function<SuiteResult(const SuiteOptions&)>;

const std::map<std::string, SuiteFn>& registry() {
  static const std::map<std::string, SuiteFn> suites{
      {"subdivision-identity", subdivision_identity_suite},
      {"net-count", net_count_suite},
      {"lower-bound", lower_bound_suite},
      {"cross-polytope", cross_polytope_suite},
      {"reconstruction", reconstruction_suite},
      {"boolean", boolean_suite},
      {"cm", cm_suite},
      {"suspension-gamma", suspension_gamma_suite},
  };
  return suites;
}

struct CertifiedEntry {
  const CatalogEntry* entry;
  SphereCertificate certificate;
};

// catalog spheres whose certificate and flagness both check out
std::vector<CertifiedEntry> certified_flag_spheres(const std::vector<CatalogEntry>& catalog, SuiteResult& result) {
  std::vector<CertifiedEntry> out;
  for (const auto& e : catalog) {
    SphereCertificate c = certify_sphere(e.complex, &e.provenance);
    bool flag = is_flag(e.complex).flag;
    ++result.checks;
    if (c.status == SphereStatus::Unknown || !flag) {
      result.counterexamples.push_back(
          {{"entry", e.name}, {"reason", "catalog entry not a certified flag sphere"}, {"certificate", c.reason}});
      continue;
    }
    out.push_back({&e, std::move(c)});
  }
  return out;
}

Polynomial x_times(const Polynomial& p) { return p.shifted(1); }

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& options) {
  auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(options);
}

SuiteResult subdivision_identity_suite(const SuiteOptions& options) {
  SuiteResult result{"subdivision-identity", 0, {}, Json::object()};
  std::vector<const CatalogEntry*> pool;
  auto catalog = sphere_catalog(options.catalog);
  for (const auto& e : catalog)
    if (e.d >= 2 && e.d <= 4) pool.push_back(&e);
  std::mt19937_64 rng(options.seed);
  for (int s = 0; s < options.samples; ++s) {
    const CatalogEntry& base = *pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    int steps = std::uniform_int_distribution<int>(0, 8)(rng);
    MoveSequence walk = random_flag_walk(base.complex, steps, rng());
    SimplicialComplex k = replay(walk).back();
    std::vector<Face> edges = edges_of(k);
    Face e = edges[std::uniform_int_distribution<std::size_t>(0, edges.size() - 1)(rng)];
    SimplicialComplex sub = edge_subdivide(k, e, k.fresh_vertex());
    Polynomial lhs = h_polynomial(sub) - h_polynomial(k);
    Polynomial rhs = x_times(h_polynomial(link(k, e)));
    ++result.checks;
    if (lhs != rhs)
      result.counterexamples.push_back({{"complex", complex_to_json(k)},
                                        {"edge", face_to_json(e)},
                                        {"difference", polynomial_to_json(lhs)},
                                        {"expected", polynomial_to_json(rhs)}});
  }
  result.summary = {{"samples", options.samples}, {"seed", options.seed}};
  return result;
}

SuiteResult net_count_suite(const SuiteOptions& options) {
  SuiteResult result{"net-count", 0, {}, Json::object()};
  std::mt19937_64 rng(options.seed);
  for (int w = 0; w < options.walks; ++w) {
    int d = 2 + w % 3;
    int length = std::uniform_int_distribution<int>(1, options.max_walk_length)(rng);
    SimplicialComplex start = cross_polytope_boundary(d);
    MoveSequence walk = random_flag_walk(start, length, rng());
    std::vector<SimplicialComplex> states = replay(walk);
    Polynomial h0 = h_polynomial(start);
    for (std::size_t i = 1; i < states.size(); ++i) {
      MoveSequence prefix{start, {walk.moves.begin(), walk.moves.begin() + static_cast<std::ptrdiff_t>(i)}};
      int net = net_subdivision_count(prefix);
      Integer df0 = Integer(states[i].vertices().size()) - Integer(start.vertices().size());
      Integer dh1 = h_polynomial(states[i]).coeff(1) - h0.coeff(1);
      ++result.checks;
      if (df0 != net || dh1 != net)
        result.counterexamples.push_back({{"walk", move_sequence_to_json(walk)},
                                          {"prefix", i},
                                          {"net", net},
                                          {"delta_f0", integer_to_json(df0)},
                                          {"delta_h1", integer_to_json(dh1)}});
    }
  }
  result.summary = {{"walks", options.walks}, {"max_length", options.max_walk_length}, {"seed", options.seed}};
  return result;
}

SuiteResult lower_bound_suite(const SuiteOptions& options) {
  SuiteResult result{"lower-bound", 0, {}, Json::object()};
  auto catalog = sphere_catalog(options.catalog);
  std::size_t faces = 0;
  for (const auto& c : certified_flag_spheres(catalog, result)) {
    Hypothesis hyp{true, "certified sphere: " + c.certificate.reason};
    for (const auto& f : all_faces(c.entry->complex)) {
      if (f.size() == 0 || f.size() % 2 != 0) continue;
      RemainderReport r = double_susp_remainder(c.entry->complex, f, hyp);
      ++result.checks;
      ++faces;
      if (r.violation() || r.approx + r.remainder != h_polynomial(c.entry->complex))
        result.counterexamples.push_back({{"entry", c.entry->name}, {"report", remainder_report_to_json(r)}});
    }
  }
  result.summary = {{"faces", faces}};
  return result;
}

SuiteResult cross_polytope_suite(const SuiteOptions& options) {
  SuiteResult result{"cross-polytope", 0, {}, Json::object()};
  auto catalog = sphere_catalog(options.catalog);
  int equal = 0;
  int strict = 0;
  for (const auto& c : certified_flag_spheres(catalog, result)) {
    const SimplicialComplex& k = c.entry->complex;
    CrossPolytopeBoundReport r = cross_polytope_bound_check(k, {true, c.certificate.reason});
    bool is_cross = isomorphic(k, cross_polytope_boundary(c.entry->d));
    bool ok = r.holds && r.gamma1 >= 0 && (is_cross ? r.equality : r.strict_somewhere);
    (r.equality ? equal : strict) += 1;
    ++result.checks;
    if (!ok)
      result.counterexamples.push_back(
          {{"entry", c.entry->name}, {"cross_polytope", is_cross}, {"report", cross_polytope_report_to_json(r)}});
  }
  result.summary = {{"equality", equal}, {"strict", strict}};
  return result;
}

SuiteResult reconstruction_suite(const SuiteOptions& options) {
  SuiteResult result{"reconstruction", 0, {}, Json::object()};
  auto catalog = sphere_catalog(options.catalog);
  std::size_t unattributed = 0;
  auto spheres = certified_flag_spheres(catalog, result);
  for (EdgeStrategy s : {EdgeStrategy::LargestLink, EdgeStrategy::SmallestLink, EdgeStrategy::FirstEdge}) {
    for (const auto& c : spheres) {
      const SimplicialComplex& k = c.entry->complex;
      DecompTree tree = iterated_gamma_decomposition(k, {s, {12, 20000}});
      Polynomial h = h_polynomial(k);
      std::vector<std::string> problems;
      if (reconstruct_h(tree) != h) problems.push_back("reconstruction differs from h");
      if (tree.depth() > tree.d / 2) problems.push_back("depth exceeds d/2");
      for (const auto& b : bracket_checks(tree))
        if (b.attributed && (!b.nonnegative || !b.terms_balanced))
          problems.push_back("bracket at node " + std::to_string(b.node) + " fails");
      if (collect_gamma(tree) != gamma_vector(h, tree.d)) problems.push_back("collected gamma differs");
      unattributed += tree.unattributed_count();
      ++result.checks;
      if (!problems.empty())
        result.counterexamples.push_back({{"entry", c.entry->name}, {"strategy", to_string(s)}, {"problems", problems}});
    }
  }
  result.summary = {{"unattributed_remainders", unattributed}};
  return result;
}

SuiteResult boolean_suite(const SuiteOptions&) {
  SuiteResult result{"boolean", 0, {}, Json::object()};
  struct Case {
    std::string name;
    Polynomial h;
    int d;
    BooleanStatus expected;
    std::vector<std::size_t> seed_counts;  // faces of S by size
  };
  std::vector<Case> cases{
      {"crosspoly(3)", h_polynomial(cross_polytope_boundary(3)), 3, BooleanStatus::Found, {1}},
      {"cycle(5)", h_polynomial(cycle_complex(5)), 2, BooleanStatus::Found, {1, 1}},
      {"cycle(6)", h_polynomial(cycle_complex(6)), 2, BooleanStatus::Found, {1, 2}},
      {"1+x+x^2", Polynomial{1, 1, 1}, 2, BooleanStatus::Impossible, {}},
  };
  for (int d = 1; d <= 5; ++d)
    cases.push_back({"crosspoly(" + std::to_string(d) + ")", h_polynomial(cross_polytope_boundary(d)), d,
                     BooleanStatus::Found, {1}});
  for (const auto& c : cases) {
    BooleanSearchResult r = boolean_gamma_search(c.h, c.d);
    bool ok = r.status == c.expected;
    if (ok && r.status == BooleanStatus::Found) {
      ok = r.verified && enumerate_boolean_f(*r.seed) == c.h;
      Polynomial counts = f_vector(r.seed->s);
      for (std::size_t j = 0; j < c.seed_counts.size(); ++j) ok = ok && counts.coeff(static_cast<int>(j)) == c.seed_counts[j];
      ok = ok && counts.degree() + 1 == static_cast<int>(c.seed_counts.size());
    }
    ++result.checks;
    if (!ok) result.counterexamples.push_back({{"case", c.name}, {"result", boolean_result_to_json(r)}});
  }
  return result;
}

SuiteResult cm_suite(const SuiteOptions& options) {
  SuiteResult result{"cm", 0, {}, Json::object()};
  auto expect = [&](const std::string& name, bool actual, bool expected) {
    ++result.checks;
    if (actual != expected) result.counterexamples.push_back({{"case", name}, {"expected", expected}});
  };
  const FieldSpec f = options.field;
  for (int d = 1; d <= 4; ++d)
    expect("crosspoly(" + std::to_string(d) + ") doubly CM", is_doubly_cm(cross_polytope_boundary(d), f).is_doubly_cm, true);
  expect("bowtie CM", is_cohen_macaulay(bowtie(), f).is_cm, true);
  expect("bowtie doubly CM", is_doubly_cm(bowtie(), f).is_doubly_cm, false);
  expect("two disjoint edges CM", is_cohen_macaulay(two_disjoint_edges(), f).is_cm, false);

  auto catalog = sphere_catalog(options.catalog);
  for (const auto& c : certified_flag_spheres(catalog, result)) {
    const SimplicialComplex& k = c.entry->complex;
    expect(c.entry->name + " doubly CM", is_doubly_cm(k, f).is_doubly_cm, true);
    expect(c.entry->name + " Dehn-Sommerville", dehn_sommerville_check(k), true);
    std::vector<int> betti = reduced_betti(k, FieldSpec::rationals());
    Polynomial fv = f_vector(k);
    Integer euler_f;
    Integer euler_b;
    for (int i = 0; i <= fv.degree(); ++i) {
      Integer sign = (i % 2 == 0) ? -1 : 1;  // f_{i-1} enters with (-1)^{i-1}
      euler_f += sign * fv.coeff(i);
      euler_b += sign * betti[static_cast<std::size_t>(i)];
    }
    expect(c.entry->name + " Euler characteristic", euler_f == euler_b, true);
    std::vector<int> cone_betti = reduced_betti(cone(k), f);
    expect(c.entry->name + " cone acyclic",
           std::all_of(cone_betti.begin(), cone_betti.end(), [](int b) { return b == 0; }), true);
  }
  return result;
}

SuiteResult suspension_gamma_suite(const SuiteOptions& options) {
  SuiteResult result{"suspension-gamma", 0, {}, Json::object()};
  auto catalog = sphere_catalog(options.catalog);
  for (const auto& c : certified_flag_spheres(catalog, result)) {
    const SimplicialComplex& k = c.entry->complex;
    GammaVector g = gamma_vector(h_polynomial(k), c.entry->d);
    GammaVector gs = gamma_vector(h_polynomial(double_suspension(k)), c.entry->d + 2);
    bool ok = true;
    for (std::size_t j = 0; j < std::max(g.gammas.size(), gs.gammas.size()); ++j) ok = ok && g[j] == gs[j];
    ++result.checks;
    if (!ok)
      result.counterexamples.push_back({{"entry", c.entry->name}, {"gamma", gamma_to_json(g)}, {"gamma_susp2", gamma_to_json(gs)}});
  }
  return result;
}

}  // namespace flagcx
