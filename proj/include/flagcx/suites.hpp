// Named verification suites exercising the identities and bounds on the
// sphere catalog. Shared by the command line tool and the acceptance runner.
#pragma once

#include "flagcx/catalog.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace flagcx {

struct SuiteOptions {
  int samples = 200;
  std::uint64_t seed = 1;
  int walks = 50;
  int max_walk_length = 20;
  FieldSpec field;
  CatalogOptions catalog;
};

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<Json> counterexamples;
  Json summary = Json::object();

  [[nodiscard]] bool passed() const { return counterexamples.empty(); }
};

std::vector<std::string> suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& options = {});

SuiteResult subdivision_identity_suite(const SuiteOptions& options);
SuiteResult net_count_suite(const SuiteOptions& options);
SuiteResult lower_bound_suite(const SuiteOptions& options);
SuiteResult cross_polytope_suite(const SuiteOptions& options);
SuiteResult reconstruction_suite(const SuiteOptions& options);
SuiteResult boolean_suite(const SuiteOptions& options);
SuiteResult cm_suite(const SuiteOptions& options);
SuiteResult suspension_gamma_suite(const SuiteOptions& options);

/// The bowtie graph: two hollow triangles sharing vertex 0.
SimplicialComplex bowtie();
SimplicialComplex two_disjoint_edges();

}  // namespace flagcx
