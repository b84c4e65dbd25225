// Command-line front end: build, analyze, decompose, path, audit, verify.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "flagcx/catalog.hpp"
#include "flagcx/decomposition.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/io.hpp"
#include "flagcx/isomorphism.hpp"
#include "flagcx/reports.hpp"
#include "flagcx/suites.hpp"
#include "flagcx/vectors.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace flagcx;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string path;  // empty or "-" reads standard input
  std::string spec;
  std::string provenance;
};

void add_input_options(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Complex JSON file; standard input when omitted or '-'");
  cmd->add_option("--spec", in.spec, "Build the complex from a recipe instead of reading JSON");
  cmd->add_option("--provenance", in.provenance, "Recipe certifying the input as a sphere");
}

struct Loaded {
  SimplicialComplex complex;
  std::optional<SphereProvenance> provenance;
};

Loaded load(const Input& in) {
  Loaded out;
  if (!in.spec.empty()) {
    if (!in.path.empty()) throw UsageError("give either an input file or --spec, not both");
    Recipe r = parse_recipe(in.spec);
    out.complex = build_recipe(r).complex;
    out.provenance = SphereProvenance{r, {}};
  } else if (in.path.empty() || in.path == "-") {
    out.complex = read_complex(std::cin);
  } else {
    out.complex = read_complex_file(in.path);
  }
  if (!in.provenance.empty()) out.provenance = SphereProvenance{parse_recipe(in.provenance), {}};
  return out;
}

SphereCertificate certificate_of(const Loaded& l) {
  return certify_sphere(l.complex, l.provenance ? &*l.provenance : nullptr);
}

std::vector<FieldSpec> parse_fields(const std::vector<int>& chars) {
  std::vector<FieldSpec> out;
  for (int c : chars) {
    try {
      out.push_back(FieldSpec::make(c));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

std::string coeff_list(const Json& arr) {
  std::string s = "(";
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (i) s += ",";
    s += arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump();
  }
  return s + ")";
}

void print_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (width.size() <= i) width.push_back(0);
      width[i] = std::max(width[i], r[i].size());
    }
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::cout << std::left << std::setw(static_cast<int>(width[i])) << r[i];
      if (i + 1 < r.size()) std::cout << "  ";
    }
    std::cout << "\n";
  }
}

// ---------------------------------------------------------------------------

int cmd_build(const std::string& spec, bool allow_nonflag) {
  BuiltComplex built = build_recipe(spec);
  FlagCheck fc = is_flag(built.complex);
  if (!fc.flag && !allow_nonflag) {
    std::cerr << "refusing non-flag result (missing face " << face_to_json(*fc.witness).dump()
              << "); pass --allow-nonflag to keep it\n";
    return kFailure;
  }
  std::cout << dump_complex(built.complex) << "\n";
  return kOk;
}

int cmd_analyze(const Input& in, const std::vector<int>& field_chars, bool table) {
  Loaded l = load(in);
  auto fields = parse_fields(field_chars);
  const SimplicialComplex& k = l.complex;
  Json out{{"complex", complex_to_json(k)}};
  if (k.is_void()) {
    out["void"] = true;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  const int d = k.dimension() + 1;
  Polynomial h = h_polynomial(k);
  out["dimension"] = k.dimension();
  out["f"] = polynomial_to_json(f_vector(k));
  out["h"] = polynomial_to_json(h);
  FlagCheck fc = is_flag(k);
  out["flag"] = fc.flag;
  if (fc.witness) out["minimal_nonface"] = face_to_json(*fc.witness);
  bool ds = dehn_sommerville_check(k);
  out["dehn_sommerville"] = ds;
  if (is_palindromic(h, d)) out["gamma"] = gamma_to_json(gamma_vector(h, d));
  Json cm = Json::array();
  for (const auto& f : fields) {
    DoublyCMReport r = is_doubly_cm(k, f);
    cm.push_back({{"field", f.name()},
                  {"cm", cm_report_to_json(r.complex)},
                  {"doubly_cm", doubly_cm_report_to_json(r)}});
  }
  out["cohen_macaulay"] = std::move(cm);
  out["sphere"] = sphere_certificate_to_json(certificate_of(l));

  if (!table) {
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{
      {"dimension", std::to_string(k.dimension())},
      {"f", coeff_list(out["f"])},
      {"h", coeff_list(out["h"])},
      {"gamma", out.contains("gamma") ? coeff_list(out["gamma"]) : "-"},
      {"flag", fc.flag ? "yes" : "no"},
      {"dehn-sommerville", ds ? "yes" : "no"},
  };
  for (const auto& c : out["cohen_macaulay"]) {
    std::string name = c["field"].get<std::string>();
    rows.push_back({"CM " + name, c["cm"]["is_cm"].get<bool>() ? "yes" : "no"});
    rows.push_back({"doubly CM " + name, c["doubly_cm"]["is_doubly_cm"].get<bool>() ? "yes" : "no"});
  }
  rows.push_back({"sphere", out["sphere"]["status"].get<std::string>()});
  print_rows(rows);
  return kOk;
}

int cmd_decompose(const Input& in, const std::string& strategy, int path_depth, std::size_t path_states, bool force,
                  bool table) {
  Loaded l = load(in);
  const SimplicialComplex& k = l.complex;
  if (k.is_void()) throw UsageError("cannot decompose the void complex");
  DecompOptions options;
  try {
    options.strategy = parse_edge_strategy(strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  options.path_budget = {path_depth, path_states};

  SphereCertificate cert = certificate_of(l);
  bool flag = is_flag(k).flag;
  bool certified = flag && cert.status != SphereStatus::Unknown;
  if (!certified && !force) {
    std::cerr << "input is not a certified flag sphere (" << (flag ? cert.reason : "not flag")
              << "); pass --force to decompose anyway\n";
    return kFailure;
  }

  DecompTree tree = iterated_gamma_decomposition(k, options);
  Polynomial h = h_polynomial(k);
  Polynomial rebuilt = reconstruct_h(tree);
  bool reconstruction_ok = rebuilt == h;
  Json brackets = Json::array();
  bool brackets_ok = true;
  for (const auto& b : bracket_checks(tree)) {
    brackets.push_back({{"node", b.node},
                        {"attributed", b.attributed},
                        {"nonnegative", b.nonnegative},
                        {"terms_balanced", b.terms_balanced}});
    if (b.attributed) brackets_ok = brackets_ok && b.nonnegative && b.terms_balanced;
  }
  Json levels = Json::array();
  for (const auto& lv : level_brackets(tree))
    levels.push_back({{"m", lv.m}, {"r", lv.r}, {"sum", polynomial_to_json(lv.sum)}, {"nonnegative", lv.nonnegative}});

  Json out{{"certified", certified},
           {"sphere", sphere_certificate_to_json(cert)},
           {"tree", tree_to_json(tree)},
           {"reconstruction", {{"h", polynomial_to_json(h)}, {"reconstructed", polynomial_to_json(rebuilt)}, {"ok", reconstruction_ok}}},
           {"brackets", std::move(brackets)},
           {"level_brackets", std::move(levels)},
           {"unattributed_remainders", tree.unattributed_count()}};
  bool gamma_ok = true;
  if (is_palindromic(h, tree.d)) {
    GammaVector collected = collect_gamma(tree);
    gamma_ok = collected == gamma_vector(h, tree.d);
    out["collected_gamma"] = gamma_to_json(collected);
    out["gamma_ok"] = gamma_ok;
  }
  // with --force on an uncertified input the checks are reported, not asserted
  bool ok = reconstruction_ok && gamma_ok && (brackets_ok || !certified);

  if (!table) {
    std::cout << out.dump(2) << "\n";
    return ok ? kOk : kFailure;
  }
  std::vector<std::vector<std::string>> rows{{"node", "m", "r", "power", "sign", "kind", "terms", "bracket", "nonneg"}};
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const DecompNode& n = tree.nodes[i];
    Polynomial b = n.bracket();
    rows.push_back({std::to_string(i), std::to_string(n.m), std::to_string(n.r),
                    "x^" + std::to_string(n.r) + "(1+x)^" + std::to_string(2 * n.m - 2 * n.r), n.sign > 0 ? "+" : "-",
                    to_string(n.kind), std::to_string(n.terms.size()), b.to_string(), nonnegative(b) ? "yes" : "no"});
  }
  print_rows(rows);
  std::cout << "depth " << tree.depth() << ", reconstruction " << (reconstruction_ok ? "OK" : "FAILED");
  if (out.contains("collected_gamma")) std::cout << ", collected gamma " << coeff_list(out["collected_gamma"]);
  std::cout << "\n";
  return ok ? kOk : kFailure;
}

int cmd_path(const Input& from, const Input& to, int depth, std::size_t states) {
  Loaded a = load(from);
  Loaded b = load(to);
  PathSearchResult r = find_move_path(a.complex, b.complex, {depth, states});
  Json out{{"found", r.path.has_value()},
           {"stats",
            {{"states", r.stats.states}, {"depth_reached", r.stats.depth_reached}, {"budget_exhausted", r.stats.budget_exhausted}}}};
  if (r.path) {
    out["sequence"] = move_sequence_to_json(r.path->sequence);
    out["net_subdivisions"] = net_subdivision_count(r.path->sequence);
    Json iso = Json::array();
    for (const auto& [u, v] : r.path->isomorphism) iso.push_back({u, v});
    out["isomorphism"] = std::move(iso);
  }
  std::cout << out.dump(2) << "\n";
  return r.path ? kOk : kFailure;
}

int cmd_audit(const Input& in, bool table) {
  Loaded l = load(in);
  if (l.complex.is_void()) throw UsageError("cannot audit the void complex");
  AuditReport r = local_global_audit(l.complex);
  if (!table) {
    std::cout << audit_to_json(r).dump(2) << "\n";
    return kOk;
  }
  std::vector<std::vector<std::string>> rows{{"edge", "h(lk e)", "local seed", "gamma_1 difference"}};
  for (const auto& e : r.edges) {
    rows.push_back({coeff_list(face_to_json(e.edge)), e.h_link.to_string(), to_string(e.local.status),
                    e.status_difference.str()});
  }
  print_rows(rows);
  std::cout << "global seed " << to_string(r.global.status) << ", pairs " << r.pairs.size() << ", max difference "
            << r.max_status_difference.str() << ", max conflict " << r.max_conflict.str() << "\n";
  return kOk;
}

int cmd_verify(const std::vector<std::string>& names, SuiteOptions options, bool table) {
  std::vector<std::string> suites = names;
  if (suites.size() == 1 && suites.front() == "all") suites = suite_names();
  for (const auto& s : suites) {
    const auto known = suite_names();
    if (std::find(known.begin(), known.end(), s) == known.end()) throw UsageError("unknown suite '" + s + "'");
  }
  bool all = true;
  Json out = Json::array();
  for (const auto& s : suites) {
    SuiteResult r = run_suite(s, options);
    all = all && r.passed();
    if (table) {
      std::cout << std::left << std::setw(22) << r.name << (r.passed() ? "PASS" : "FAIL") << "  checks=" << r.checks
                << "  counterexamples=" << r.counterexamples.size() << "\n";
      for (const auto& c : r.counterexamples) std::cout << "  " << c.dump() << "\n";
    } else {
      out.push_back({{"suite", r.name},
                     {"passed", r.passed()},
                     {"checks", r.checks},
                     {"summary", r.summary},
                     {"counterexamples", r.counterexamples}});
    }
  }
  if (!table) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
  return all ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flag simplicial complexes: h- and gamma-vectors, moves, Cohen-Macaulay tests and decompositions"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  std::string build_spec;
  bool allow_nonflag = false;
  auto* build = app.add_subcommand("build", "Build a complex from a recipe and print canonical JSON");
  build->add_option("spec", build_spec, "Recipe, e.g. susp(susp(cycle(6)))")->required();
  build->add_flag("--allow-nonflag", allow_nonflag, "Print the result even when it is not flag");

  Input analyze_in;
  std::vector<int> fields{2};
  bool analyze_table = false;
  auto* analyze = app.add_subcommand("analyze", "f, h, gamma, flagness, Dehn-Sommerville, CM and sphere status");
  add_input_options(analyze, analyze_in);
  analyze->add_option("--field", fields, "Field characteristic (prime, or 0 for the rationals); repeatable");
  analyze->add_flag("--table", analyze_table, "Aligned text instead of JSON");

  Input decompose_in;
  std::string strategy = "largest-link";
  int path_depth = 12;
  std::size_t path_states = 20000;
  bool force = false;
  bool decompose_table = false;
  auto* decompose = app.add_subcommand("decompose", "Iterated gamma decomposition tree");
  add_input_options(decompose, decompose_in);
  decompose->add_option("--strategy", strategy, "largest-link, smallest-link or first-edge");
  decompose->add_option("--path-depth", path_depth, "Move path search depth per node");
  decompose->add_option("--path-states", path_states, "Move path search state budget per node");
  decompose->add_flag("--force", force, "Decompose inputs that are not certified flag spheres");
  decompose->add_flag("--table", decompose_table, "Aligned text instead of JSON");

  Input path_from;
  Input path_to;
  int search_depth = 6;
  std::size_t search_states = 200000;
  auto* path = app.add_subcommand("path", "Search for a flag-preserving move path between two complexes");
  path->add_option("from", path_from.path, "Start complex JSON file");
  path->add_option("to", path_to.path, "Target complex JSON file");
  path->add_option("--from-spec", path_from.spec, "Start complex recipe");
  path->add_option("--to-spec", path_to.spec, "Target complex recipe");
  path->add_option("--max-depth", search_depth, "Search depth");
  path->add_option("--max-states", search_states, "Search state budget");

  Input audit_in;
  bool audit_table = false;
  auto* audit = app.add_subcommand("audit", "Per-edge local Boolean seeds against the global one");
  add_input_options(audit, audit_in);
  audit->add_flag("--table", audit_table, "Aligned text instead of JSON");

  std::vector<std::string> suites;
  SuiteOptions suite_options;
  int suite_field = 2;
  bool catalog = false;
  bool verify_table = false;
  auto* verify = app.add_subcommand("verify", "Run verification suites ('all' runs every suite)");
  verify->add_option("suite", suites, "Suite names")->required();
  verify->add_option("--samples", suite_options.samples, "Random samples");
  verify->add_option("--seed", suite_options.seed, "Random seed");
  verify->add_option("--walks", suite_options.walks, "Random walks");
  verify->add_option("--field", suite_field, "Field characteristic for CM checks");
  verify->add_flag("--catalog", catalog, "Run over the full sphere catalog (the default)");
  verify->add_option("--max-cycle", suite_options.catalog.max_cycle, "Largest cycle in the catalog");
  verify->add_option("--subdivision-steps", suite_options.catalog.octahedron_subdivision_steps,
                     "Octahedron subdivision depth in the catalog");
  verify->add_flag("--table", verify_table, "One line per suite instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(build_spec, allow_nonflag);
    if (*analyze) return cmd_analyze(analyze_in, fields, analyze_table);
    if (*decompose) return cmd_decompose(decompose_in, strategy, path_depth, path_states, force, decompose_table);
    if (*path) {
      if (path_from.path.empty() == path_from.spec.empty() || path_to.path.empty() == path_to.spec.empty())
        throw UsageError("path needs exactly one of a file or --from-spec/--to-spec for each end");
      return cmd_path(path_from, path_to, search_depth, search_states);
    }
    if (*audit) return cmd_audit(audit_in, audit_table);
    if (*verify) {
      suite_options.field = parse_fields({suite_field}).front();
      return cmd_verify(suites, suite_options, verify_table);
    }
  } catch (const RecipeParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
