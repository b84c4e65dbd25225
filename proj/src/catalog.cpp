#include "flagcx/catalog.hpp"

#include "flagcx/io.hpp"
#include "flagcx/isomorphism.hpp"

#include <cctype>
#include <unordered_set>

namespace flagcx {

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view s) : s_(s) {}

  Recipe parse() {
    Recipe r = entry();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw RecipeParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a constructor name");
    return std::string(s_.substr(start, pos_ - start));
  }

  int integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ == start + 1 && s_[start] == '-')) {
      pos_ = start;
      fail("expected an integer");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }

  Recipe entry() {
    std::size_t at = pos_;
    std::string n = name();
    Recipe r;
    expect('(');
    if (n == "crosspoly" || n == "cycle") {
      r.kind = n == "crosspoly" ? Recipe::Kind::CrossPoly : Recipe::Kind::Cycle;
      r.args.push_back(integer());
    } else if (n == "susp" || n == "cone") {
      r.kind = n == "susp" ? Recipe::Kind::Susp : Recipe::Kind::Cone;
      r.inner = std::make_shared<Recipe>(entry());
    } else if (n == "subdiv" || n == "contract") {
      r.kind = n == "subdiv" ? Recipe::Kind::Subdiv : Recipe::Kind::Contract;
      r.inner = std::make_shared<Recipe>(entry());
      expect(',');
      r.args.push_back(integer());
      expect(',');
      r.args.push_back(integer());
    } else if (n == "file") {
      r.kind = Recipe::Kind::File;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && s_[pos_] != ')') ++pos_;
      std::size_t end = pos_;
      while (end > start && std::isspace(static_cast<unsigned char>(s_[end - 1]))) --end;
      if (end == start) fail("expected a file path");
      r.path = std::string(s_.substr(start, end - start));
    } else {
      pos_ = at;
      fail("unknown constructor '" + n + "'");
    }
    expect(')');
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Recipe parse_recipe(std::string_view text) { return RecipeParser(text).parse(); }

std::string to_string(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::CrossPoly: return "crosspoly(" + std::to_string(r.args.at(0)) + ")";
    case Recipe::Kind::Cycle: return "cycle(" + std::to_string(r.args.at(0)) + ")";
    case Recipe::Kind::Susp: return "susp(" + to_string(*r.inner) + ")";
    case Recipe::Kind::Cone: return "cone(" + to_string(*r.inner) + ")";
    case Recipe::Kind::Subdiv:
    case Recipe::Kind::Contract:
      return std::string(r.kind == Recipe::Kind::Subdiv ? "subdiv(" : "contract(") + to_string(*r.inner) + "," +
             std::to_string(r.args.at(0)) + "," + std::to_string(r.args.at(1)) + ")";
    case Recipe::Kind::File: return "file(" + r.path + ")";
  }
  return {};
}

BuiltComplex build_recipe(const Recipe& r) {
  switch (r.kind) {
    case Recipe::Kind::CrossPoly: return {cross_polytope_boundary(r.args.at(0)), true};
    case Recipe::Kind::Cycle: return {cycle_complex(r.args.at(0)), true};
    case Recipe::Kind::Susp: {
      auto in = build_recipe(*r.inner);
      return {suspension(in.complex), in.sphere_provenance};
    }
    case Recipe::Kind::Cone: return {cone(build_recipe(*r.inner).complex), false};
    case Recipe::Kind::Subdiv: {
      auto in = build_recipe(*r.inner);
      Face e{r.args.at(0), r.args.at(1)};
      return {edge_subdivide(in.complex, e, in.complex.fresh_vertex()), in.sphere_provenance};
    }
    case Recipe::Kind::Contract: {
      auto in = build_recipe(*r.inner);
      return {edge_contract(in.complex, Face{r.args.at(0), r.args.at(1)}), in.sphere_provenance};
    }
    case Recipe::Kind::File: return {read_complex_file(r.path), false};
  }
  return {};
}

BuiltComplex build_recipe(std::string_view text) { return build_recipe(parse_recipe(text)); }

namespace {

CatalogEntry make_entry(const std::string& recipe) {
  CatalogEntry e;
  e.name = recipe;
  e.provenance.recipe = parse_recipe(recipe);
  e.complex = build_recipe(e.provenance.recipe).complex;
  e.d = e.complex.dimension() + 1;
  return e;
}

}  // namespace

std::vector<CatalogEntry> sphere_catalog(const CatalogOptions& options) {
  std::vector<CatalogEntry> out;
  for (int d = 1; d <= options.max_cross_polytope; ++d) out.push_back(make_entry("crosspoly(" + std::to_string(d) + ")"));
  for (int n = 4; n <= options.max_cycle; ++n) {
    std::string c = "cycle(" + std::to_string(n) + ")";
    out.push_back(make_entry(c));
    out.push_back(make_entry("susp(" + c + ")"));
    out.push_back(make_entry("susp(susp(" + c + "))"));
  }

  // isomorphism classes of iterated subdivisions of the octahedron
  std::unordered_set<std::vector<int>, KeyHash> seen;
  std::vector<CatalogEntry> level{make_entry("crosspoly(3)")};
  seen.insert(canonical_form(level.front().complex).key());
  for (int step = 0; step < options.octahedron_subdivision_steps; ++step) {
    std::vector<CatalogEntry> next;
    for (const auto& parent : level) {
      for (const auto& e : edges_of(parent.complex)) {
        std::string recipe = "subdiv(" + parent.name + "," + std::to_string(e[0]) + "," + std::to_string(e[1]) + ")";
        SimplicialComplex k = edge_subdivide(parent.complex, e, parent.complex.fresh_vertex());
        if (!seen.insert(canonical_form(k).key()).second) continue;
        next.push_back(make_entry(recipe));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

}  // namespace flagcx
