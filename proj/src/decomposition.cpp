#include "flagcx/decomposition.hpp"

#include "flagcx/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace flagcx {

Hypothesis doubly_cm_hypothesis(const SimplicialComplex& k, FieldSpec field) {
  DoublyCMReport r = is_doubly_cm(k, field);
  if (r.is_doubly_cm) return {true, "doubly Cohen-Macaulay over " + field.name()};
  return {false, "not doubly Cohen-Macaulay over " + field.name()};
}

namespace {

const Polynomial kOnePlusXSquared{1, 2, 1};

int complex_d(const SimplicialComplex& k) {
  if (k.is_void()) throw std::invalid_argument("void complex");
  return k.dimension() + 1;
}

}  // namespace

RemainderReport double_susp_remainder(const SimplicialComplex& k, const Face& f, const Hypothesis& hypothesis) {
  const int d = complex_d(k);
  if (!k.contains(f)) throw std::invalid_argument("double_susp_remainder: F is not a face");
  if (f.size() % 2 != 0) throw std::invalid_argument("double_susp_remainder: F must be a union of disjoint edges");
  const int size = static_cast<int>(f.size());

  RemainderReport r;
  r.base = f;
  r.hypothesis = hypothesis;
  Polynomial h = h_polynomial_in_dimension(k, d);
  r.approx = Polynomial::one_plus_x_pow(size) * h_polynomial_in_dimension(link(k, f), d - size);
  r.remainder = h - r.approx;
  r.nonnegative = nonnegative(r.remainder);

  r.chain_nonnegative = true;
  SimplicialComplex current = k;
  Polynomial h_current = h;
  int cur_d = d;
  const auto& vs = f.vertices();
  for (std::size_t i = 0; i + 1 < vs.size(); i += 2) {
    Face e{vs[i], vs[i + 1]};
    SimplicialComplex next = link(current, e);
    Polynomial h_next = h_polynomial_in_dimension(next, cur_d - 2);
    ChainStep step{e, h_current - kOnePlusXSquared * h_next};
    r.chain_nonnegative = r.chain_nonnegative && nonnegative(step.remainder);
    r.chain.push_back(std::move(step));
    current = std::move(next);
    h_current = std::move(h_next);
    cur_d -= 2;
  }
  return r;
}

RemainderReport double_susp_remainder(const SimplicialComplex& k, const Face& f) {
  return double_susp_remainder(k, f, doubly_cm_hypothesis(k));
}

CrossPolytopeBoundReport cross_polytope_bound_check(const SimplicialComplex& k, const Hypothesis& hypothesis) {
  CrossPolytopeBoundReport r;
  r.d = complex_d(k);
  r.h = h_polynomial_in_dimension(k, r.d);
  r.hypothesis = hypothesis;
  r.holds = true;
  r.equality = true;
  for (int i = 0; i <= r.d; ++i) {
    Integer diff = r.h.coeff(i) - binomial(r.d, i);
    if (diff < 0) r.holds = false;
    if (diff != 0) r.equality = false;
    if (diff > 0) r.strict_somewhere = true;
    r.excess.push_back(std::move(diff));
  }
  r.gamma1 = r.h.coeff(1) - r.d;
  return r;
}

CrossPolytopeBoundReport cross_polytope_bound_check(const SimplicialComplex& k) {
  return cross_polytope_bound_check(k, doubly_cm_hypothesis(k));
}

PathExpansion path_remainder_expansion(const SimplicialComplex& k, const Face& e, const MoveSequence& path) {
  const int d = complex_d(k);
  if (e.size() != 2 || !k.contains(e)) throw std::invalid_argument("path_remainder_expansion: e is not an edge");
  if (!isomorphic(path.start, double_suspension(link(k, e))))
    throw std::invalid_argument("path_remainder_expansion: path does not start at susp^2(lk e)");
  std::vector<SimplicialComplex> states = replay(path, false);
  if (!isomorphic(states.back(), k)) throw std::invalid_argument("path_remainder_expansion: path does not end at K");

  PathExpansion out;
  for (std::size_t i = 0; i < path.moves.size(); ++i) {
    const Move& m = path.moves[i];
    SignedTerm t;
    t.sign = m.kind == MoveKind::Subdivide ? 1 : -1;
    t.complex = states[i];
    t.edge = m.edge;
    t.poly = h_polynomial_in_dimension(link(states[i], m.edge), d - 2);
    (t.sign > 0 ? out.positive : out.negative) += 1;
    out.signed_sum += t.sign > 0 ? t.poly : -t.poly;
    out.terms.push_back(std::move(t));
  }
  return out;
}

std::string to_string(EdgeStrategy s) {
  switch (s) {
    case EdgeStrategy::LargestLink: return "largest-link";
    case EdgeStrategy::SmallestLink: return "smallest-link";
    case EdgeStrategy::FirstEdge: return "first-edge";
  }
  return "largest-link";
}

EdgeStrategy parse_edge_strategy(const std::string& name) {
  if (name == "largest-link") return EdgeStrategy::LargestLink;
  if (name == "smallest-link") return EdgeStrategy::SmallestLink;
  if (name == "first-edge") return EdgeStrategy::FirstEdge;
  throw std::invalid_argument("unknown edge strategy '" + name + "'");
}

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Root: return "root";
    case NodeKind::Suspension: return "suspension";
    case NodeKind::Remainder: return "remainder";
    case NodeKind::RawRemainder: return "raw-remainder";
  }
  return "root";
}

Polynomial DecompNode::bracket() const {
  Polynomial sum;
  for (const auto& t : terms) sum += t.sign > 0 ? t.poly : -t.poly;
  return sum;
}

int DecompNode::positive_terms() const {
  return static_cast<int>(std::count_if(terms.begin(), terms.end(), [](const DecompTerm& t) { return t.sign > 0; }));
}

int DecompNode::negative_terms() const { return static_cast<int>(terms.size()) - positive_terms(); }

int DecompTree::depth() const {
  int depth = 0;
  for (const auto& n : nodes) depth = std::max(depth, n.m);
  return depth;
}

std::size_t DecompTree::unattributed_count() const {
  return static_cast<std::size_t>(
      std::count_if(nodes.begin(), nodes.end(), [](const DecompNode& n) { return n.kind == NodeKind::RawRemainder; }));
}

namespace {

// lexicographic comparison of coefficient sequences 0..len-1
int compare_coeffs(const Polynomial& a, const Polynomial& b, int len) {
  for (int i = 0; i < len; ++i) {
    Integer ca = a.coeff(i);
    Integer cb = b.coeff(i);
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  return 0;
}

std::optional<Face> choose_edge(const SimplicialComplex& l, int d_l, EdgeStrategy strategy) {
  std::vector<Face> edges = edges_of(l);
  if (edges.empty()) return std::nullopt;
  if (strategy == EdgeStrategy::FirstEdge) return edges.front();
  std::size_t best = 0;
  Polynomial best_h = h_polynomial_in_dimension(link(l, edges[0]), d_l - 2);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    Polynomial h = h_polynomial_in_dimension(link(l, edges[i]), d_l - 2);
    int c = compare_coeffs(h, best_h, d_l - 1);
    if ((strategy == EdgeStrategy::LargestLink && c > 0) || (strategy == EdgeStrategy::SmallestLink && c < 0)) {
      best = i;
      best_h = std::move(h);
    }
  }
  return edges[best];
}

class Decomposer {
 public:
  Decomposer(const SimplicialComplex& k, const DecompOptions& options) : options_(options) {
    tree_.d = complex_d(k);
    tree_.strategy = options.strategy;
    DecompNode root;
    root.terms.push_back({1, intern(k), Face{}, h_polynomial_in_dimension(k, tree_.d)});
    tree_.nodes.push_back(std::move(root));
  }

  DecompTree run() {
    std::deque<std::size_t> todo{0};
    while (!todo.empty()) {
      std::size_t idx = todo.front();
      todo.pop_front();
      for (std::size_t child : expand(idx)) todo.push_back(child);
    }
    return std::move(tree_);
  }

 private:
  int intern(const SimplicialComplex& k) {
    auto [it, inserted] = ids_.try_emplace(k.facets(), static_cast<int>(tree_.complexes.size()));
    if (inserted) tree_.complexes.push_back(k);
    return it->second;
  }

  std::size_t add_child(std::size_t parent, NodeKind kind, int sign, std::vector<DecompTerm> terms) {
    DecompNode n;
    n.m = tree_.nodes[parent].m + 1;
    n.r = tree_.nodes[parent].r + (kind == NodeKind::Suspension ? 0 : 1);
    n.sign = sign;
    n.kind = kind;
    n.parent = static_cast<int>(parent);
    n.terms = std::move(terms);
    tree_.nodes.push_back(std::move(n));
    std::size_t idx = tree_.nodes.size() - 1;
    tree_.nodes[parent].children.push_back(idx);
    return idx;
  }

  std::vector<std::size_t> expand(std::size_t idx) {
    const DecompNode node = tree_.nodes[idx];
    const int d_l = tree_.d - 2 * node.m;
    if (d_l < 2 || node.kind == NodeKind::RawRemainder) return {};

    // a node is expanded only if every term admits an edge
    std::vector<SimplicialComplex> links;
    std::vector<Face> edges;
    for (const auto& t : node.terms) {
      links.push_back(link(tree_.complexes[static_cast<std::size_t>(t.complex_id)], t.face));
      auto q = choose_edge(links.back(), d_l, options_.strategy);
      if (!q) return {};
      edges.push_back(*q);
    }

    std::vector<std::size_t> children;
    std::vector<TermSplit> splits;
    for (std::size_t ti = 0; ti < node.terms.size(); ++ti) {
      const DecompTerm& t = node.terms[ti];
      const SimplicialComplex& l = links[ti];
      const Face& q = edges[ti];
      const int sign = node.sign * t.sign;
      SimplicialComplex lk_q = link(l, q);
      Polynomial h_lk_q = h_polynomial_in_dimension(lk_q, d_l - 2);
      children.push_back(add_child(idx, NodeKind::Suspension, sign, {{1, t.complex_id, t.face.united(q), h_lk_q}}));

      TermSplit split{ti, q, false, 0, {}};
      PathSearchResult found = find_move_path(double_suspension(lk_q), l, options_.path_budget);
      split.stats = found.stats;
      if (found.path) {
        const MoveSequence& seq = found.path->sequence;
        std::vector<SimplicialComplex> states = replay(seq, false);
        std::vector<DecompTerm> terms;
        for (std::size_t i = 0; i < seq.moves.size(); ++i) {
          const Move& m = seq.moves[i];
          terms.push_back({m.kind == MoveKind::Subdivide ? 1 : -1, intern(states[i]), m.edge,
                           h_polynomial_in_dimension(link(states[i], m.edge), d_l - 2)});
        }
        split.attributed = true;
        split.path_length = seq.moves.size();
        if (!terms.empty()) children.push_back(add_child(idx, NodeKind::Remainder, sign, std::move(terms)));
      } else {
        Polynomial raw = (h_polynomial_in_dimension(l, d_l) - kOnePlusXSquared * h_lk_q).divided_by_x(1);
        if (!raw.is_zero()) children.push_back(add_child(idx, NodeKind::RawRemainder, sign, {{1, -1, Face{}, raw}}));
      }
      splits.push_back(std::move(split));
    }
    tree_.nodes[idx].splits = std::move(splits);
    return children;
  }

  DecompOptions options_;
  DecompTree tree_;
  std::map<std::vector<Face>, int> ids_;
};

void validate(const DecompTree& tree) {
  auto fail = [](const std::string& what) { throw std::invalid_argument("malformed decomposition tree: " + what); };
  if (tree.nodes.empty()) fail("no nodes");
  const DecompNode& root = tree.nodes[0];
  if (root.kind != NodeKind::Root || root.parent != -1 || root.m != 0 || root.r != 0) fail("bad root");
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const DecompNode& n = tree.nodes[i];
    if (n.sign != 1 && n.sign != -1) fail("node sign");
    if (n.terms.empty()) fail("node without terms");
    if (n.r < 0 || n.r > n.m || 2 * n.m > tree.d) fail("power pair out of range");
    if (i > 0 && n.kind == NodeKind::Root) fail("second root");
    for (const auto& t : n.terms) {
      if (t.sign != 1 && t.sign != -1) fail("term sign");
      if (t.complex_id >= static_cast<int>(tree.complexes.size())) fail("complex id");
      if (!t.attributed() && n.kind != NodeKind::RawRemainder) fail("unattributed term outside a raw remainder");
    }
    if (n.expanded() && n.splits.size() != n.terms.size()) fail("split count");
    if (!n.children.empty() && !n.expanded()) fail("children without splits");
    for (std::size_t c : n.children) {
      if (c <= i || c >= tree.nodes.size()) fail("child index");
      const DecompNode& ch = tree.nodes[c];
      if (ch.parent != static_cast<int>(i) || ch.m != n.m + 1) fail("child linkage");
      if (ch.r != n.r + (ch.kind == NodeKind::Suspension ? 0 : 1)) fail("child power pair");
    }
  }
}

}  // namespace

DecompTree iterated_gamma_decomposition(const SimplicialComplex& k, const DecompOptions& options) {
  return Decomposer(k, options).run();
}

Polynomial reconstruct_h(const DecompTree& tree) {
  validate(tree);
  Polynomial sum;
  for (const auto& n : tree.nodes) {
    if (!n.children.empty()) continue;
    Polynomial v = n.bracket().shifted(n.r) * Polynomial::one_plus_x_pow(2 * n.m - 2 * n.r);
    sum += n.sign > 0 ? v : -v;
  }
  return sum;
}

GammaVector collect_gamma(const DecompTree& tree) {
  validate(tree);
  GammaVector g;
  g.d = tree.d;
  g.gammas.assign(static_cast<std::size_t>(tree.d / 2) + 1, Integer(0));
  for (const auto& n : tree.nodes) {
    if (!n.children.empty()) continue;
    for (const auto& t : n.terms) {
      GammaVector local = gamma_vector(t.poly, tree.d - 2 * n.m);
      for (std::size_t j = 0; j < local.gammas.size(); ++j)
        g.gammas.at(j + static_cast<std::size_t>(n.r)) += n.sign * t.sign * local.gammas[j];
    }
  }
  return g;
}

std::vector<BracketCheck> bracket_checks(const DecompTree& tree) {
  std::vector<BracketCheck> out;
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const DecompNode& n = tree.nodes[i];
    out.push_back({i, n.kind != NodeKind::RawRemainder, nonnegative(n.bracket()),
                   n.positive_terms() >= n.negative_terms()});
  }
  return out;
}

std::vector<LevelBracket> level_brackets(const DecompTree& tree) {
  std::map<std::pair<int, int>, Polynomial> sums;
  for (const auto& n : tree.nodes) {
    if (!n.children.empty()) continue;
    Polynomial b = n.bracket();
    sums[{n.m, n.r}] += n.sign > 0 ? b : -b;
  }
  std::vector<LevelBracket> out;
  for (auto& [key, sum] : sums) out.push_back({key.first, key.second, sum, nonnegative(sum)});
  return out;
}

// ---------------------------------------------------------------------------
// Boolean seeds

std::vector<Face> boolean_expansion(const BooleanSeed& seed) {
  std::vector<Face> out;
  for (const auto& f : all_faces(seed.s)) {
    const int free = seed.d - 2 * static_cast<int>(f.size());
    if (free < 0) throw std::invalid_argument("boolean_expansion: seed face too large for d");
    for (unsigned mask = 0; mask < (1u << free); ++mask) {
      Face g = f;
      for (int b = 0; b < free; ++b)
        if (mask & (1u << b)) g = g.with(b);
      out.push_back(std::move(g));
    }
  }
  std::sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

Polynomial enumerate_boolean_f(const BooleanSeed& seed) {
  std::vector<Vertex> ground;
  for (int i = 0; i < seed.d; ++i) ground.push_back(i);
  for (Vertex v : seed.s.vertices()) ground.push_back(v);
  if (ground.size() > 24) throw std::invalid_argument("enumerate_boolean_f: ground set too large");
  std::vector<Integer> counts(ground.size() + 1, Integer(0));
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    std::vector<Vertex> aux;
    bool inside = true;
    int boolean_max = -1;
    for (std::size_t b = 0; b < ground.size(); ++b) {
      if (!(mask & (1u << b))) continue;
      if (ground[b] < seed.d) boolean_max = std::max(boolean_max, ground[b]);
      else aux.push_back(ground[b]);
    }
    Face f(aux);
    if (!seed.s.contains(f)) inside = false;
    if (boolean_max >= seed.d - 2 * static_cast<int>(f.size())) inside = false;
    if (inside) counts[static_cast<std::size_t>(std::popcount(mask))] += 1;
  }
  return Polynomial(std::move(counts));
}

std::string to_string(BooleanStatus s) {
  switch (s) {
    case BooleanStatus::Found: return "found";
    case BooleanStatus::Impossible: return "impossible";
    case BooleanStatus::NotFound: return "not-found";
  }
  return "not-found";
}

namespace {

bool colex_less(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<std::vector<int>> colex_subsets(int n, int size) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == size) {
      out.push_back(cur);
      return;
    }
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end(), colex_less);
  return out;
}

bool shadow_within(const std::vector<std::vector<int>>& level, const std::set<std::vector<int>>& below) {
  for (const auto& s : level)
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<int> t = s;
      t.erase(t.begin() + static_cast<std::ptrdiff_t>(i));
      if (!below.count(t)) return false;
    }
  return true;
}

// Backtracking over face levels; candidates are tried in colex order, so the
// compressed complex is the first complete assignment.
class SeedSearch {
 public:
  SeedSearch(int n, std::vector<std::size_t> counts, std::size_t max_nodes)
      : n_(n), counts_(std::move(counts)), max_nodes_(max_nodes) {}

  std::optional<std::vector<std::vector<int>>> run() {
    std::set<std::vector<int>> singletons;
    for (int v = 0; v < n_; ++v) singletons.insert({v});
    for (int v = 0; v < n_; ++v) chosen_.push_back({v});
    if (level(2, singletons)) return chosen_;
    return std::nullopt;
  }

  [[nodiscard]] std::size_t nodes() const { return nodes_; }
  [[nodiscard]] bool exhausted() const { return exhausted_; }

 private:
  bool level(std::size_t j, const std::set<std::vector<int>>& below) {
    if (j >= counts_.size()) return true;
    std::vector<std::vector<int>> candidates;
    for (auto& s : colex_subsets(n_, static_cast<int>(j)))
      if (shadow_within({s}, below)) candidates.push_back(std::move(s));
    std::vector<std::vector<int>> picked;
    return pick(j, candidates, 0, picked);
  }

  bool pick(std::size_t j, const std::vector<std::vector<int>>& candidates, std::size_t start,
            std::vector<std::vector<int>>& picked) {
    if (picked.size() == counts_[j]) {
      std::set<std::vector<int>> here(picked.begin(), picked.end());
      std::size_t mark = chosen_.size();
      chosen_.insert(chosen_.end(), picked.begin(), picked.end());
      if (level(j + 1, here)) return true;
      chosen_.resize(mark);
      return false;
    }
    for (std::size_t i = start; i + (counts_[j] - picked.size()) <= candidates.size(); ++i) {
      if (++nodes_ > max_nodes_) {
        exhausted_ = true;
        return false;
      }
      picked.push_back(candidates[i]);
      if (pick(j, candidates, i + 1, picked)) return true;
      picked.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  int n_;
  std::vector<std::size_t> counts_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<std::vector<int>> chosen_;
};

}  // namespace

BooleanSearchResult boolean_gamma_search(const Polynomial& h, int d, const BooleanBudget& budget) {
  BooleanSearchResult out;
  if (d < 0 || !is_palindromic(h, d)) {
    out.status = BooleanStatus::Impossible;
    out.reason = "h is not palindromic of length d+1";
    return out;
  }
  GammaVector g = gamma_vector(h, d);
  out.gamma = g;
  for (std::size_t j = 0; j < g.gammas.size(); ++j) {
    if (g.gammas[j] < 0) {
      out.status = BooleanStatus::Impossible;
      out.failing_index = static_cast<int>(j);
      out.reason = "gamma_" + std::to_string(j) + " = " + g.gammas[j].str() + " is negative";
      return out;
    }
  }
  if (g[0] != 1) {
    out.status = BooleanStatus::Impossible;
    out.failing_index = 0;
    out.reason = "gamma_0 = " + g[0].str() + " but a seed contains the empty face exactly once";
    return out;
  }
  if (g[1] > budget.max_aux_vertices) {
    out.status = BooleanStatus::NotFound;
    out.reason = "gamma_1 = " + g[1].str() + " exceeds the cap of " + std::to_string(budget.max_aux_vertices) +
                 " auxiliary vertices";
    return out;
  }
  const int n = g[1].convert_to<int>();
  std::vector<std::size_t> counts;
  for (const auto& c : g.gammas) counts.push_back(c.convert_to<std::size_t>());
  while (counts.size() > 2 && counts.back() == 0) counts.pop_back();

  // Kruskal–Katona: prescribed counts are realizable iff the colex-compressed family is a complex
  std::set<std::vector<int>> below;
  for (int v = 0; v < n; ++v) below.insert({v});
  for (std::size_t j = 2; j < counts.size(); ++j) {
    auto all = colex_subsets(n, static_cast<int>(j));
    if (counts[j] > all.size()) {
      out.status = BooleanStatus::Impossible;
      out.failing_index = static_cast<int>(j);
      out.reason = "gamma_" + std::to_string(j) + " exceeds the number of " + std::to_string(j) + "-subsets";
      return out;
    }
    std::vector<std::vector<int>> level(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(counts[j]));
    if (!shadow_within(level, below)) {
      out.status = BooleanStatus::Impossible;
      out.failing_index = static_cast<int>(j);
      out.reason = "face counts violate the Kruskal-Katona bound at size " + std::to_string(j);
      return out;
    }
    below = std::set<std::vector<int>>(level.begin(), level.end());
  }

  SeedSearch search(n, counts, budget.max_nodes);
  auto faces = search.run();
  out.nodes = search.nodes();
  if (!faces) {
    out.status = search.exhausted() ? BooleanStatus::NotFound : BooleanStatus::Impossible;
    out.reason = search.exhausted() ? "search budget exhausted" : "no seed exists";
    return out;
  }
  std::vector<Face> relabeled;
  for (const auto& s : *faces) {
    std::vector<Vertex> vs;
    for (int v : s) vs.push_back(d + v);
    relabeled.emplace_back(std::move(vs));
  }
  BooleanSeed seed{relabeled.empty() ? SimplicialComplex::empty_face_complex()
                                     : SimplicialComplex::from_facets(std::move(relabeled)),
                   d};
  Polynomial from_construction;
  for (const auto& f : boolean_expansion(seed)) from_construction += Polynomial::monomial(1, static_cast<int>(f.size()));
  out.verified = from_construction == h && enumerate_boolean_f(seed) == h;
  out.status = BooleanStatus::Found;
  out.seed = std::move(seed);
  return out;
}

AuditReport local_global_audit(const SimplicialComplex& k, const BooleanBudget& budget) {
  AuditReport out;
  out.d = complex_d(k);
  out.global = boolean_gamma_search(h_polynomial_in_dimension(k, out.d), out.d, budget);
  const Integer global_g1 = out.global.gamma ? (*out.global.gamma)[1] : Integer(0);

  std::vector<Face> edges = edges_of(k);
  std::map<Face, Integer> local_g1;
  for (const auto& e : edges) {
    EdgeAudit a;
    a.edge = e;
    a.h_link = h_polynomial_in_dimension(link(k, e), out.d - 2);
    a.local = boolean_gamma_search(a.h_link, out.d - 2, budget);
    Integer g1 = a.local.gamma ? (*a.local.gamma)[1] : Integer(0);
    a.status_difference = global_g1 - g1;
    local_g1[e] = g1;
    out.all_local_found = out.all_local_found && a.local.status == BooleanStatus::Found;
    out.max_status_difference = std::max(out.max_status_difference, a.status_difference);
    out.edges.push_back(std::move(a));
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      Face u = edges[i].united(edges[j]);
      if (!k.contains(u)) continue;
      PairAudit p;
      p.e1 = edges[i];
      p.e2 = edges[j];
      SimplicialComplex common = intersection(link(k, edges[i]), link(k, edges[j]));
      p.intersection_dimension = common.dimension();
      p.intersection_is_link_of_union = common.facets() == link(k, u).facets();
      Integer diff = local_g1[edges[i]] - local_g1[edges[j]];
      p.conflict = diff < 0 ? Integer(-diff) : diff;
      out.max_conflict = std::max(out.max_conflict, p.conflict);
      out.pairs.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace flagcx
