#include "flagcx/moves.hpp"

#include "flagcx/isomorphism.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace flagcx {

namespace {

void require_edge(const SimplicialComplex& k, const Face& e, const char* op) {
  if (e.size() != 2 || !k.contains(e)) throw InvalidMove(std::string(op) + ": not an edge of the complex");
}

}  // namespace

std::vector<Face> edges_of(const SimplicialComplex& k) { return enumerate_faces(k, 1); }

SimplicialComplex edge_subdivide(const SimplicialComplex& k, const Face& e, Vertex v) {
  require_edge(k, e, "edge_subdivide");
  if (k.has_vertex(v)) throw InvalidMove("edge_subdivide: vertex " + std::to_string(v) + " already present");
  const Vertex a = e[0];
  const Vertex b = e[1];
  std::vector<Face> parts;
  for (const auto& g : k.facets()) {
    if (!e.is_subset_of(g)) {
      parts.push_back(g);
      continue;
    }
    Face rest = g.minus(e).with(v);
    parts.push_back(rest.with(a));
    parts.push_back(rest.with(b));
  }
  return SimplicialComplex::from_facets(std::move(parts));
}

bool link_condition(const SimplicialComplex& k, const Face& e) {
  require_edge(k, e, "link_condition");
  return intersection(link(k, Face{e[0]}), link(k, Face{e[1]})) == link(k, e);
}

namespace {

SimplicialComplex contract_unchecked(const SimplicialComplex& k, Vertex keep, Vertex drop) {
  std::vector<Face> parts;
  parts.reserve(k.facets().size());
  for (const auto& g : k.facets()) parts.push_back(g.contains(drop) ? g.without(drop).with(keep) : g);
  return SimplicialComplex::from_facets(std::move(parts));
}

}  // namespace

SimplicialComplex edge_contract(const SimplicialComplex& k, const Face& e) {
  require_edge(k, e, "edge_contract");
  if (!link_condition(k, e)) throw InvalidMove("edge_contract: link condition fails");
  return contract_unchecked(k, e[0], e[1]);
}

bool flag_contractible(const SimplicialComplex& k, const Face& e) {
  if (!link_condition(k, e)) return false;
  return is_flag(contract_unchecked(k, e[0], e[1])).flag;
}

SimplicialComplex apply_move(const SimplicialComplex& k, const Move& m) {
  if (m.kind == MoveKind::Subdivide) return edge_subdivide(k, m.edge, m.vertex);
  require_edge(k, m.edge, "contract");
  if (m.vertex != m.edge[0])
    throw InvalidMove("contract: surviving vertex must be the smaller endpoint");
  return edge_contract(k, m.edge);
}

std::vector<SimplicialComplex> replay(const MoveSequence& seq, bool require_flag) {
  std::vector<SimplicialComplex> out{seq.start};
  if (require_flag && !is_flag(seq.start).flag) throw InvalidMove("replay: start complex is not flag");
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    out.push_back(apply_move(out.back(), seq.moves[i]));
    if (require_flag && !is_flag(out.back()).flag)
      throw InvalidMove("replay: complex after move " + std::to_string(i) + " is not flag");
  }
  return out;
}

int net_subdivision_count(const MoveSequence& seq) {
  replay(seq);
  int net = 0;
  for (const auto& m : seq.moves) net += m.kind == MoveKind::Subdivide ? 1 : -1;
  return net;
}

// ---------------------------------------------------------------- random walks

MoveSequence random_flag_walk(const SimplicialComplex& k, int steps, std::uint64_t seed) {
  if (!is_flag(k).flag) throw InvalidMove("random_flag_walk: start complex is not flag");
  std::mt19937_64 rng(seed);
  MoveSequence seq{k, {}};
  SimplicialComplex cur = k;
  for (int s = 0; s < steps; ++s) {
    auto edges = edges_of(cur);
    if (edges.empty()) throw InvalidMove("random_flag_walk: no valid move available");
    std::vector<Face> contractible;
    for (const auto& e : edges)
      if (flag_contractible(cur, e)) contractible.push_back(e);
    std::bernoulli_distribution subdivide_first(0.6);
    Move m;
    if (!contractible.empty() && !subdivide_first(rng)) {
      std::uniform_int_distribution<std::size_t> pick(0, contractible.size() - 1);
      const Face& e = contractible[pick(rng)];
      m = Move::contract(e[0], e[1]);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
      const Face& e = edges[pick(rng)];
      m = Move::subdivide(e[0], e[1], cur.fresh_vertex());
    }
    cur = apply_move(cur, m);
    seq.moves.push_back(m);
  }
  return seq;
}

// ---------------------------------------------------------------- path search

namespace {

using Key = std::vector<int>;

// Contraction of `center` into `into` that undoes a subdivision of {into, partner}.
struct Reduction {
  Vertex center;
  Vertex into;
  Vertex partner;
};

// Vertices whose link is the suspension {x,y} * L over a non-edge {x,y}.
// Assumes K is flag, so lk(w) is the clique complex on N(w).
std::vector<Reduction> reductions(const SimplicialComplex& k) {
  const Graph g = one_skeleton(k);
  std::vector<Reduction> out;
  for (Vertex w : k.vertices()) {
    auto nb = g.neighbors(w);
    for (Vertex x : nb) {
      std::vector<Vertex> missing;
      for (Vertex u : nb)
        if (u != x && !g.adjacent(u, x)) missing.push_back(u);
      if (missing.size() != 1) continue;
      const Vertex y = missing.front();
      if (x > y) continue;  // each pair once; the contraction direction is fixed below
      bool y_cones = std::all_of(nb.begin(), nb.end(), [&](Vertex u) { return u == x || u == y || g.adjacent(u, y); });
      if (!y_cones) continue;
      for (Vertex into : {x, y}) {
        Vertex partner = into == x ? y : x;
        SimplicialComplex reduced = contract_unchecked(k, std::min(w, into), std::max(w, into));
        if (is_flag(reduced).flag) out.push_back({w, into, partner});
      }
    }
  }
  return out;
}

SimplicialComplex apply_reduction(const SimplicialComplex& k, const Reduction& r) {
  return contract_unchecked(k, std::min(r.center, r.into), std::max(r.center, r.into));
}

// Backward search steps: operations applied to the target side.
struct BackStep {
  bool is_subdivision = false;
  Face edge;             // subdivision edge
  Vertex new_vertex = 0;  // subdivision vertex
  Reduction reduction{};
};

SimplicialComplex apply_back(const SimplicialComplex& k, const BackStep& s) {
  return s.is_subdivision ? edge_subdivide(k, s.edge, s.new_vertex) : apply_reduction(k, s.reduction);
}

Vertex image(const VertexMap& phi, Vertex v) {
  auto it = phi.find(v);
  if (it == phi.end()) throw std::logic_error("path transport: vertex missing from isomorphism");
  return it->second;
}

// `chain[i]` is the target-side complex after i back steps; `cur` is isomorphic
// to chain.back(). Appends forward moves that bring `cur` back to chain[0].
SimplicialComplex transport_back(SimplicialComplex cur, const std::vector<SimplicialComplex>& chain,
                                 const std::vector<BackStep>& steps, std::vector<Move>& moves) {
  for (std::size_t i = steps.size(); i-- > 0;) {
    auto phi = find_isomorphism(chain[i + 1], cur);
    if (!phi) throw std::logic_error("path transport: lost isomorphism");
    const BackStep& s = steps[i];
    Move m;
    if (s.is_subdivision) {
      m = Move::contract(image(*phi, s.edge[0]), image(*phi, s.new_vertex));
    } else {
      Vertex survivor = std::min(s.reduction.center, s.reduction.into);
      m = Move::subdivide(image(*phi, survivor), image(*phi, s.reduction.partner), cur.fresh_vertex());
    }
    cur = apply_move(cur, m);
    moves.push_back(m);
  }
  return cur;
}

struct Searcher {
  const SearchBudget& budget;
  PathSearchStats& stats;

  bool charge() {
    if (++stats.states > budget.max_states) {
      stats.budget_exhausted = true;
      return false;
    }
    return true;
  }

  // Depth-first reduction from `k` by exactly `steps` inverse subdivisions.
  bool reduce_to(const SimplicialComplex& k, int steps, const Key& target,
                 std::unordered_set<Key, KeyHash>& dead, std::vector<Reduction>& chain) {
    if (steps == 0) return canonical_form(k).key() == target;
    Key key = canonical_form(k).key();
    if (dead.count(key)) return false;
    if (!charge()) return false;
    for (const auto& r : reductions(k)) {
      chain.push_back(r);
      stats.depth_reached = std::max(stats.depth_reached, static_cast<int>(chain.size()));
      if (reduce_to(apply_reduction(k, r), steps - 1, target, dead, chain)) return true;
      chain.pop_back();
      if (stats.budget_exhausted) return false;
    }
    dead.insert(std::move(key));
    return false;
  }
};

struct ForwardNode {
  int parent = -1;
  Move move;
  int depth = 0;
};

struct BackNode {
  int parent = -1;
  BackStep step;
  int depth = 0;
};

template <class Node>
std::vector<int> lineage(const std::vector<Node>& nodes, int id) {
  std::vector<int> out;
  for (; id > 0; id = nodes[id].parent) out.push_back(id);
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace

PathSearchResult find_move_path(const SimplicialComplex& from, const SimplicialComplex& to,
                                const SearchBudget& budget) {
  PathSearchResult result;
  auto& stats = result.stats;
  if (!is_flag(from).flag || !is_flag(to).flag) throw InvalidMove("find_move_path: inputs must be flag");

  const Key from_key = canonical_form(from).key();
  const Key to_key = canonical_form(to).key();
  auto finish = [&](MoveSequence seq, const SimplicialComplex& end) {
    auto iso = find_isomorphism(end, to);
    if (!iso) throw std::logic_error("find_move_path: endpoint not isomorphic to target");
    result.path = MovePath{std::move(seq), std::move(*iso)};
    return result;
  };
  if (from_key == to_key) return finish(MoveSequence{from, {}}, from);

  Searcher searcher{budget, stats};
  const int n1 = static_cast<int>(from.num_vertices());
  const int n2 = static_cast<int>(to.num_vertices());
  const int gap = std::abs(n1 - n2);
  if (gap > budget.max_depth) return result;

  // Monotone phase: pure subdivisions (or pure contractions) between the ends.
  if (gap > 0) {
    std::unordered_set<Key, KeyHash> dead;
    std::vector<Reduction> chain;
    const bool target_bigger = n2 > n1;
    const SimplicialComplex& big = target_bigger ? to : from;
    if (searcher.reduce_to(big, gap, target_bigger ? from_key : to_key, dead, chain)) {
      MoveSequence seq{from, {}};
      if (!target_bigger) {
        SimplicialComplex cur = from;
        for (const auto& r : chain) {
          seq.moves.push_back(Move::contract(r.center, r.into));
          cur = apply_move(cur, seq.moves.back());
        }
        return finish(std::move(seq), cur);
      }
      std::vector<SimplicialComplex> ys{to};
      std::vector<BackStep> steps;
      for (const auto& r : chain) {
        steps.push_back(BackStep{false, {}, 0, r});
        ys.push_back(apply_reduction(ys.back(), r));
      }
      SimplicialComplex end = transport_back(from, ys, steps, seq.moves);
      return finish(std::move(seq), end);
    }
    if (stats.budget_exhausted) return result;
  }

  // General phase: bidirectional breadth-first search.
  std::vector<ForwardNode> fnodes{ForwardNode{}};
  std::vector<BackNode> bnodes{BackNode{}};
  std::unordered_map<Key, int, KeyHash> fseen{{from_key, 0}};
  std::unordered_map<Key, int, KeyHash> bseen{{to_key, 0}};
  std::vector<std::pair<int, SimplicialComplex>> ffront{{0, from}};
  std::vector<std::pair<int, SimplicialComplex>> bfront{{0, to}};
  int fdepth = 0;
  int bdepth = 0;

  auto forward_path = [&](int fid) {
    MoveSequence seq{from, {}};
    for (int id : lineage(fnodes, fid)) seq.moves.push_back(fnodes[id].move);
    return seq;
  };
  auto meet = [&](int fid, const SimplicialComplex& fcomplex, int bid) {
    MoveSequence seq = forward_path(fid);
    std::vector<SimplicialComplex> ys{to};
    std::vector<BackStep> steps;
    for (int id : lineage(bnodes, bid)) {
      steps.push_back(bnodes[id].step);
      ys.push_back(apply_back(ys.back(), steps.back()));
    }
    SimplicialComplex end = transport_back(fcomplex, ys, steps, seq.moves);
    return finish(std::move(seq), end);
  };

  while (fdepth + bdepth < budget.max_depth && !ffront.empty() && !bfront.empty()) {
    const bool expand_forward = ffront.size() <= bfront.size();
    std::vector<std::pair<int, SimplicialComplex>> next;
    if (expand_forward) {
      ++fdepth;
      for (const auto& [id, k] : ffront) {
        std::vector<Move> candidates;
        for (const auto& e : edges_of(k)) {
          candidates.push_back(Move::subdivide(e[0], e[1], k.fresh_vertex()));
          if (flag_contractible(k, e)) candidates.push_back(Move::contract(e[0], e[1]));
        }
        for (const auto& m : candidates) {
          SimplicialComplex child = apply_move(k, m);
          Key key = canonical_form(child).key();
          if (fseen.count(key)) continue;
          if (!searcher.charge()) return result;
          int cid = static_cast<int>(fnodes.size());
          fnodes.push_back({id, m, fdepth});
          fseen.emplace(key, cid);
          if (auto it = bseen.find(key); it != bseen.end()) return meet(cid, child, it->second);
          next.emplace_back(cid, std::move(child));
        }
      }
      ffront = std::move(next);
    } else {
      ++bdepth;
      for (const auto& [id, k] : bfront) {
        std::vector<BackStep> candidates;
        for (const auto& e : edges_of(k)) candidates.push_back(BackStep{true, e, k.fresh_vertex(), {}});
        for (const auto& r : reductions(k)) candidates.push_back(BackStep{false, {}, 0, r});
        for (const auto& s : candidates) {
          SimplicialComplex child = apply_back(k, s);
          Key key = canonical_form(child).key();
          if (bseen.count(key)) continue;
          if (!searcher.charge()) return result;
          int cid = static_cast<int>(bnodes.size());
          bnodes.push_back({id, s, bdepth});
          bseen.emplace(key, cid);
          if (auto it = fseen.find(key); it != fseen.end()) {
            SimplicialComplex fcomplex = from;
            for (int fid : lineage(fnodes, it->second)) fcomplex = apply_move(fcomplex, fnodes[fid].move);
            return meet(it->second, fcomplex, cid);
          }
          next.emplace_back(cid, std::move(child));
        }
      }
      bfront = std::move(next);
    }
    stats.depth_reached = std::max(stats.depth_reached, fdepth + bdepth);
  }
  return result;
}

}  // namespace flagcx
