#include "flagcx/reports.hpp"

namespace flagcx {

namespace {

Json hypothesis_to_json(const Hypothesis& h) { return Json{{"certified", h.certified}, {"basis", h.basis}}; }

Json field_to_json(const FieldSpec& f) { return Json{{"characteristic", f.characteristic}, {"name", f.name()}}; }

}  // namespace

Json gamma_to_json(const GammaVector& g) {
  Json out = Json::array();
  for (const auto& c : g.gammas) out.push_back(integer_to_json(c));
  return out;
}

Json cm_report_to_json(const CMReport& r) {
  Json out{{"is_cm", r.is_cm}, {"field", field_to_json(r.field)}};
  if (r.witness) out["witness"] = Json{{"face", face_to_json(r.witness->face)}, {"degree", r.witness->degree}};
  return out;
}

Json doubly_cm_report_to_json(const DoublyCMReport& r) {
  Json out{{"is_doubly_cm", r.is_doubly_cm}, {"complex", cm_report_to_json(r.complex)}, {"field", field_to_json(r.field)}};
  if (r.failing_vertex) {
    out["failing_vertex"] = *r.failing_vertex;
    out["dimension_drop"] = r.dimension_drop;
    if (r.antistar) out["antistar"] = cm_report_to_json(*r.antistar);
  }
  return out;
}

Json ast_link_report_to_json(const AstLinkReport& r) {
  Json out{{"vertex", r.vertex},
           {"hypothesis", r.hypothesis},
           {"h_link", polynomial_to_json(r.h_link)},
           {"h_antistar", polynomial_to_json(r.h_antistar)},
           {"split_holds", r.split_holds},
           {"inequality_holds", r.inequality_holds}};
  if (r.failing_index) out["failing_index"] = *r.failing_index;
  return out;
}

Json sphere_certificate_to_json(const SphereCertificate& c) {
  return Json{{"status", to_string(c.status)}, {"reason", c.reason}};
}

Json remainder_report_to_json(const RemainderReport& r) {
  Json chain = Json::array();
  for (const auto& s : r.chain)
    chain.push_back({{"edge", face_to_json(s.edge)}, {"remainder", polynomial_to_json(s.remainder)}});
  return Json{{"base", face_to_json(r.base)},
              {"approx", polynomial_to_json(r.approx)},
              {"remainder", polynomial_to_json(r.remainder)},
              {"nonnegative", r.nonnegative},
              {"chain", std::move(chain)},
              {"chain_nonnegative", r.chain_nonnegative},
              {"hypothesis", hypothesis_to_json(r.hypothesis)},
              {"violation", r.violation()}};
}

Json cross_polytope_report_to_json(const CrossPolytopeBoundReport& r) {
  Json excess = Json::array();
  for (const auto& e : r.excess) excess.push_back(integer_to_json(e));
  return Json{{"d", r.d},
              {"h", polynomial_to_json(r.h)},
              {"excess", std::move(excess)},
              {"holds", r.holds},
              {"equality", r.equality},
              {"strict_somewhere", r.strict_somewhere},
              {"gamma1", integer_to_json(r.gamma1)},
              {"hypothesis", hypothesis_to_json(r.hypothesis)},
              {"violation", r.violation()}};
}

Json path_expansion_to_json(const PathExpansion& p) {
  Json terms = Json::array();
  for (const auto& t : p.terms)
    terms.push_back({{"sign", t.sign},
                     {"complex", complex_to_json(t.complex)},
                     {"edge", face_to_json(t.edge)},
                     {"poly", polynomial_to_json(t.poly)}});
  return Json{{"terms", std::move(terms)},
              {"signed_sum", polynomial_to_json(p.signed_sum)},
              {"positive", p.positive},
              {"negative", p.negative}};
}

Json tree_to_json(const DecompTree& tree) {
  Json complexes = Json::array();
  for (const auto& k : tree.complexes) complexes.push_back(complex_to_json(k));
  Json nodes = Json::array();
  for (const auto& n : tree.nodes) {
    Json terms = Json::array();
    for (const auto& t : n.terms) {
      Json jt{{"sign", t.sign}, {"poly", polynomial_to_json(t.poly)}};
      if (t.attributed()) {
        jt["complex"] = t.complex_id;
        jt["face"] = face_to_json(t.face);
      } else {
        jt["complex"] = nullptr;
      }
      terms.push_back(std::move(jt));
    }
    Json splits = Json::array();
    for (const auto& s : n.splits)
      splits.push_back({{"term", s.term},
                        {"edge", face_to_json(s.edge)},
                        {"attributed", s.attributed},
                        {"path_length", s.path_length},
                        {"states", s.stats.states},
                        {"budget_exhausted", s.stats.budget_exhausted}});
    Polynomial bracket = n.bracket();
    nodes.push_back({{"m", n.m},
                     {"r", n.r},
                     {"power", {n.r, 2 * n.m - 2 * n.r}},
                     {"sign", n.sign},
                     {"kind", to_string(n.kind)},
                     {"parent", n.parent},
                     {"terms", std::move(terms)},
                     {"bracket", polynomial_to_json(bracket)},
                     {"bracket_nonnegative", nonnegative(bracket)},
                     {"positive_terms", n.positive_terms()},
                     {"negative_terms", n.negative_terms()},
                     {"splits", std::move(splits)},
                     {"children", n.children}});
  }
  return Json{{"d", tree.d},
              {"strategy", to_string(tree.strategy)},
              {"depth", tree.depth()},
              {"complexes", std::move(complexes)},
              {"nodes", std::move(nodes)}};
}

Json boolean_result_to_json(const BooleanSearchResult& r) {
  Json out{{"status", to_string(r.status)}, {"reason", r.reason}, {"nodes", r.nodes}, {"verified", r.verified}};
  if (r.gamma) out["gamma"] = gamma_to_json(*r.gamma);
  if (r.failing_index) out["failing_index"] = *r.failing_index;
  if (r.seed) {
    Json faces = Json::array();
    for (const auto& f : all_faces(r.seed->s)) faces.push_back(face_to_json(f));
    out["seed"] = Json{{"d", r.seed->d}, {"faces", std::move(faces)}};
  }
  return out;
}

Json audit_to_json(const AuditReport& r) {
  Json edges = Json::array();
  for (const auto& e : r.edges)
    edges.push_back({{"edge", face_to_json(e.edge)},
                     {"h_link", polynomial_to_json(e.h_link)},
                     {"local", boolean_result_to_json(e.local)},
                     {"status_difference", integer_to_json(e.status_difference)}});
  Json pairs = Json::array();
  for (const auto& p : r.pairs)
    pairs.push_back({{"e1", face_to_json(p.e1)},
                     {"e2", face_to_json(p.e2)},
                     {"intersection_dimension", p.intersection_dimension},
                     {"intersection_is_link_of_union", p.intersection_is_link_of_union},
                     {"conflict", integer_to_json(p.conflict)}});
  return Json{{"d", r.d},
              {"global", boolean_result_to_json(r.global)},
              {"edges", std::move(edges)},
              {"pairs", std::move(pairs)},
              {"all_local_found", r.all_local_found},
              {"max_status_difference", integer_to_json(r.max_status_difference)},
              {"max_conflict", integer_to_json(r.max_conflict)}};
}

}  // namespace flagcx
