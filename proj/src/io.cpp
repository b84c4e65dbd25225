#include "flagcx/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace flagcx {

Json face_to_json(const Face& f) { return Json(f.vertices()); }

Json complex_to_json(const SimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) facets.push_back(face_to_json(f));
  return Json{{"vertices", k.vertices()}, {"facets", std::move(facets)}};
}

SimplicialComplex complex_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("facets")) throw FormatError("complex JSON needs a \"facets\" array");
    std::set<Vertex> declared;
    bool have_vertices = j.contains("vertices");
    if (have_vertices)
      for (const auto& v : j.at("vertices")) declared.insert(v.get<Vertex>());
    std::vector<Face> faces;
    std::set<Vertex> used;
    for (const auto& f : j.at("facets")) {
      auto vs = f.get<std::vector<Vertex>>();
      for (Vertex v : vs) {
        if (have_vertices && !declared.count(v))
          throw FormatError("facet uses undeclared vertex " + std::to_string(v));
        used.insert(v);
      }
      faces.emplace_back(std::move(vs));
    }
    if (have_vertices && used != declared) throw FormatError("declared vertex does not occur in any facet");
    return SimplicialComplex::from_facets(std::move(faces));
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed complex JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("invalid complex: ") + e.what());
  }
}

std::string dump_complex(const SimplicialComplex& k) { return complex_to_json(k).dump(); }

SimplicialComplex parse_complex(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw FormatError("malformed JSON");
  return complex_from_json(j);
}

SimplicialComplex read_complex(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str());
}

SimplicialComplex read_complex_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_complex(in);
}

Json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(v.convert_to<std::int64_t>());
  return Json(v.str());
}

Json polynomial_to_json(const Polynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(integer_to_json(c));
  return out;
}

Polynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw FormatError("polynomial must be a coefficient array");
  std::vector<Integer> cs;
  for (const auto& c : j) {
    if (c.is_number_integer()) cs.emplace_back(c.get<std::int64_t>());
    else if (c.is_string()) cs.emplace_back(c.get<std::string>());
    else throw FormatError("polynomial coefficient must be an integer");
  }
  return Polynomial(std::move(cs));
}

Json move_sequence_to_json(const MoveSequence& seq) {
  Json moves = Json::array();
  for (const auto& m : seq.moves)
    moves.push_back({{"kind", m.kind == MoveKind::Subdivide ? "subdivide" : "contract"},
                     {"edge", m.edge.vertices()},
                     {"vertex", m.vertex}});
  return Json{{"start", complex_to_json(seq.start)}, {"moves", std::move(moves)}};
}

MoveSequence move_sequence_from_json(const Json& j) {
  try {
    MoveSequence seq{complex_from_json(j.at("start")), {}};
    for (const auto& m : j.at("moves")) {
      auto kind = m.at("kind").get<std::string>();
      auto edge = m.at("edge").get<std::vector<Vertex>>();
      if (edge.size() != 2) throw FormatError("move edge must have two vertices");
      Move mv;
      if (kind == "subdivide") mv.kind = MoveKind::Subdivide;
      else if (kind == "contract") mv.kind = MoveKind::Contract;
      else throw FormatError("unknown move kind " + kind);
      mv.edge = Face(std::move(edge));
      mv.vertex = m.at("vertex").get<Vertex>();
      seq.moves.push_back(std::move(mv));
    }
    return seq;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed move sequence JSON: ") + e.what());
  }
}

}  // namespace flagcx
