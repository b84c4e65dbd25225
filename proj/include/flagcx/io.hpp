// JSON encodings of complexes, polynomials and move sequences.
#pragma once

#include "flagcx/complex.hpp"
#include "flagcx/moves.hpp"
#include "flagcx/polynomial.hpp"

#include <json.hpp>

#include <istream>
#include <stdexcept>
#include <string>

namespace flagcx {

using Json = nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"vertices":[...],"facets":[[...],...]}, vertices and facets sorted.
Json complex_to_json(const SimplicialComplex& k);
/// Throws FormatError on malformed input or on facets using undeclared vertices.
SimplicialComplex complex_from_json(const Json& j);

/// Canonical single-line text form of complex_to_json.
std::string dump_complex(const SimplicialComplex& k);
SimplicialComplex parse_complex(const std::string& text);
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);

/// Coefficient array; entries outside the int64 range become decimal strings.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json integer_to_json(const Integer& v);

/// {"start": complex, "moves":[{"kind":"subdivide","edge":[a,b],"vertex":v},...]}
Json move_sequence_to_json(const MoveSequence& seq);
MoveSequence move_sequence_from_json(const Json& j);

Json face_to_json(const Face& f);

}  // namespace flagcx
