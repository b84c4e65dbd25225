// JSON renderings of analysis results.
#pragma once

#include "flagcx/decomposition.hpp"
#include "flagcx/homology.hpp"
#include "flagcx/io.hpp"
#include "flagcx/vectors.hpp"

namespace flagcx {

Json gamma_to_json(const GammaVector& g);
Json cm_report_to_json(const CMReport& r);
Json doubly_cm_report_to_json(const DoublyCMReport& r);
Json ast_link_report_to_json(const AstLinkReport& r);
Json sphere_certificate_to_json(const SphereCertificate& c);
Json remainder_report_to_json(const RemainderReport& r);
Json cross_polytope_report_to_json(const CrossPolytopeBoundReport& r);
Json path_expansion_to_json(const PathExpansion& p);

/// {"d", "strategy", "complexes": [...], "nodes": [{"m","r","power":[r,2m-2r],"sign","kind",
/// "parent","terms":[{"sign","complex","face","poly"}],"splits",...,"children"}]}
Json tree_to_json(const DecompTree& tree);

Json boolean_result_to_json(const BooleanSearchResult& r);
Json audit_to_json(const AuditReport& r);

}  // namespace flagcx
