#pragma once

#include <string_view>

#include "json.hpp"

#include "ggraph/beissinger.hpp"
#include "ggraph/gelfand.hpp"
#include "ggraph/laurent.hpp"
#include "ggraph/perm.hpp"
#include "ggraph/tableau.hpp"
#include "ggraph/wgraph.hpp"

namespace ggraph {

using Json = nlohmann::json;

// Malformed text or structure raises ParseError; a well-formed document that
// violates an invariant (e.g. non-increasing rows) raises PreconditionError.
Json parse_json(std::string_view text);

Json to_json(const Permutation& w);
Json to_json(const Tableau& t);
Json to_json(const LaurentPoly& p);
Json to_json(const Partition& p);
Json to_json(const WGraph& g);
Json to_json(const PsiStats& s);
Json to_json(const ClassifyReport& r);
// {variant, n, vertices, columns, mu}
Json basis_to_json(const GelfandModule& module, const CanonicalBasis& basis);
// Involution as {"oneline": ..., "cycles": ...}.
Json involution_json(const Involution& y);

Tableau tableau_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
WGraph wgraph_from_json(const Json& j);

}  // namespace ggraph
