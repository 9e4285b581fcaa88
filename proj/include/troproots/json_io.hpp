#ifndef TROPROOTS_JSON_IO_HPP
#define TROPROOTS_JSON_IO_HPP

#include "troproots/cone_complex.hpp"
#include "troproots/enumeration.hpp"
#include "troproots/flow_poset.hpp"
#include "troproots/tropical.hpp"

#include <json.hpp>

#include <string>

namespace troproots {

using json = nlohmann::ordered_json;

json to_json(const Graph& g);
Graph graph_from_json(const json& j);

json to_json(const CoefficientGroup& group);
CoefficientGroup group_from_json(const json& j);

json to_json(const GroupElement& a);
GroupElement element_from_json(const CoefficientGroup& group, const json& j);

json to_json(const Graph& g, const Flow& f);
Flow flow_from_json(const CoefficientGroup& group, const json& j);

json to_json(const GraphPoset& poset);
json to_json(const FlowPoset& poset);

json to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const json& j);

json to_json(const TropicalCurve& c, const TropicalDivisor& D);
TropicalDivisor divisor_from_json(const TropicalCurve& c, const json& j);

json to_json(const ConeComplex& cc);

// Hasse diagram with rank layers; one node per element, one arc per cover.
std::string poset_to_dot(const GraphPoset& poset);
std::string poset_to_dot(const FlowPoset& poset);

// Dispatches on the top-level shape of a poset/graph JSON document.
std::string json_to_dot(const json& j);

} // namespace troproots

#endif
