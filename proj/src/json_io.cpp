#include "troproots/json_io.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace troproots {

json to_json(const Graph& g)
{
    json vertices = json::array();
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        vertices.push_back({{"id", v}, {"weight", g.weight(v)}});
    json edges = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        edges.push_back({{"id", e}, {"ends", {g.src(e), g.dst(e)}}});
    json legs = json::array();
    for (const Leg& l : g.legs())
        legs.push_back({{"label", l.label}, {"vertex", l.vertex}});
    return {{"vertices", vertices}, {"edges", edges}, {"legs", legs}};
}

Graph graph_from_json(const json& j)
{
    std::vector<int> weights(j.at("vertices").size(), 0);
    for (const auto& v : j.at("vertices"))
        weights.at(v.at("id").get<int>()) = v.at("weight").get<int>();
    std::vector<std::pair<VertexId, VertexId>> ends(j.at("edges").size());
    for (const auto& e : j.at("edges"))
        ends.at(e.at("id").get<int>()) = {e.at("ends").at(0).get<int>(),
                                          e.at("ends").at(1).get<int>()};
    std::vector<Leg> legs;
    for (const auto& l : j.at("legs"))
        legs.push_back({l.at("label").get<int>(), l.at("vertex").get<int>()});
    return Graph(std::move(weights), std::move(ends), std::move(legs));
}

json to_json(const CoefficientGroup& group)
{
    return {{"free_rank", group.free_rank()}, {"torsion", group.torsion_moduli()}};
}

CoefficientGroup group_from_json(const json& j)
{
    return CoefficientGroup(j.at("free_rank").get<int>(),
                            j.at("torsion").get<std::vector<long long>>());
}

json to_json(const GroupElement& a)
{
    return {{"free", a.free_part()}, {"torsion", a.torsion_part()}};
}

GroupElement element_from_json(const CoefficientGroup& group, const json& j)
{
    return GroupElement(group, j.at("free").get<std::vector<long long>>(),
                        j.at("torsion").get<std::vector<long long>>());
}

json to_json(const Graph& g, const Flow& f)
{
    json orientation = json::array();
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        orientation.push_back({{"edge", e}, {"source_halfedge", Graph::half(e)}});
    json values = json::array();
    for (EdgeId e = 0; e < f.num_edges(); ++e)
        values.push_back({{"edge", e}, {"value", to_json(f.value(e))}});
    return {{"group", to_json(f.group())}, {"orientation", orientation}, {"values", values}};
}

Flow flow_from_json(const CoefficientGroup& group, const json& j)
{
    std::vector<GroupElement> values(j.at("values").size(), GroupElement::zero(group));
    for (const auto& v : j.at("values"))
        values.at(v.at("edge").get<int>()) = element_from_json(group, v.at("value"));
    return Flow(group, std::move(values));
}

namespace {

json covers_to_json(const std::vector<PosetCover>& covers)
{
    json pairs = json::array();
    json details = json::array();
    for (const PosetCover& c : covers) {
        pairs.push_back({c.upper, c.lower});
        details.push_back({{"contracted", c.contracted_in_upper}, {"edge_corr", c.edge_corr}});
    }
    return {{"covers", pairs}, {"cover_edges", details}};
}

} // namespace

json to_json(const GraphPoset& poset)
{
    json elements = json::array();
    json ranks = json::array();
    for (const Graph& g : poset.elements) {
        elements.push_back(to_json(g));
        ranks.push_back(g.num_edges());
    }
    json c = covers_to_json(poset.covers);
    return {{"genus", poset.genus}, {"legs", poset.legs},     {"elements", elements},
            {"ranks", ranks},       {"covers", c["covers"]},  {"cover_edges", c["cover_edges"]}};
}

json to_json(const FlowPoset& poset)
{
    json elements = json::array();
    json ranks = json::array();
    for (const auto& el : poset.elements) {
        const Graph& g = poset.graphs.elements[el.graph_index];
        elements.push_back({{"graph", el.graph_index}, {"flow", to_json(g, el.flow)}});
        ranks.push_back(g.num_edges());
    }
    json ram = json::array();
    for (const auto& a : poset.ramification.entries)
        ram.push_back(to_json(a));
    json c = covers_to_json(poset.covers);
    return {{"genus", poset.genus},
            {"legs", poset.legs},
            {"group", to_json(poset.group)},
            {"ramification", {{"entries", ram}, {"ell", to_json(poset.ramification.ell)}}},
            {"graphs", to_json(poset.graphs)},
            {"elements", elements},
            {"ranks", ranks},
            {"covers", c["covers"]},
            {"cover_edges", c["cover_edges"]}};
}

json to_json(const TropicalCurve& c)
{
    json out = to_json(c.model);
    json lengths = json::array();
    for (EdgeId e = 0; e < c.model.num_edges(); ++e)
        lengths.push_back({{"edge", e},
                           {"num", c.lengths[e].numerator()},
                           {"den", c.lengths[e].denominator()}});
    out["lengths"] = lengths;
    return out;
}

TropicalCurve curve_from_json(const json& j)
{
    Graph g = graph_from_json(j);
    std::vector<Rational> lengths(g.num_edges(), Rational(1));
    for (const auto& l : j.at("lengths"))
        lengths.at(l.at("edge").get<int>()) =
            Rational(l.at("num").get<long long>(), l.at("den").get<long long>());
    return make_curve(std::move(g), std::move(lengths));
}

json to_json(const TropicalCurve& c, const TropicalDivisor& D)
{
    (void)c;
    json out = json::array();
    for (const auto& [p, coeff] : D.support) {
        json point;
        if (p.on_edge)
            point = {{"edge", p.id}, {"num", p.offset.numerator()}, {"den", p.offset.denominator()}};
        else
            point = {{"vertex", p.id}};
        out.push_back({{"point", point}, {"coeff", coeff}});
    }
    return out;
}

TropicalDivisor divisor_from_json(const TropicalCurve& c, const json& j)
{
    TropicalDivisor D;
    for (const auto& entry : j) {
        const json& p = entry.at("point");
        long long coeff = entry.at("coeff").get<long long>();
        if (p.contains("vertex"))
            D.add(CurvePoint::vertex(p.at("vertex").get<int>()), coeff);
        else
            D.add(CurvePoint::interior(c, p.at("edge").get<int>(),
                                       Rational(p.at("num").get<long long>(),
                                                p.at("den").get<long long>())),
                  coeff);
    }
    return D;
}

json to_json(const ConeComplex& cc)
{
    json dims = json::array();
    for (size_t i = 0; i < cc.poset.elements.size(); ++i)
        dims.push_back(cc.cone_dimension(static_cast<int>(i)));
    json ram = json::array();
    for (const auto& a : cc.ramification.entries)
        ram.push_back(to_json(a));
    return {{"r", cc.r},
            {"base_group", to_json(cc.base_group)},
            {"ramification", {{"entries", ram}, {"ell", to_json(cc.ramification.ell)}}},
            {"poset", to_json(cc.poset)},
            {"cone_dimensions", dims}};
}

namespace {

std::string dot_of_layers(const std::vector<int>& ranks, const std::vector<std::string>& labels,
                          const json& covers)
{
    std::ostringstream out;
    out << "digraph poset {\n  rankdir=BT;\n  node [shape=box];\n";
    for (size_t i = 0; i < labels.size(); ++i)
        out << "  n" << i << " [label=\"" << labels[i] << "\"];\n";
    int max_rank = 0;
    for (int r : ranks)
        max_rank = std::max(max_rank, r);
    for (int r = 0; r <= max_rank; ++r) {
        out << "  { rank=same;";
        for (size_t i = 0; i < ranks.size(); ++i)
            if (ranks[i] == r)
                out << " n" << i << ";";
        out << " }\n";
    }
    for (const auto& c : covers)
        out << "  n" << c.at(1).get<int>() << " -> n" << c.at(0).get<int>() << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace

std::string poset_to_dot(const GraphPoset& poset)
{
    return json_to_dot(to_json(poset));
}

std::string poset_to_dot(const FlowPoset& poset)
{
    return json_to_dot(to_json(poset));
}

std::string json_to_dot(const json& j)
{
    if (j.contains("poset"))
        return json_to_dot(j.at("poset"));
    if (j.contains("elements") && j.contains("covers")) {
        std::vector<int> ranks = j.at("ranks").get<std::vector<int>>();
        std::vector<std::string> labels;
        for (size_t i = 0; i < j.at("elements").size(); ++i) {
            const json& el = j.at("elements").at(i);
            std::ostringstream label;
            label << i << " (rank " << ranks[i] << ")";
            if (el.contains("graph"))
                label << " graph " << el.at("graph").get<int>();
            labels.push_back(label.str());
        }
        return dot_of_layers(ranks, labels, j.at("covers"));
    }
    if (j.contains("vertices")) {
        // A single graph document.
        return to_dot(graph_from_json(j));
    }
    throw std::invalid_argument("unrecognized JSON document shape");
}

} // namespace troproots
