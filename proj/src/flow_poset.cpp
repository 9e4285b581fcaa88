#include "troproots/flow_poset.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace troproots {

Flow canonical_flow(const Graph& g, const std::vector<GraphAutomorphism>& auts, const Flow& f)
{
    (void)g;
    const Flow* best = nullptr;
    std::vector<long long> best_code;
    std::vector<Flow> orbit;
    orbit.reserve(auts.size());
    for (const auto& aut : auts)
        orbit.push_back(act_on_flow(aut, f));
    for (const Flow& candidate : orbit) {
        auto code = candidate.encode();
        if (!best || code < best_code) {
            best = &candidate;
            best_code = std::move(code);
        }
    }
    return *best;
}

namespace {

// Transport a flow along an isomorphism: (iso . f)(e') = f(iso^-1(e')).
Flow transport_flow(const GraphIso& iso, const Flow& f)
{
    return act_on_flow(iso, f);
}

} // namespace

int FlowPoset::dimension() const
{
    int dim = 0;
    for (const auto& el : elements)
        dim = std::max(dim, graphs.elements[el.graph_index].num_edges());
    return dim;
}

int FlowPoset::find(int graph_index, const Flow& f) const
{
    const Graph& g = graphs.elements[graph_index];
    Flow canon = canonical_flow(g, automorphism_group(g), f);
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].graph_index == graph_index && elements[i].flow == canon)
            return static_cast<int>(i);
    return -1;
}

std::vector<int> FlowPoset::fiber_over_graph(const Graph& g) const
{
    int gi = graphs.find(g);
    std::vector<int> out;
    if (gi < 0)
        return out;
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i].graph_index == gi)
            out.push_back(static_cast<int>(i));
    return out;
}

FlowPoset build_flow_poset(int genus, int legs, const CoefficientGroup& group,
                           const RamificationSequence& R)
{
    if (!group.is_finite())
        throw std::invalid_argument("flow posets are built for finite coefficient groups");
    if (R.group() != group)
        throw std::invalid_argument("ramification sequence group mismatch");
    if (!R.degree(genus).is_zero())
        throw std::invalid_argument("ramification sequence must have degree zero");

    FlowPoset poset;
    poset.group = group;
    poset.ramification = R;
    poset.genus = genus;
    poset.legs = legs;
    poset.graphs = build_graph_poset(genus, legs);

    std::vector<std::vector<GraphAutomorphism>> auts;
    auts.reserve(poset.graphs.elements.size());
    for (const Graph& g : poset.graphs.elements)
        auts.push_back(automorphism_group(g));

    // Fibers: Aut-orbit representatives of F(Gamma, D_{R,Gamma}).
    std::map<std::pair<int, std::vector<long long>>, int> element_index;
    for (size_t gi = 0; gi < poset.graphs.elements.size(); ++gi) {
        const Graph& g = poset.graphs.elements[gi];
        GraphDivisor D = ramification_divisor(R, g);
        for (const Flow& f : enumerate_flow_fiber(g, D)) {
            Flow canon = canonical_flow(g, auts[gi], f);
            auto key = std::make_pair(static_cast<int>(gi), canon.encode());
            if (!element_index.count(key)) {
                element_index[key] = static_cast<int>(poset.elements.size());
                poset.elements.push_back({static_cast<int>(gi), canon});
            }
        }
    }

    // Covers: contract each edge of each element, recanonicalize.
    std::set<std::pair<int, int>> seen_pairs;
    for (size_t ei = 0; ei < poset.elements.size(); ++ei) {
        const auto& el = poset.elements[ei];
        const Graph& g = poset.graphs.elements[el.graph_index];
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Specialization spec = contract(g, {e});
            Flow pushed = pushforward_flow(spec, el.flow);
            CanonicalForm form = canonical_form(spec.target);
            int gj = poset.graphs.find(form.representative);
            Flow on_rep = transport_flow(form.to_representative, pushed);
            Flow canon = canonical_flow(poset.graphs.elements[gj],
                                        automorphism_group(poset.graphs.elements[gj]), on_rep);
            auto key = std::make_pair(gj, canon.encode());
            int ej = element_index.at(key);
            if (!seen_pairs.insert({static_cast<int>(ei), ej}).second)
                continue;
            PosetCover cover;
            cover.upper = static_cast<int>(ei);
            cover.lower = ej;
            cover.contracted_in_upper = e;
            std::vector<EdgeId> target_to_source(spec.target.num_edges(), -1);
            for (EdgeId f = 0; f < g.num_edges(); ++f)
                if (spec.edge_map[f] >= 0)
                    target_to_source[spec.edge_map[f]] = f;
            GraphIso from_rep = form.to_representative.inverse();
            cover.edge_corr.resize(spec.target.num_edges());
            for (EdgeId f = 0; f < spec.target.num_edges(); ++f)
                cover.edge_corr[f] = target_to_source[from_rep.edge_perm[f]];
            poset.covers.push_back(std::move(cover));
        }
    }
    return poset;
}

FlowPosetMap coefficient_change_poset(const Homomorphism& f, const FlowPoset& source)
{
    if (f.domain() != source.group)
        throw std::invalid_argument("homomorphism domain does not match the poset group");

    RamificationSequence fR;
    for (const auto& a : source.ramification.entries)
        fR.entries.push_back(f.apply(a));
    fR.ell = f.apply(source.ramification.ell);

    FlowPosetMap out;
    out.target = build_flow_poset(source.genus, source.legs, f.codomain(), fR);
    out.element_map.reserve(source.elements.size());
    for (const auto& el : source.elements) {
        const Graph& g = source.graphs.elements[el.graph_index];
        std::vector<GroupElement> values;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            values.push_back(f.apply(el.flow.value(e)));
        // Graph posets for equal (g, n) share canonical representatives, so
        // the graph index carries over.
        int idx = out.target.find(el.graph_index, Flow(f.codomain(), std::move(values)));
        if (idx < 0)
            throw std::logic_error("coefficient change left the target poset");
        out.element_map.push_back(idx);
    }

    std::set<int> image(out.element_map.begin(), out.element_map.end());
    out.injective = image.size() == out.element_map.size();
    out.surjective = image.size() == out.target.elements.size();
    return out;
}

} // namespace troproots
