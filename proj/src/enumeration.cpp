#include "troproots/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace troproots {

namespace {

// Split vertex v of g into v and a new vertex joined by a new edge,
// moving the chosen half-edges, legs and weight to the new vertex.
// Returns the graph, or nothing if an endpoint goes unstable.
std::optional<Graph> split_vertex(const Graph& g, VertexId v, int moved_weight,
                                  const std::vector<HalfEdge>& moved_halves,
                                  const std::vector<int>& moved_leg_labels)
{
    int nv = g.num_vertices();
    VertexId fresh = nv;
    std::vector<int> weights = g.weights();
    weights[v] -= moved_weight;
    weights.push_back(moved_weight);

    std::vector<bool> moved(2 * g.num_edges(), false);
    for (HalfEdge h : moved_halves)
        moved[h] = true;

    std::vector<std::pair<VertexId, VertexId>> ends;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        VertexId a = moved[2 * e] ? fresh : g.src(e);
        VertexId b = moved[2 * e + 1] ? fresh : g.dst(e);
        ends.emplace_back(a, b);
    }
    ends.emplace_back(v, fresh);

    std::set<int> moved_labels(moved_leg_labels.begin(), moved_leg_labels.end());
    std::vector<Leg> legs;
    for (const Leg& leg : g.legs())
        legs.push_back({leg.label, moved_labels.count(leg.label) && leg.vertex == v ? fresh : leg.vertex});

    Graph out(std::move(weights), std::move(ends), std::move(legs));
    auto stable_at = [&](VertexId u) {
        return 2 * out.weight(u) - 2 + out.valence(u)
                   + static_cast<int>(out.leg_labels_at(u).size())
               > 0;
    };
    if (!stable_at(v) || !stable_at(fresh))
        return std::nullopt;
    return out;
}

void for_each_subset(int n, const std::function<void(const std::vector<int>&)>& visit)
{
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> subset;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i))
                subset.push_back(i);
        visit(subset);
    }
}

// All graphs obtained from g by one uncontraction move (the inverses of
// single-edge contractions): vertex splits and weight-to-loop trades.
std::vector<Graph> uncontractions(const Graph& g)
{
    std::vector<Graph> out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        // weight w >= 1 becomes w - 1 plus a loop.
        if (g.weight(v) >= 1) {
            std::vector<int> weights = g.weights();
            weights[v] -= 1;
            auto ends = [&] {
                std::vector<std::pair<VertexId, VertexId>> e;
                for (EdgeId i = 0; i < g.num_edges(); ++i)
                    e.emplace_back(g.src(i), g.dst(i));
                e.emplace_back(v, v);
                return e;
            }();
            out.push_back(Graph(std::move(weights), std::move(ends), g.legs()));
        }
        // Vertex split across a new edge.
        std::vector<HalfEdge> halves;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (g.src(e) == v)
                halves.push_back(2 * e);
            if (g.dst(e) == v)
                halves.push_back(2 * e + 1);
        }
        std::vector<int> labels = g.leg_labels_at(v);
        for_each_subset(static_cast<int>(halves.size()), [&](const std::vector<int>& hsub) {
            std::vector<HalfEdge> moved_halves;
            for (int i : hsub)
                moved_halves.push_back(halves[i]);
            for_each_subset(static_cast<int>(labels.size()), [&](const std::vector<int>& lsub) {
                std::vector<int> moved_labels;
                for (int i : lsub)
                    moved_labels.push_back(labels[i]);
                for (int w = 0; w <= g.weight(v); ++w) {
                    auto split = split_vertex(g, v, w, moved_halves, moved_labels);
                    if (split)
                        out.push_back(std::move(*split));
                }
            });
        });
    }
    return out;
}

} // namespace

int GraphPoset::dimension() const
{
    int dim = 0;
    for (const Graph& g : elements)
        dim = std::max(dim, g.num_edges());
    return dim;
}

int GraphPoset::find(const Graph& g) const
{
    CanonicalKey key = canonical_form(g).key;
    for (size_t i = 0; i < elements.size(); ++i)
        if (canonical_form(elements[i]).key == key)
            return static_cast<int>(i);
    return -1;
}

std::vector<Graph> enumerate_stable_graphs(int genus, int legs)
{
    if (2 * genus - 2 + legs <= 0)
        throw std::invalid_argument("need 2g - 2 + n > 0");

    std::vector<Leg> leg_list;
    for (int j = 1; j <= legs; ++j)
        leg_list.push_back({j, 0});
    Graph seed({genus}, {}, leg_list);

    int max_rank = 3 * genus - 3 + legs;
    std::map<CanonicalKey, Graph> found;
    found.emplace(canonical_form(seed).key, canonical_form(seed).representative);

    std::vector<Graph> frontier{found.begin()->second};
    for (int rank = 1; rank <= max_rank; ++rank) {
        std::vector<Graph> next;
        for (const Graph& g : frontier) {
            for (const Graph& candidate : uncontractions(g)) {
                CanonicalForm form = canonical_form(candidate);
                if (found.emplace(form.key, form.representative).second)
                    next.push_back(form.representative);
            }
        }
        frontier = std::move(next);
    }

    std::vector<Graph> out;
    for (auto& [key, g] : found)
        out.push_back(g);
    std::stable_sort(out.begin(), out.end(),
                     [](const Graph& a, const Graph& b) { return a.num_edges() < b.num_edges(); });
    return out;
}

GraphPoset build_graph_poset(int genus, int legs)
{
    GraphPoset poset;
    poset.genus = genus;
    poset.legs = legs;
    poset.elements = enumerate_stable_graphs(genus, legs);

    std::map<CanonicalKey, int> index;
    for (size_t i = 0; i < poset.elements.size(); ++i)
        index[canonical_form(poset.elements[i]).key] = static_cast<int>(i);

    for (size_t i = 0; i < poset.elements.size(); ++i) {
        const Graph& g = poset.elements[i];
        std::set<std::pair<int, int>> seen_pairs;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            Specialization spec = contract(g, {e});
            CanonicalForm form = canonical_form(spec.target);
            int j = index.at(form.key);
            if (!seen_pairs.insert({static_cast<int>(i), j}).second)
                continue;
            PosetCover cover;
            cover.upper = static_cast<int>(i);
            cover.lower = j;
            cover.contracted_in_upper = e;
            // Lower representative edge -> upper edge, through the iso to
            // the representative and the contraction's edge map.
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

} // namespace troproots
