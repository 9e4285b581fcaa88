#include "troproots/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace troproots {

Graph::Graph(std::vector<int> weights, std::vector<std::pair<VertexId, VertexId>> edge_ends,
             std::vector<Leg> legs)
    : weights_(std::move(weights)), ends_(std::move(edge_ends)), legs_(std::move(legs))
{
    if (weights_.empty())
        throw std::invalid_argument("graph needs at least one vertex");
    int nv = num_vertices();
    for (int w : weights_)
        if (w < 0)
            throw std::invalid_argument("vertex weights must be nonnegative");
    for (auto [u, v] : ends_)
        if (u < 0 || u >= nv || v < 0 || v >= nv)
            throw std::invalid_argument("edge endpoint out of range");
    for (const Leg& leg : legs_)
        if (leg.vertex < 0 || leg.vertex >= nv)
            throw std::invalid_argument("leg vertex out of range");
    std::sort(legs_.begin(), legs_.end());
    for (size_t i = 1; i < legs_.size(); ++i)
        if (legs_[i].label == legs_[i - 1].label)
            throw std::invalid_argument("duplicate leg label");
    if (!is_connected())
        throw std::invalid_argument("graph must be connected");
}

int Graph::valence(VertexId v) const
{
    int val = 0;
    for (auto [u, w] : ends_) {
        if (u == v)
            ++val;
        if (w == v)
            ++val;
    }
    return val;
}

std::vector<int> Graph::leg_labels_at(VertexId v) const
{
    std::vector<int> labels;
    for (const Leg& leg : legs_)
        if (leg.vertex == v)
            labels.push_back(leg.label);
    return labels;
}

int Graph::betti() const
{
    return num_edges() - num_vertices() + 1;
}

int Graph::genus() const
{
    return betti() + std::accumulate(weights_.begin(), weights_.end(), 0);
}

bool Graph::is_connected() const
{
    int nv = num_vertices();
    std::vector<bool> seen(nv, false);
    std::vector<VertexId> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (auto [u, w] : ends_) {
            if (u == v && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
            if (w == v && !seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

bool Graph::is_stable() const
{
    for (VertexId v = 0; v < num_vertices(); ++v)
        if (2 * weight(v) - 2 + valence(v) + static_cast<int>(leg_labels_at(v).size()) <= 0)
            return false;
    return true;
}

std::vector<EdgeId> Graph::edges_at(VertexId v) const
{
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < num_edges(); ++e)
        if (src(e) == v || dst(e) == v)
            out.push_back(e);
    return out;
}

GraphIso GraphIso::inverse() const
{
    GraphIso inv;
    inv.vertex_perm.resize(vertex_perm.size());
    inv.edge_perm.resize(edge_perm.size());
    inv.edge_sign.resize(edge_sign.size());
    for (size_t v = 0; v < vertex_perm.size(); ++v)
        inv.vertex_perm[vertex_perm[v]] = static_cast<int>(v);
    for (size_t e = 0; e < edge_perm.size(); ++e) {
        inv.edge_perm[edge_perm[e]] = static_cast<int>(e);
        inv.edge_sign[edge_perm[e]] = edge_sign[e];
    }
    return inv;
}

GraphIso GraphIso::compose(const GraphIso& then) const
{
    GraphIso out;
    out.vertex_perm.resize(vertex_perm.size());
    out.edge_perm.resize(edge_perm.size());
    out.edge_sign.resize(edge_sign.size());
    for (size_t v = 0; v < vertex_perm.size(); ++v)
        out.vertex_perm[v] = then.vertex_perm[vertex_perm[v]];
    for (size_t e = 0; e < edge_perm.size(); ++e) {
        out.edge_perm[e] = then.edge_perm[edge_perm[e]];
        out.edge_sign[e] = edge_sign[e] * then.edge_sign[edge_perm[e]];
    }
    return out;
}

std::string CanonicalKey::to_string() const
{
    std::ostringstream out;
    out << num_vertices << ";w";
    for (int w : weights)
        out << ":" << w;
    out << ";e";
    for (auto [u, v] : edges)
        out << ":" << u << "-" << v;
    out << ";l";
    for (const Leg& leg : legs)
        out << ":" << leg.label << "@" << leg.vertex;
    return out.str();
}

Graph CanonicalKey::build() const
{
    return Graph(weights, edges, legs);
}

namespace {

// Key of the relabeled graph under a vertex permutation (old -> new).
CanonicalKey key_under(const Graph& g, const std::vector<VertexId>& perm)
{
    CanonicalKey key;
    key.num_vertices = g.num_vertices();
    key.weights.resize(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        key.weights[perm[v]] = g.weight(v);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        VertexId a = perm[g.src(e)], b = perm[g.dst(e)];
        key.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(key.edges.begin(), key.edges.end());
    for (const Leg& leg : g.legs())
        key.legs.push_back({leg.label, perm[leg.vertex]});
    std::sort(key.legs.begin(), key.legs.end());
    return key;
}

// Orbit-sorted vertex invariant used to prune the permutation search.
std::vector<long long> vertex_invariant(const Graph& g, VertexId v)
{
    std::vector<long long> inv{g.weight(v), g.valence(v)};
    auto labels = g.leg_labels_at(v);
    inv.insert(inv.end(), labels.begin(), labels.end());
    return inv;
}

void all_vertex_bijections(const Graph& g1, const Graph& g2,
                           const std::function<void(const std::vector<VertexId>&)>& visit)
{
    int nv = g1.num_vertices();
    if (g2.num_vertices() != nv)
        return;
    std::vector<VertexId> perm(nv);
    std::iota(perm.begin(), perm.end(), 0);
    // perm maps g1 vertex v to g2 vertex perm[v]; prune by local invariants.
    std::vector<std::vector<long long>> inv1(nv), inv2(nv);
    for (VertexId v = 0; v < nv; ++v) {
        inv1[v] = vertex_invariant(g1, v);
        inv2[v] = vertex_invariant(g2, v);
    }
    do {
        bool ok = true;
        for (VertexId v = 0; v < nv && ok; ++v)
            ok = inv1[v] == inv2[perm[v]];
        if (ok)
            visit(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

// Multiset of unordered edge endpoint pairs under a vertex map.
std::multiset<std::pair<int, int>> edge_multiset(const Graph& g, const std::vector<VertexId>& perm)
{
    std::multiset<std::pair<int, int>> out;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        VertexId a = perm[g.src(e)], b = perm[g.dst(e)];
        out.emplace(std::min(a, b), std::max(a, b));
    }
    return out;
}

std::multiset<std::pair<int, int>> edge_multiset(const Graph& g)
{
    std::vector<VertexId> id(g.num_vertices());
    std::iota(id.begin(), id.end(), 0);
    return edge_multiset(g, id);
}

} // namespace

CanonicalForm canonical_form(const Graph& g)
{
    // Minimize over every relabeling: invariant-based pruning is unsound
    // here because the key depends on vertex positions.
    std::optional<CanonicalKey> best;
    std::vector<VertexId> best_perm;
    std::vector<VertexId> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        CanonicalKey key = key_under(g, perm);
        if (!best || key < *best) {
            best = key;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    CanonicalForm out;
    out.key = *best;
    out.representative = out.key.build();
    // Match edges between g (relabeled by best_perm) and the representative.
    out.to_representative.vertex_perm = best_perm;
    out.to_representative.edge_perm.assign(g.num_edges(), -1);
    out.to_representative.edge_sign.assign(g.num_edges(), 1);
    std::vector<bool> used(g.num_edges(), false);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        VertexId a = best_perm[g.src(e)], b = best_perm[g.dst(e)];
        for (EdgeId f = 0; f < out.representative.num_edges(); ++f) {
            if (used[f])
                continue;
            VertexId u = out.representative.src(f), v = out.representative.dst(f);
            if (u == a && v == b) {
                used[f] = true;
                out.to_representative.edge_perm[e] = f;
                out.to_representative.edge_sign[e] = 1;
                break;
            }
            if (u == b && v == a) {
                used[f] = true;
                out.to_representative.edge_perm[e] = f;
                out.to_representative.edge_sign[e] = (a == b) ? 1 : -1;
                break;
            }
        }
    }
    return out;
}

namespace {

// Extend a vertex bijection g1 -> g2 to every compatible half-edge
// bijection (parallel-edge permutations and loop flips).
void extend_to_half_edges(const Graph& g1, const Graph& g2, const std::vector<VertexId>& vperm,
                          std::vector<GraphIso>& out)
{
    // Group g1 edges by image endpoint pair, g2 edges by endpoint pair.
    std::map<std::pair<int, int>, std::vector<EdgeId>> classes1, classes2;
    for (EdgeId e = 0; e < g1.num_edges(); ++e) {
        VertexId a = vperm[g1.src(e)], b = vperm[g1.dst(e)];
        classes1[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    for (EdgeId e = 0; e < g2.num_edges(); ++e) {
        VertexId a = g2.src(e), b = g2.dst(e);
        classes2[{std::min(a, b), std::max(a, b)}].push_back(e);
    }
    if (classes1.size() != classes2.size())
        return;
    for (const auto& [pair, edges] : classes1) {
        auto it = classes2.find(pair);
        if (it == classes2.end() || it->second.size() != edges.size())
            return;
    }

    std::vector<GraphIso> partial(1);
    partial[0].vertex_perm = vperm;
    partial[0].edge_perm.assign(g1.num_edges(), -1);
    partial[0].edge_sign.assign(g1.num_edges(), 1);

    for (const auto& [pair, edges] : classes1) {
        const auto& targets = classes2.at(pair);
        std::vector<int> idx(targets.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::vector<GraphIso> next;
        bool loop_class = pair.first == pair.second;
        do {
            // Sign choices: loops may flip; non-loops are forced by vperm.
            std::vector<std::vector<int>> sign_choices(edges.size());
            for (size_t i = 0; i < edges.size(); ++i) {
                if (loop_class) {
                    sign_choices[i] = {1, -1};
                } else {
                    EdgeId e = edges[i], f = targets[idx[i]];
                    bool direct = vperm[g1.src(e)] == g2.src(f);
                    sign_choices[i] = {direct ? 1 : -1};
                }
            }
            std::vector<size_t> pick(edges.size(), 0);
            while (true) {
                for (const GraphIso& base : partial) {
                    GraphIso iso = base;
                    for (size_t i = 0; i < edges.size(); ++i) {
                        iso.edge_perm[edges[i]] = targets[idx[i]];
                        iso.edge_sign[edges[i]] = sign_choices[i][pick[i]];
                    }
                    next.push_back(std::move(iso));
                }
                size_t i = 0;
                for (; i < pick.size(); ++i) {
                    if (++pick[i] < sign_choices[i].size())
                        break;
                    pick[i] = 0;
                }
                if (i == pick.size())
                    break;
            }
        } while (std::next_permutation(idx.begin(), idx.end()));
        partial = std::move(next);
        // After the first class, `partial` holds every assignment so far;
        // the permutation loop above already multiplied the choices in.
        if (partial.empty())
            return;
    }
    for (auto& iso : partial)
        out.push_back(std::move(iso));
}

} // namespace

std::optional<GraphIso> find_isomorphism(const Graph& g1, const Graph& g2)
{
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()
        || g1.num_legs() != g2.num_legs())
        return std::nullopt;
    for (int i = 0; i < g1.num_legs(); ++i)
        if (g1.legs()[i].label != g2.legs()[i].label)
            return std::nullopt;
    std::optional<GraphIso> found;
    all_vertex_bijections(g1, g2, [&](const std::vector<VertexId>& perm) {
        if (found)
            return;
        // Legs must be preserved labelwise.
        for (const Leg& leg : g1.legs()) {
            auto labels = g2.leg_labels_at(perm[leg.vertex]);
            if (std::find(labels.begin(), labels.end(), leg.label) == labels.end())
                return;
        }
        if (edge_multiset(g1, perm) != edge_multiset(g2))
            return;
        std::vector<GraphIso> isos;
        extend_to_half_edges(g1, g2, perm, isos);
        if (!isos.empty())
            found = isos.front();
    });
    return found;
}

std::vector<GraphAutomorphism> automorphism_group(const Graph& g)
{
    std::vector<GraphAutomorphism> out;
    auto base_edges = edge_multiset(g);
    all_vertex_bijections(g, g, [&](const std::vector<VertexId>& perm) {
        for (const Leg& leg : g.legs())
            if (perm[leg.vertex] != leg.vertex)
                return;
        if (edge_multiset(g, perm) != base_edges)
            return;
        extend_to_half_edges(g, g, perm, out);
    });
    return out;
}

ContractionStep contract_edge(const Graph& g, EdgeId e0)
{
    if (e0 < 0 || e0 >= g.num_edges())
        throw std::invalid_argument("unknown edge id");
    ContractionStep step;
    step.source = g;
    step.contracted = e0;
    int nv = g.num_vertices();
    step.vertex_map.resize(nv);
    std::vector<int> weights;
    std::vector<Leg> legs;
    if (g.is_loop(e0)) {
        for (VertexId v = 0; v < nv; ++v)
            step.vertex_map[v] = v;
        weights = g.weights();
        weights[g.src(e0)] += 1;
        legs = g.legs();
    } else {
        VertexId keep = std::min(g.src(e0), g.dst(e0));
        VertexId drop = std::max(g.src(e0), g.dst(e0));
        for (VertexId v = 0; v < nv; ++v)
            step.vertex_map[v] = v == drop ? keep : (v > drop ? v - 1 : v);
        weights.assign(nv - 1, 0);
        for (VertexId v = 0; v < nv; ++v)
            weights[step.vertex_map[v]] += g.weight(v);
        for (const Leg& leg : g.legs())
            legs.push_back({leg.label, step.vertex_map[leg.vertex]});
    }
    std::vector<std::pair<VertexId, VertexId>> ends;
    step.edge_map.assign(g.num_edges(), -1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (e == e0)
            continue;
        step.edge_map[e] = static_cast<EdgeId>(ends.size());
        ends.emplace_back(step.vertex_map[g.src(e)], step.vertex_map[g.dst(e)]);
    }
    step.target = Graph(std::move(weights), std::move(ends), std::move(legs));
    return step;
}

Specialization contract(const Graph& g, std::vector<EdgeId> edges)
{
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (EdgeId e : edges)
        if (e < 0 || e >= g.num_edges())
            throw std::invalid_argument("unknown edge id");

    Specialization spec;
    spec.source = g;
    spec.contracted_edges = edges;
    spec.vertex_map.resize(g.num_vertices());
    std::iota(spec.vertex_map.begin(), spec.vertex_map.end(), 0);
    spec.edge_map.resize(g.num_edges());
    std::iota(spec.edge_map.begin(), spec.edge_map.end(), 0);

    Graph current = g;
    std::vector<EdgeId> remaining = edges; // ids in `current`
    while (!remaining.empty()) {
        EdgeId e = remaining.front();
        ContractionStep step = contract_edge(current, e);
        for (auto& v : spec.vertex_map)
            v = step.vertex_map[v];
        for (auto& f : spec.edge_map)
            if (f >= 0)
                f = step.edge_map[f];
        std::vector<EdgeId> next;
        for (size_t i = 1; i < remaining.size(); ++i)
            next.push_back(step.edge_map[remaining[i]]);
        current = step.target;
        spec.steps.push_back(std::move(step));
        remaining = std::move(next);
    }
    spec.target = current;
    return spec;
}

Refinement refine(const Graph& g, const std::vector<int>& parts)
{
    if (static_cast<int>(parts.size()) != g.num_edges())
        throw std::invalid_argument("parts size must match edge count");
    for (int p : parts)
        if (p < 1)
            throw std::invalid_argument("parts must be positive");

    Refinement out;
    std::vector<int> weights = g.weights();
    std::vector<std::pair<VertexId, VertexId>> ends;
    out.edges_over.resize(g.num_edges());
    out.interior_vertices.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        VertexId prev = g.src(e);
        for (int i = 0; i < parts[e] - 1; ++i) {
            VertexId mid = static_cast<VertexId>(weights.size());
            weights.push_back(0);
            out.interior_vertices[e].push_back(mid);
            out.edges_over[e].push_back(static_cast<EdgeId>(ends.size()));
            ends.emplace_back(prev, mid);
            prev = mid;
        }
        out.edges_over[e].push_back(static_cast<EdgeId>(ends.size()));
        ends.emplace_back(prev, g.dst(e));
    }
    out.graph = Graph(std::move(weights), std::move(ends), g.legs());
    return out;
}

Refinement subdivide(const Graph& g, EdgeId e, int parts)
{
    std::vector<int> all(g.num_edges(), 1);
    all.at(e) = parts;
    return refine(g, all);
}

std::string to_dot(const Graph& g)
{
    std::ostringstream out;
    out << "graph {\n";
    for (VertexId v = 0; v < g.num_vertices(); ++v)
        out << "  v" << v << " [label=\"v" << v << " w=" << g.weight(v) << "\"];\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        out << "  v" << g.src(e) << " -- v" << g.dst(e) << " [label=\"e" << e << "\"];\n";
    for (const Leg& leg : g.legs()) {
        out << "  leg" << leg.label << " [shape=plaintext, label=\"leg " << leg.label << "\"];\n";
        out << "  v" << leg.vertex << " -- leg" << leg.label << " [style=dashed];\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace troproots
