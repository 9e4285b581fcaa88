#ifndef TROPROOTS_TEST_ORACLES_HPP
#define TROPROOTS_TEST_ORACLES_HPP

// Independent brute-force oracles used to cross-check the library.

#include "troproots/enumeration.hpp"
#include "troproots/flows.hpp"
#include "troproots/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

namespace oracles {

using namespace troproots;

namespace detail {

// All multisets of `size` elements drawn from {0, ..., n-1}.
inline void multisets(int n, int size, std::vector<int>& current,
                      const std::function<void(const std::vector<int>&)>& visit)
{
    if (static_cast<int>(current.size()) == size) {
        visit(current);
        return;
    }
    int start = current.empty() ? 0 : current.back();
    for (int i = start; i < n; ++i) {
        current.push_back(i);
        multisets(n, size, current, visit);
        current.pop_back();
    }
}

inline void weight_vectors(int nv, int total, std::vector<int>& current,
                           const std::function<void(const std::vector<int>&)>& visit)
{
    if (static_cast<int>(current.size()) == nv) {
        visit(current);
        return;
    }
    int used = std::accumulate(current.begin(), current.end(), 0);
    for (int w = 0; w + used <= total; ++w) {
        current.push_back(w);
        weight_vectors(nv, total, current, visit);
        current.pop_back();
    }
}

} // namespace detail

// Exhaustive enumeration of stable graphs, independent of the library's
// uncontraction search: try every weight vector, edge multiset and leg
// placement, and deduplicate by canonical form.
inline std::vector<Graph> brute_force_stable_graphs(int genus, int legs)
{
    if (2 * genus - 2 + legs <= 0)
        throw std::invalid_argument("unstable (genus, legs)");
    std::map<std::string, Graph> found;
    int max_vertices = std::max(1, 2 * genus - 2 + legs);
    for (int nv = 1; nv <= max_vertices; ++nv) {
        // Unordered vertex pairs, loops included.
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < nv; ++i)
            for (int j = i; j < nv; ++j)
                pairs.emplace_back(i, j);

        std::vector<int> wcur;
        detail::weight_vectors(nv, genus, wcur, [&](const std::vector<int>& weights) {
            int b1 = genus - std::accumulate(weights.begin(), weights.end(), 0);
            int num_edges = b1 + nv - 1;
            if (b1 < 0 || num_edges < 0)
                return;
            std::vector<int> ecur;
            detail::multisets(static_cast<int>(pairs.size()), num_edges, ecur,
                              [&](const std::vector<int>& picked) {
                std::vector<std::pair<VertexId, VertexId>> ends;
                for (int p : picked)
                    ends.push_back(pairs[p]);
                // Leg placements: one vertex per label.
                std::vector<int> at(legs, 0);
                while (true) {
                    std::vector<Leg> leg_list;
                    for (int l = 0; l < legs; ++l)
                        leg_list.push_back({l + 1, at[l]});
                    try {
                        Graph g(weights, ends, leg_list);
                        if (g.is_stable() && g.genus() == genus) {
                            CanonicalForm form = canonical_form(g);
                            found.emplace(form.key.to_string(), form.representative);
                        }
                    } catch (const std::invalid_argument&) {
                        // disconnected; skip
                    }
                    int i = 0;
                    for (; i < legs; ++i) {
                        if (++at[i] < nv)
                            break;
                        at[i] = 0;
                    }
                    if (i == legs)
                        break;
                }
            });
        });
    }
    std::vector<Graph> out;
    for (auto& [key, g] : found)
        out.push_back(std::move(g));
    return out;
}

// Kirchhoff flows (div = 0) by exhausting every edge-value assignment;
// independent of the spanning-tree construction.
inline std::vector<Flow> brute_force_kirchhoff_flows(const Graph& g, const CoefficientGroup& A)
{
    std::vector<GroupElement> elements = all_elements(A);
    std::vector<Flow> out;
    std::vector<size_t> pick(g.num_edges(), 0);
    while (true) {
        std::vector<GroupElement> values;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            values.push_back(elements[pick[e]]);
        Flow f(A, std::move(values));
        if (div_of_flow(g, f) == GraphDivisor::zero(A, g))
            out.push_back(std::move(f));
        size_t i = 0;
        for (; i < pick.size(); ++i) {
            if (++pick[i] < elements.size())
                break;
            pick[i] = 0;
        }
        if (i == pick.size())
            break;
    }
    return out;
}

// Burnside count of H_1(Gamma, A) / Aut(Gamma): average number of fixed
// Kirchhoff flows over the automorphism group.
inline long long burnside_orbit_count(const Graph& g, const CoefficientGroup& A)
{
    std::vector<Flow> flows = brute_force_kirchhoff_flows(g, A);
    std::vector<GraphAutomorphism> auts = automorphism_group(g);
    long long fixed_total = 0;
    for (const auto& aut : auts)
        for (const Flow& f : flows)
            if (act_on_flow(aut, f) == f)
                ++fixed_total;
    if (fixed_total % static_cast<long long>(auts.size()) != 0)
        throw std::logic_error("Burnside sum is not divisible by the group order");
    return fixed_total / static_cast<long long>(auts.size());
}

// q-reduction of an integer vertex divisor on a unit metric graph
// (q = vertex 0), by outward equalization and Dhar's burning algorithm.
inline std::vector<long long> q_reduce(const Graph& g, std::vector<long long> d)
{
    int nv = g.num_vertices();

    // BFS layers from q.
    std::vector<int> dist(nv, -1);
    dist[0] = 0;
    std::queue<VertexId> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
        VertexId v = bfs.front();
        bfs.pop();
        for (EdgeId e : g.edges_at(v)) {
            VertexId u = g.src(e) == v ? g.dst(e) : g.src(e);
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                bfs.push(u);
            }
        }
    }
    int max_dist = *std::max_element(dist.begin(), dist.end());

    auto fire_set = [&](const std::vector<bool>& in) {
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (g.is_loop(e))
                continue;
            VertexId u = g.src(e), v = g.dst(e);
            if (in[u] && !in[v]) {
                --d[u];
                ++d[v];
            } else if (in[v] && !in[u]) {
                --d[v];
                ++d[u];
            }
        }
    };

    // Stage 1: make every vertex except q effective, fixing the farthest
    // layer first (firing {dist <= j-1} feeds layer j from layer j-1).
    for (int j = max_dist; j >= 1; --j) {
        std::vector<bool> in(nv, false);
        for (VertexId v = 0; v < nv; ++v)
            in[v] = dist[v] <= j - 1;
        auto layer_negative = [&] {
            for (VertexId v = 0; v < nv; ++v)
                if (dist[v] == j && d[v] < 0)
                    return true;
            return false;
        };
        while (layer_negative())
            fire_set(in);
    }

    // Stage 2: Dhar burning; fire the unburnt set until everything burns.
    while (true) {
        std::vector<bool> burnt(nv, false);
        burnt[0] = true;
        bool changed = true;
        while (changed) {
            changed = false;
            for (VertexId v = 0; v < nv; ++v) {
                if (burnt[v])
                    continue;
                long long incoming = 0;
                for (EdgeId e : g.edges_at(v)) {
                    if (g.is_loop(e))
                        continue;
                    VertexId u = g.src(e) == v ? g.dst(e) : g.src(e);
                    if (burnt[u])
                        ++incoming;
                }
                if (incoming > d[v]) {
                    burnt[v] = true;
                    changed = true;
                }
            }
        }
        if (std::all_of(burnt.begin(), burnt.end(), [](bool b) { return b; }))
            break;
        std::vector<bool> unburnt(nv);
        for (VertexId v = 0; v < nv; ++v)
            unburnt[v] = !burnt[v];
        fire_set(unburnt);
    }
    return d;
}

// Independent principality oracle: a degree-zero divisor is principal iff
// its q-reduced form is identically zero on the unit model.
inline bool oracle_principal(const TropicalCurve& c, const TropicalDivisor& D)
{
    if (D.degree() != 0)
        return false;
    UnitModel um = unit_laplacian_model(c, D);
    std::vector<long long> reduced = q_reduce(um.graph, um.divisor);
    return std::all_of(reduced.begin(), reduced.end(), [](long long x) { return x == 0; });
}

} // namespace oracles

#endif
