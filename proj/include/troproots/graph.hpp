#ifndef TROPROOTS_GRAPH_HPP
#define TROPROOTS_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace troproots {

using VertexId = int;
using EdgeId = int;
// Half-edges 2e and 2e+1 are the two ends of edge e; the oriented edge in
// canonical orientation is the half-edge 2e, with source attach(2e) and
// target attach(2e+1).
using HalfEdge = int;

struct Leg {
    int label = 0;
    VertexId vertex = 0;
    bool operator==(const Leg&) const = default;
    auto operator<=>(const Leg&) const = default;
};

// Connected multigraph with vertex weights and labeled legs.
// Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(std::vector<int> weights, std::vector<std::pair<VertexId, VertexId>> edge_ends,
          std::vector<Leg> legs);

    int num_vertices() const { return static_cast<int>(weights_.size()); }
    int num_edges() const { return static_cast<int>(ends_.size()); }
    int num_legs() const { return static_cast<int>(legs_.size()); }

    int weight(VertexId v) const { return weights_[v]; }
    const std::vector<int>& weights() const { return weights_; }
    VertexId src(EdgeId e) const { return ends_[e].first; }
    VertexId dst(EdgeId e) const { return ends_[e].second; }
    bool is_loop(EdgeId e) const { return ends_[e].first == ends_[e].second; }

    static HalfEdge half(EdgeId e) { return 2 * e; }
    static HalfEdge mate(HalfEdge h) { return h ^ 1; }
    static EdgeId edge_of(HalfEdge h) { return h / 2; }
    VertexId attach(HalfEdge h) const { return (h & 1) ? ends_[h / 2].second : ends_[h / 2].first; }

    // Loops count twice.
    int valence(VertexId v) const;
    const std::vector<Leg>& legs() const { return legs_; }
    std::vector<int> leg_labels_at(VertexId v) const;

    int betti() const;
    int genus() const;
    bool is_connected() const;
    bool is_stable() const;

    std::vector<EdgeId> edges_at(VertexId v) const;

    bool operator==(const Graph&) const = default;

private:
    std::vector<int> weights_;
    std::vector<std::pair<VertexId, VertexId>> ends_;
    std::vector<Leg> legs_;
};

// Isomorphism g1 -> g2 on vertices and half-edges (the half-edge image of
// 2e is 2*edge_perm[e] when edge_sign[e] = +1 and 2*edge_perm[e]+1 when
// edge_sign[e] = -1).
struct GraphIso {
    std::vector<VertexId> vertex_perm;
    std::vector<EdgeId> edge_perm;
    std::vector<int> edge_sign;

    HalfEdge apply(HalfEdge h) const
    {
        EdgeId e = Graph::edge_of(h);
        HalfEdge out = 2 * edge_perm[e] + (h & 1);
        return edge_sign[e] < 0 ? Graph::mate(out) : out;
    }
    GraphIso inverse() const;
    GraphIso compose(const GraphIso& then) const; // this followed by `then`
};

using GraphAutomorphism = GraphIso;

// Canonical key: equal for two graphs iff they are isomorphic as weighted
// multigraphs with labelwise-fixed legs.
struct CanonicalKey {
    int num_vertices = 0;
    std::vector<int> weights;
    std::vector<std::pair<VertexId, VertexId>> edges; // sorted (min,max) pairs
    std::vector<Leg> legs;                            // sorted by label

    auto operator<=>(const CanonicalKey&) const = default;
    std::string to_string() const;
    Graph build() const;
};

struct CanonicalForm {
    CanonicalKey key;
    Graph representative;
    GraphIso to_representative; // from the input graph
};

CanonicalForm canonical_form(const Graph& g);

// Some isomorphism g1 -> g2, if one exists.
std::optional<GraphIso> find_isomorphism(const Graph& g1, const Graph& g2);

// The full automorphism group as half-edge permutations, loop flips and
// parallel-edge swaps included.
std::vector<GraphAutomorphism> automorphism_group(const Graph& g);

// Single-edge contraction record.
struct ContractionStep {
    Graph source;
    Graph target;
    EdgeId contracted = -1;
    std::vector<VertexId> vertex_map; // source vertex -> target vertex
    std::vector<EdgeId> edge_map;     // source edge -> target edge, -1 for contracted
};

// Composite contraction; steps are applied in order.  Target edges keep the
// canonical orientation of the corresponding source edges.
struct Specialization {
    Graph source;
    Graph target;
    std::vector<EdgeId> contracted_edges; // in the source
    std::vector<VertexId> vertex_map;
    std::vector<EdgeId> edge_map;
    std::vector<ContractionStep> steps;
};

ContractionStep contract_edge(const Graph& g, EdgeId e);
Specialization contract(const Graph& g, std::vector<EdgeId> edges);

// Refinement: insert parts[e]-1 interior vertices into each edge e.  New
// vertices get weight 0 and no legs.
struct Refinement {
    Graph graph;
    // Per original edge, the chain of refined edges ordered source to
    // target; each refined edge keeps the orientation induced from the
    // original one.
    std::vector<std::vector<EdgeId>> edges_over;
    // Per original edge, the interior vertices in chain order.
    std::vector<std::vector<VertexId>> interior_vertices;
};

Refinement refine(const Graph& g, const std::vector<int>& parts);
Refinement subdivide(const Graph& g, EdgeId e, int parts);

std::string to_dot(const Graph& g);

} // namespace troproots

#endif
