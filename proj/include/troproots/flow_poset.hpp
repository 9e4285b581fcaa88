#ifndef TROPROOTS_FLOW_POSET_HPP
#define TROPROOTS_FLOW_POSET_HPP

#include "troproots/enumeration.hpp"
#include "troproots/flows.hpp"

#include <vector>

namespace troproots {

// Lexicographically minimal encoding in the Aut(Gamma)-orbit of f.
Flow canonical_flow(const Graph& g, const std::vector<GraphAutomorphism>& auts, const Flow& f);

struct FlowPosetElement {
    int graph_index = -1; // into the underlying graph poset
    Flow flow;            // canonical orbit representative
};

// The universal poset of flows F_g(A, R): pairs (Gamma, phi) with
// div(phi) = D_{R,Gamma}, up to isomorphism, ranked by edge count.
struct FlowPoset {
    CoefficientGroup group;
    RamificationSequence ramification;
    int genus = 0;
    int legs = 0;
    GraphPoset graphs;
    std::vector<FlowPosetElement> elements;
    std::vector<PosetCover> covers;

    const Graph& graph_of(int element) const { return graphs.elements[elements[element].graph_index]; }
    int rank(int element) const { return graph_of(element).num_edges(); }
    int dimension() const;

    // Element index of the class of (graph_of(graph_index), f), or -1.
    int find(int graph_index, const Flow& f) const;
    // All elements whose graph is isomorphic to g.
    std::vector<int> fiber_over_graph(const Graph& g) const;
};

// Requires A finite and deg R = 0 in A.
FlowPoset build_flow_poset(int genus, int legs, const CoefficientGroup& group,
                           const RamificationSequence& R);

// f_*: F_g(A, R) -> F_g(B, f(R)), element-wise postcomposition with f.
struct FlowPosetMap {
    FlowPoset target;
    std::vector<int> element_map; // source element -> target element
    bool injective = false;
    bool surjective = false;
};

FlowPosetMap coefficient_change_poset(const Homomorphism& f, const FlowPoset& source);

} // namespace troproots

#endif
