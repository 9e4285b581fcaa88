#ifndef TROPROOTS_ENUMERATION_HPP
#define TROPROOTS_ENUMERATION_HPP

#include "troproots/graph.hpp"

#include <vector>

namespace troproots {

// One cover of the poset: `upper` contracts one edge down to `lower`.
struct PosetCover {
    int upper = -1;
    int lower = -1;
    EdgeId contracted_in_upper = -1;
    // lower-representative edge -> upper-representative edge.
    std::vector<EdgeId> edge_corr;
};

// The ranked poset G_{g,n} of stable genus-g graphs with n legs, rank =
// edge count, covers = single-edge contractions.
struct GraphPoset {
    int genus = 0;
    int legs = 0;
    std::vector<Graph> elements; // canonical representatives
    std::vector<PosetCover> covers;

    int rank(int element) const { return elements[element].num_edges(); }
    int dimension() const;
    // Index of the canonical representative isomorphic to g, or -1.
    int find(const Graph& g) const;
};

// One canonical representative per isomorphism class; requires
// 2g - 2 + n > 0.
std::vector<Graph> enumerate_stable_graphs(int genus, int legs);

GraphPoset build_graph_poset(int genus, int legs);

} // namespace troproots

#endif
