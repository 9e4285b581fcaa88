#ifndef TROPROOTS_FLOWS_HPP
#define TROPROOTS_FLOWS_HPP

#include "troproots/abelian.hpp"
#include "troproots/graph.hpp"

#include <vector>

namespace troproots {

// A-flow on a graph: one value per edge in canonical orientation (half-edge
// 2e); the opposite orientation carries the negation.
class Flow {
public:
    Flow() = default;
    Flow(CoefficientGroup group, std::vector<GroupElement> edge_values);

    static Flow zero(const CoefficientGroup& group, const Graph& g);

    const CoefficientGroup& group() const { return group_; }
    int num_edges() const { return static_cast<int>(values_.size()); }
    const GroupElement& value(EdgeId e) const { return values_[e]; }
    GroupElement value_on(HalfEdge h) const
    {
        return (h & 1) ? -values_[h / 2] : values_[h / 2];
    }
    void set_value(EdgeId e, GroupElement a) { values_[e] = std::move(a); }

    Flow operator+(const Flow& other) const;
    Flow operator-(const Flow& other) const;
    bool operator==(const Flow&) const = default;

    std::vector<long long> encode() const;

private:
    CoefficientGroup group_;
    std::vector<GroupElement> values_;
};

// Vertex divisor with coefficients in A.
class GraphDivisor {
public:
    GraphDivisor() = default;
    GraphDivisor(CoefficientGroup group, std::vector<GroupElement> vertex_values);

    static GraphDivisor zero(const CoefficientGroup& group, const Graph& g);

    const CoefficientGroup& group() const { return group_; }
    int num_vertices() const { return static_cast<int>(values_.size()); }
    const GroupElement& value(VertexId v) const { return values_[v]; }
    void set_value(VertexId v, GroupElement a) { values_[v] = std::move(a); }

    GroupElement degree() const;

    GraphDivisor operator+(const GraphDivisor& other) const;
    GraphDivisor operator-(const GraphDivisor& other) const;
    bool operator==(const GraphDivisor&) const = default;

private:
    CoefficientGroup group_;
    std::vector<GroupElement> values_;
};

// The tuple (a_1, ..., a_n, b) fixing the universal divisor D_{R,Gamma}.
struct RamificationSequence {
    std::vector<GroupElement> entries; // a_1 ... a_n
    GroupElement ell;                  // the paper's b

    static RamificationSequence trivial(const CoefficientGroup& group, int n);

    const CoefficientGroup& group() const { return ell.group(); }
    // a_1 + ... + a_n + (2g-2) b.
    GroupElement degree(int genus) const;
};

GraphDivisor div_of_flow(const Graph& g, const Flow& f);

// Spanning-tree section of div: a flow with div(flow) = D; requires
// deg(D) = 0.
Flow flow_from_divisor(const Graph& g, const GraphDivisor& D);

// Fundamental cycles with respect to a spanning tree, one per non-tree
// edge, as integer coefficient vectors indexed by edge (+-1 on the cycle).
std::vector<std::vector<int>> fundamental_cycles(const Graph& g);

// The cycle flows with unit A-coefficient; every Kirchhoff flow is a unique
// A-combination of these.
std::vector<Flow> h1_generators(const Graph& g, const CoefficientGroup& group);

// Sum of cycle_i * a_i as a flow over the a_i's group.
Flow combine_cycles(const Graph& g, const std::vector<std::vector<int>>& cycles,
                    const std::vector<GroupElement>& coefficients);

// All of F(Gamma, D) = { flows with div = D } for finite A; empty iff
// deg(D) != 0, of cardinality |A|^b1 otherwise.
std::vector<Flow> enumerate_flow_fiber(const Graph& g, const GraphDivisor& D);

// Restriction of flow values to surviving edges.
Flow pushforward_flow(const Specialization& s, const Flow& f);
GraphDivisor pushforward_divisor(const Specialization& s, const GraphDivisor& D);

// Section of pushforward: a flow on the source with the given pushforward
// and divisor.  Contracted loops get value 0.
Flow lift_flow(const Specialization& s, const Flow& f_target, const GraphDivisor& D);

// D_{R,Gamma}(v) = (2 w(v) + val(v) - 2) b + sum of a_j over legs at v.
GraphDivisor ramification_divisor(const RamificationSequence& R, const Graph& g);

// (aut.phi)(e) = phi(aut^-1(e)) on half-edges; a loop flip negates.
Flow act_on_flow(const GraphAutomorphism& aut, const Flow& f);

} // namespace troproots

#endif
