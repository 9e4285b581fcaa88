#ifndef TROPROOTS_TROPICAL_HPP
#define TROPROOTS_TROPICAL_HPP

#include "troproots/flows.hpp"
#include "troproots/graph.hpp"

#include <boost/rational.hpp>

#include <map>
#include <optional>
#include <vector>

namespace troproots {

using Rational = boost::rational<long long>;

// Metric graph: a model graph with exact positive rational edge lengths.
struct TropicalCurve {
    Graph model;
    std::vector<Rational> lengths; // per edge

    Rational length(EdgeId e) const { return lengths[e]; }
};

TropicalCurve make_curve(Graph model, std::vector<Rational> lengths);

// A point of the curve: a model vertex, or an interior point of an edge at
// offset t from the edge's source (canonical orientation), 0 < t < length.
struct CurvePoint {
    bool on_edge = false;
    int id = 0;         // vertex id or edge id
    Rational offset{0}; // only for edge points

    static CurvePoint vertex(VertexId v) { return {false, v, Rational(0)}; }
    static CurvePoint interior(const TropicalCurve& c, EdgeId e, Rational t);

    bool operator==(const CurvePoint&) const = default;
    bool operator<(const CurvePoint& o) const
    {
        if (on_edge != o.on_edge)
            return on_edge < o.on_edge;
        if (id != o.id)
            return id < o.id;
        return offset < o.offset;
    }
};

// Finitely supported integer divisor on the curve.
struct TropicalDivisor {
    std::map<CurvePoint, long long> support;

    long long degree() const;
    long long coeff(const CurvePoint& p) const;
    void add(const CurvePoint& p, long long c);

    TropicalDivisor operator+(const TropicalDivisor&) const;
    TropicalDivisor operator-(const TropicalDivisor&) const;
    TropicalDivisor operator*(long long) const;
    bool operator==(const TropicalDivisor&) const = default;
};

// Piecewise linear function with integer slopes, stored as runs along each
// model edge: per edge, the (length, slope) segments in canonical
// orientation order.  Satisfies the cycle condition exactly.
struct RationalFn {
    struct Segment {
        Rational length;
        long long slope = 0;
        bool operator==(const Segment&) const = default;
    };
    std::vector<std::vector<Segment>> segments; // per model edge

    bool is_constant() const;
};

// Model refinement placing the given points at vertices.
struct CommonModel {
    Graph graph;
    std::vector<Rational> lengths;                // per refined edge
    std::map<CurvePoint, VertexId> point_vertex;  // input points (and model vertices)
    std::vector<std::vector<EdgeId>> edges_over;  // per original edge, chain source->target
};

CommonModel common_model(const TropicalCurve& c, const std::vector<CurvePoint>& points);

// Integer-metric reduction: refine at Supp(D), clear denominators, then
// cut every edge into unit segments.  D becomes vertex-supported.
struct UnitModel {
    Graph graph;
    std::vector<long long> divisor;              // per vertex of `graph`
    long long scale = 1;                         // lcm of length denominators
    std::vector<std::vector<EdgeId>> edges_over; // per original edge, unit chain source->target
};

UnitModel unit_laplacian_model(const TropicalCurve& c, const TropicalDivisor& D);

struct PrincipalityResult {
    bool principal = false;
    std::optional<RationalFn> witness; // present iff principal
};

// D is principal iff deg D = 0 and D lies in the integer Laplacian image
// of the unit model; the witness is verified exactly before returning.
PrincipalityResult is_principal(const TropicalCurve& c, const TropicalDivisor& D);

PrincipalityResult equivalent(const TropicalCurve& c, const TropicalDivisor& D1,
                              const TropicalDivisor& D2);

// div(f) of a stored rational function, as a divisor on the curve.
TropicalDivisor divisor_of_fn(const TropicalCurve& c, const RationalFn& f);

// -(r-1)a sigma(e) + ra q_e - a tau(e), with q_e at distance length/r from
// the edge source.  Principal by construction.
TropicalDivisor principal_segment_divisor(const TropicalCurve& c, EdgeId e, long long a, int r);

// Vertex divisor D_{R,Gamma} of the canonical model, viewed on the curve.
TropicalDivisor ramification_divisor_on_curve(const RamificationSequence& R,
                                              const TropicalCurve& c);

} // namespace troproots

#endif
