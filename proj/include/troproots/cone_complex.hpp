#ifndef TROPROOTS_CONE_COMPLEX_HPP
#define TROPROOTS_CONE_COMPLEX_HPP

#include "troproots/flow_poset.hpp"
#include "troproots/roots.hpp"
#include "troproots/tropical.hpp"

#include <vector>

namespace troproots {

// The generalized cone complex of tropical r-th roots with coefficients in
// A: one cone of dimension |E| per element of the flow poset over A/rA,
// glued along the poset covers.
struct ConeComplex {
    CoefficientGroup base_group;   // A
    long long r = 2;
    RamificationSequence ramification; // over A
    QuotientMap quotient;          // A -> A/rA
    FlowPoset poset;               // flows over A/rA with div = D_{R mod r}

    int cone_dimension(int element) const { return poset.rank(element); }
};

// Requires deg R in rA.
ConeComplex build_root_complex(int genus, int legs, long long r, const RamificationSequence& R);

// Interior point of one cone; coordinates are indexed by the edges of the
// element's canonical graph and stored as the lexicographically minimal
// representative under Aut(Gamma, flow).
struct ComplexPoint {
    int element = -1;
    std::vector<Rational> coords;

    bool operator==(const ComplexPoint&) const = default;
};

// Automorphisms of the element's graph fixing its flow.
std::vector<GraphAutomorphism> flow_stabilizer(const ConeComplex& cc, int element);

// Validates positivity and canonicalizes the coordinates.
ComplexPoint make_point(const ConeComplex& cc, int element, std::vector<Rational> coords);

// Point of M_{g,n}^trop: a graph cone coordinate vector modulo Aut(Gamma).
struct TropicalModuliPoint {
    int graph_index = -1;
    std::vector<Rational> coords;

    bool operator==(const TropicalModuliPoint&) const = default;
};

// The edgewise forgetful scaling y_e = |r / gcd(r, flow(e) + rA)| * x_e.
long long forgetful_multiplier(const ConeComplex& cc, int element, EdgeId e);
TropicalModuliPoint forgetful_point(const ConeComplex& cc, const ComplexPoint& p);

// Classification of a concrete pair: the cone point with coordinates
// x_e = length(e) * |gcd(r, flow(e))| / r.  Integer coefficients only.
ComplexPoint classify_pair(const ConeComplex& cc, const TropicalCurve& X,
                           const TropicalDivisor& root);

// Inverse direction: the pair (X, root) carried by a cone point.
struct ClassifiedPair {
    TropicalCurve curve;
    TropicalDivisor root;
};
ClassifiedPair point_to_pair(const ConeComplex& cc, const ComplexPoint& p);

// A map of complexes: per source element a target element together with
// the per-edge coordinate multiplier (edges indexed as in the source
// element's graph; the target edge is the one with the same index after
// flow transport, tracked by target_edge).
struct ComplexMap {
    ConeComplex target;
    std::vector<int> element_map;
    std::vector<std::vector<long long>> multipliers; // per source element, per edge
    std::vector<Flow> mapped_flows; // per source element, before canonicalization
    bool injective = false;
    bool surjective = false;

    ComplexPoint apply(const ConeComplex& source, const ComplexPoint& p) const;
};

// (r', R') -> (d r', d R'): flow multiplication by d, identical
// coordinates.  Injective with image the d-divisible flows.
ComplexMap inclusion_map(const ConeComplex& source, long long d);

// (r, R) -> (r', R) for r' | r: reduction mod r', taking (X, [D]) to
// (X, [(r/r') D]); coordinates scale by |r gcd(r', .) / (r' gcd(r, .))|.
ComplexMap power_map(const ConeComplex& source, long long r_prime);

// f_*: coefficients change along f: A -> B; requires multiplication by r
// injective on both groups.
ComplexMap coefficient_change_map(const ConeComplex& source, const Homomorphism& f);

} // namespace troproots

#endif
