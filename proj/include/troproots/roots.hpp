#ifndef TROPROOTS_ROOTS_HPP
#define TROPROOTS_ROOTS_HPP

#include "troproots/flows.hpp"
#include "troproots/tropical.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace troproots {

// A curve X, a vertex-supported divisor D on it, and the root order r.
struct RootInstance {
    TropicalCurve curve;
    TropicalDivisor base_divisor;
    int r = 2;
};

RootInstance make_root_instance(TropicalCurve curve, TropicalDivisor base_divisor, int r);

// One class [D'] with r D' equivalent to the base divisor.
struct RootClass {
    TropicalDivisor representative;
};

// The base divisor reduced mod r, as a vertex divisor over Z/rZ.
GraphDivisor reduced_divisor(const RootInstance& inst);

// The divisor attached to a mod-r flow with div = D mod r: vertex part
// (D(v) - sum_{src(e)=v} (r-1) phi(e) - sum_{dst(e)=v} phi(e)) / r with the
// lift of phi in [0, r), plus phi(e) at the point q_e at distance
// length(e)/r from the edge source.
TropicalDivisor delta_divisor(const RootInstance& inst, const Flow& phi_bar);

// Same formula with an explicit integer lift (lift[e] = phi(e) mod r); the
// resulting class does not depend on the lift.
TropicalDivisor delta_divisor_lifted(const RootInstance& inst, const Flow& phi_bar,
                                     const std::vector<long long>& lift);

// The mod-r flow of a root: slopes of a witness of D - r*root, read mod r
// edgewise.  All refined slopes over one model edge agree mod r.
Flow phi_flow(const RootInstance& inst, const TropicalDivisor& root);

// All r^{b1} root classes, as the delta image of the flow fiber.  With
// verify set, checks r*class ~ D and pairwise inequivalence.
std::vector<RootClass> enumerate_roots(const RootInstance& inst, bool verify = false);

struct RootReport {
    bool pass = true;
    std::vector<std::string> failures;
};

// Full bijection and independence check at desk scale: the two round
// trips, pairwise inequivalence, and invariance of delta under edge
// reorientation, lift shifts, and subdivision at a random point.
RootReport verify_root_bijection(const RootInstance& inst, std::uint64_t seed = 0);

} // namespace troproots

#endif
