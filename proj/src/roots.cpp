#include "troproots/roots.hpp"

#include <random>
#include <stdexcept>

namespace troproots {

RootInstance make_root_instance(TropicalCurve curve, TropicalDivisor base_divisor, int r)
{
    if (r < 2)
        throw std::invalid_argument("root order must be at least 2");
    for (const auto& [p, c] : base_divisor.support)
        if (p.on_edge)
            throw std::invalid_argument("base divisor must be vertex-supported on the model");
    if (base_divisor.degree() % r != 0)
        throw std::invalid_argument("base divisor degree must be divisible by r");
    return RootInstance{std::move(curve), std::move(base_divisor), r};
}

GraphDivisor reduced_divisor(const RootInstance& inst)
{
    CoefficientGroup group = cyclic(inst.r);
    std::vector<GroupElement> values;
    for (VertexId v = 0; v < inst.curve.model.num_vertices(); ++v)
        values.push_back(GroupElement::residue(inst.base_divisor.coeff(CurvePoint::vertex(v)),
                                               inst.r));
    return GraphDivisor(std::move(group), std::move(values));
}

TropicalDivisor delta_divisor_lifted(const RootInstance& inst, const Flow& phi_bar,
                                     const std::vector<long long>& lift)
{
    const Graph& g = inst.curve.model;
    const long long r = inst.r;
    if (phi_bar.group() != cyclic(inst.r) || phi_bar.num_edges() != g.num_edges())
        throw std::invalid_argument("flow is not a mod-r flow on the model");
    if (div_of_flow(g, phi_bar) != reduced_divisor(inst))
        throw std::invalid_argument("flow divisor does not match the base divisor mod r");
    if (static_cast<int>(lift.size()) != g.num_edges())
        throw std::invalid_argument("one lift value per edge required");
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (((lift[e] % r) + r) % r != phi_bar.value(e).torsion_part()[0])
            throw std::invalid_argument("lift does not reduce to the flow");

    TropicalDivisor out;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
        long long num = inst.base_divisor.coeff(CurvePoint::vertex(v));
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            if (g.src(e) == v)
                num -= (r - 1) * lift[e];
            if (g.dst(e) == v)
                num -= lift[e];
        }
        if (num % r != 0)
            throw std::logic_error("vertex numerator not divisible by r");
        out.add(CurvePoint::vertex(v), num / r);
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (lift[e] != 0)
            out.add(CurvePoint::interior(inst.curve, e, inst.curve.length(e) / r), lift[e]);
    return out;
}

TropicalDivisor delta_divisor(const RootInstance& inst, const Flow& phi_bar)
{
    std::vector<long long> lift;
    for (EdgeId e = 0; e < phi_bar.num_edges(); ++e)
        lift.push_back(phi_bar.value(e).torsion_part()[0]);
    return delta_divisor_lifted(inst, phi_bar, lift);
}

Flow phi_flow(const RootInstance& inst, const TropicalDivisor& root)
{
    PrincipalityResult pr = is_principal(inst.curve, inst.base_divisor - root * inst.r);
    if (!pr.principal)
        throw std::invalid_argument("divisor is not an r-th root of the base divisor");

    const long long r = inst.r;
    std::vector<GroupElement> values;
    for (EdgeId e = 0; e < inst.curve.model.num_edges(); ++e) {
        const auto& segs = pr.witness->segments[e];
        long long first = segs.front().slope;
        for (const auto& seg : segs)
            if (((seg.slope - first) % r) != 0)
                throw std::logic_error("witness slopes over one edge disagree mod r");
        values.push_back(GroupElement::residue(first, r));
    }
    Flow out(cyclic(inst.r), std::move(values));
    if (div_of_flow(inst.curve.model, out) != reduced_divisor(inst))
        throw std::logic_error("root flow has the wrong divisor");
    return out;
}

std::vector<RootClass> enumerate_roots(const RootInstance& inst, bool verify)
{
    std::vector<RootClass> out;
    for (const Flow& f : enumerate_flow_fiber(inst.curve.model, reduced_divisor(inst)))
        out.push_back({delta_divisor(inst, f)});
    if (verify) {
        for (const auto& rc : out)
            if (!equivalent(inst.curve, rc.representative * inst.r, inst.base_divisor).principal)
                throw std::logic_error("enumerated class is not a root");
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (equivalent(inst.curve, out[i].representative, out[j].representative).principal)
                    throw std::logic_error("enumerated root classes are not pairwise distinct");
    }
    return out;
}

namespace {

// Locate a point of the base curve in a one-point refinement of it.
CurvePoint map_to_refined(const TropicalCurve& refined, const CommonModel& cm,
                          const CurvePoint& p)
{
    if (!p.on_edge)
        return CurvePoint::vertex(p.id);
    Rational prev(0);
    for (EdgeId sub : cm.edges_over[p.id]) {
        Rational next = prev + refined.length(sub);
        if (p.offset < next)
            return CurvePoint::interior(refined, sub, p.offset - prev);
        if (p.offset == next)
            return CurvePoint::vertex(refined.model.dst(sub));
        prev = next;
    }
    throw std::logic_error("point offset beyond the edge length");
}

} // namespace

RootReport verify_root_bijection(const RootInstance& inst, std::uint64_t seed)
{
    RootReport report;
    auto fail = [&](std::string msg) {
        report.pass = false;
        report.failures.push_back(std::move(msg));
    };

    const Graph& g = inst.curve.model;
    const long long r = inst.r;
    std::vector<Flow> fiber = enumerate_flow_fiber(g, reduced_divisor(inst));

    long long expected = 1;
    for (int i = 0; i < g.betti(); ++i)
        expected *= r;
    if (static_cast<long long>(fiber.size()) != expected)
        fail("fiber size is not r^b1");

    std::vector<TropicalDivisor> roots;
    for (const Flow& f : fiber) {
        TropicalDivisor root = delta_divisor(inst, f);
        roots.push_back(root);
        if (!equivalent(inst.curve, root * inst.r, inst.base_divisor).principal)
            fail("r * delta(phi) is not equivalent to the base divisor");
        if (phi_flow(inst, root) != f)
            fail("phi(delta(phi)) differs from phi");
        if (!equivalent(inst.curve, delta_divisor(inst, phi_flow(inst, root)), root).principal)
            fail("delta(phi(root)) left the root class");
    }
    for (size_t i = 0; i < roots.size(); ++i)
        for (size_t j = i + 1; j < roots.size(); ++j)
            if (equivalent(inst.curve, roots[i], roots[j]).principal)
                fail("two delta images are equivalent");

    for (size_t fi = 0; fi < fiber.size(); ++fi) {
        const Flow& f = fiber[fi];
        std::vector<long long> base_lift;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            base_lift.push_back(f.value(e).torsion_part()[0]);

        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            // Lift independence: shift one lift value by r.
            std::vector<long long> shifted = base_lift;
            shifted[e] += r;
            if (!equivalent(inst.curve, delta_divisor_lifted(inst, f, shifted), roots[fi])
                     .principal)
                fail("delta depends on the choice of lift");

            // Orientation independence: flip one edge.
            auto ends = [&] {
                std::vector<std::pair<VertexId, VertexId>> out;
                for (EdgeId x = 0; x < g.num_edges(); ++x)
                    out.emplace_back(g.src(x), g.dst(x));
                std::swap(out[e].first, out[e].second);
                return out;
            }();
            RootInstance flipped{make_curve(Graph(g.weights(), ends, g.legs()),
                                            inst.curve.lengths),
                                 inst.base_divisor, inst.r};
            Flow f2 = f;
            f2.set_value(e, -f.value(e));
            TropicalDivisor d2 = delta_divisor(flipped, f2);
            TropicalDivisor pulled;
            for (const auto& [p, c] : d2.support) {
                if (p.on_edge && p.id == e)
                    pulled.add(CurvePoint::interior(inst.curve, e,
                                                    inst.curve.length(e) - p.offset),
                               c);
                else
                    pulled.add(p, c);
            }
            if (!equivalent(inst.curve, pulled, roots[fi]).principal)
                fail("delta depends on the edge orientation");
        }
    }

    // Refinement independence: subdivide one edge at a random seventh.
    std::mt19937_64 rng(seed);
    for (size_t fi = 0; g.num_edges() > 0 && fi < fiber.size(); ++fi) {
        EdgeId e = static_cast<EdgeId>(rng() % g.num_edges());
        long long k = 1 + static_cast<long long>(rng() % 6);
        CurvePoint cut =
            CurvePoint::interior(inst.curve, e, inst.curve.length(e) * Rational(k, 7));
        CommonModel cm = common_model(inst.curve, {cut});
        TropicalCurve refined = make_curve(cm.graph, cm.lengths);

        RootInstance rinst{refined, inst.base_divisor, inst.r};
        std::vector<GroupElement> rvalues;
        for (EdgeId orig = 0; orig < g.num_edges(); ++orig)
            for (size_t c = 0; c < cm.edges_over[orig].size(); ++c)
                rvalues.emplace_back(fiber[fi].value(orig));
        // common_model emits refined edges grouped by original edge in order.
        std::vector<GroupElement> ordered(refined.model.num_edges(), GroupElement());
        {
            size_t at = 0;
            for (EdgeId orig = 0; orig < g.num_edges(); ++orig)
                for (EdgeId sub : cm.edges_over[orig])
                    ordered[sub] = rvalues[at++];
        }
        TropicalDivisor refined_delta =
            delta_divisor(rinst, Flow(cyclic(inst.r), std::move(ordered)));

        TropicalDivisor pushed;
        for (const auto& [p, c] : roots[fi].support)
            pushed.add(map_to_refined(refined, cm, p), c);
        if (!equivalent(refined, refined_delta, pushed).principal)
            fail("delta depends on the model refinement");
    }

    return report;
}

} // namespace troproots
