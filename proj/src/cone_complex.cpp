#include "troproots/cone_complex.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace troproots {

namespace {

std::vector<Rational> min_over_perms(const std::vector<GraphAutomorphism>& auts,
                                     const std::vector<Rational>& coords)
{
    std::vector<Rational> best = coords;
    std::vector<Rational> candidate(coords.size());
    for (const auto& aut : auts) {
        for (size_t e = 0; e < coords.size(); ++e)
            candidate[aut.edge_perm[e]] = coords[e];
        if (candidate < best)
            best = candidate;
    }
    return best;
}

GroupElement flow_lift(const ConeComplex& cc, const GroupElement& value)
{
    return cc.quotient.lift(value);
}

long long forgetful_gcd(const ConeComplex& cc, const GroupElement& value)
{
    return gcd_shifted(cc.r, flow_lift(cc, value));
}

// The automorphism carrying f to the canonical orbit representative.
GraphAutomorphism canonicalizing_aut(const Graph& g, const Flow& f, const Flow& canon)
{
    for (const auto& aut : automorphism_group(g))
        if (act_on_flow(aut, f) == canon)
            return aut;
    throw std::logic_error("flow is not in the orbit of its canonical form");
}

// value_map sends a source flow value to an element of the target base
// group; the projection to the target quotient happens here.
ComplexMap make_complex_map(const ConeComplex& source, ConeComplex target,
                            const std::function<GroupElement(const GroupElement&)>& value_map,
                            const std::function<long long(const GroupElement&)>& multiplier)
{
    ComplexMap out{std::move(target), {}, {}, {}, false, false};
    for (const auto& el : source.poset.elements) {
        const Graph& g = source.poset.graphs.elements[el.graph_index];
        std::vector<GroupElement> values;
        std::vector<long long> mults;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            values.push_back(out.target.quotient.project(value_map(el.flow.value(e))));
            mults.push_back(multiplier(el.flow.value(e)));
        }
        Flow mapped(out.target.poset.group, std::move(values));
        // Graph posets for equal (g, n) are built deterministically, so the
        // graph index carries over.
        int idx = out.target.poset.find(el.graph_index, mapped);
        if (idx < 0)
            throw std::logic_error("mapped flow left the target poset");
        out.element_map.push_back(idx);
        out.multipliers.push_back(std::move(mults));
        out.mapped_flows.push_back(std::move(mapped));
    }
    std::set<int> image(out.element_map.begin(), out.element_map.end());
    out.injective = image.size() == out.element_map.size();
    out.surjective = image.size() == out.target.poset.elements.size();
    return out;
}

} // namespace

ConeComplex build_root_complex(int genus, int legs, long long r, const RamificationSequence& R)
{
    if (r < 2)
        throw std::invalid_argument("root order must be at least 2");
    QuotientMap q(R.group(), r);
    if (!q.project(R.degree(genus)).is_zero())
        throw std::invalid_argument("ramification degree must lie in rA");

    RamificationSequence reduced;
    for (const auto& a : R.entries)
        reduced.entries.push_back(q.project(a));
    reduced.ell = q.project(R.ell);

    FlowPoset poset = build_flow_poset(genus, legs, q.target(), reduced);
    return ConeComplex{R.group(), r, R, std::move(q), std::move(poset)};
}

std::vector<GraphAutomorphism> flow_stabilizer(const ConeComplex& cc, int element)
{
    const Graph& g = cc.poset.graph_of(element);
    const Flow& f = cc.poset.elements[element].flow;
    std::vector<GraphAutomorphism> out;
    for (const auto& aut : automorphism_group(g))
        if (act_on_flow(aut, f) == f)
            out.push_back(aut);
    return out;
}

ComplexPoint make_point(const ConeComplex& cc, int element, std::vector<Rational> coords)
{
    if (element < 0 || element >= static_cast<int>(cc.poset.elements.size()))
        throw std::invalid_argument("unknown poset element");
    const Graph& g = cc.poset.graph_of(element);
    if (static_cast<int>(coords.size()) != g.num_edges())
        throw std::invalid_argument("one coordinate per edge required");
    for (const Rational& x : coords)
        if (x <= 0)
            throw std::invalid_argument("cone coordinates must be positive");
    return ComplexPoint{element, min_over_perms(flow_stabilizer(cc, element), coords)};
}

long long forgetful_multiplier(const ConeComplex& cc, int element, EdgeId e)
{
    return cc.r / forgetful_gcd(cc, cc.poset.elements[element].flow.value(e));
}

TropicalModuliPoint forgetful_point(const ConeComplex& cc, const ComplexPoint& p)
{
    const auto& el = cc.poset.elements[p.element];
    const Graph& g = cc.poset.graphs.elements[el.graph_index];
    std::vector<Rational> scaled(p.coords);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        scaled[e] *= forgetful_multiplier(cc, p.element, e);
    return TropicalModuliPoint{el.graph_index, min_over_perms(automorphism_group(g), scaled)};
}

ComplexPoint classify_pair(const ConeComplex& cc, const TropicalCurve& X,
                           const TropicalDivisor& root)
{
    if (cc.base_group != integers())
        throw std::invalid_argument("pair classification is implemented for integer coefficients");

    TropicalDivisor D = ramification_divisor_on_curve(cc.ramification, X);
    RootInstance inst = make_root_instance(X, D, static_cast<int>(cc.r));
    Flow phi = phi_flow(inst, root);

    CanonicalForm form = canonical_form(X.model);
    int gi = cc.poset.graphs.find(form.representative);
    if (gi < 0)
        throw std::invalid_argument("curve model is not a stable graph of this complex");
    Flow on_rep = act_on_flow(form.to_representative, phi);
    int element = cc.poset.find(gi, on_rep);
    if (element < 0)
        throw std::logic_error("root flow is missing from the poset");

    std::vector<Rational> coords(X.model.num_edges());
    for (EdgeId e = 0; e < X.model.num_edges(); ++e)
        coords[form.to_representative.edge_perm[e]] =
            X.length(e) * Rational(forgetful_gcd(cc, phi.value(e)), cc.r);

    GraphAutomorphism align = canonicalizing_aut(cc.poset.graphs.elements[gi], on_rep,
                                                 cc.poset.elements[element].flow);
    std::vector<Rational> aligned(coords.size());
    for (size_t e = 0; e < coords.size(); ++e)
        aligned[align.edge_perm[e]] = coords[e];
    return make_point(cc, element, std::move(aligned));
}

ClassifiedPair point_to_pair(const ConeComplex& cc, const ComplexPoint& p)
{
    if (cc.base_group != integers())
        throw std::invalid_argument("pair classification is implemented for integer coefficients");

    const auto& el = cc.poset.elements[p.element];
    const Graph& g = cc.poset.graphs.elements[el.graph_index];
    std::vector<Rational> lengths(p.coords);
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        lengths[e] *= forgetful_multiplier(cc, p.element, e);

    TropicalCurve X = make_curve(g, std::move(lengths));
    TropicalDivisor D = ramification_divisor_on_curve(cc.ramification, X);
    RootInstance inst = make_root_instance(X, D, static_cast<int>(cc.r));
    return ClassifiedPair{std::move(X), delta_divisor(inst, el.flow)};
}

ComplexPoint ComplexMap::apply(const ConeComplex& source, const ComplexPoint& p) const
{
    const auto& el = source.poset.elements[p.element];
    const Graph& g = source.poset.graphs.elements[el.graph_index];
    int te = element_map[p.element];
    GraphAutomorphism align =
        canonicalizing_aut(g, mapped_flows[p.element], target.poset.elements[te].flow);
    std::vector<Rational> out(p.coords.size());
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        out[align.edge_perm[e]] = p.coords[e] * multipliers[p.element][e];
    return make_point(target, te, std::move(out));
}

ComplexMap inclusion_map(const ConeComplex& source, long long d)
{
    if (d < 1)
        throw std::invalid_argument("the multiplier d must be positive");

    RamificationSequence scaled;
    for (const auto& a : source.ramification.entries)
        scaled.entries.push_back(a * d);
    scaled.ell = source.ramification.ell * d;

    ConeComplex target = build_root_complex(source.poset.genus, source.poset.legs,
                                            d * source.r, scaled);
    return make_complex_map(
        source, std::move(target),
        [&](const GroupElement& v) { return flow_lift(source, v) * d; },
        [](const GroupElement&) { return 1LL; });
}

ComplexMap power_map(const ConeComplex& source, long long r_prime)
{
    if (r_prime < 2 || source.r % r_prime != 0)
        throw std::invalid_argument("r' must be a divisor of r, at least 2");

    ConeComplex target = build_root_complex(source.poset.genus, source.poset.legs, r_prime,
                                            source.ramification);
    long long r = source.r;
    return make_complex_map(
        source, std::move(target),
        [&](const GroupElement& v) { return flow_lift(source, v); },
        [&](const GroupElement& v) {
            GroupElement a = flow_lift(source, v);
            long long g_r = gcd_shifted(r, a);
            long long g_rp = gcd_shifted(r_prime, a);
            long long num = r * g_rp;
            long long den = r_prime * g_r;
            if (num % den != 0)
                throw std::logic_error("power map multiplier is not an integer");
            return num / den;
        });
}

ComplexMap coefficient_change_map(const ConeComplex& source, const Homomorphism& f)
{
    if (f.domain() != source.base_group)
        throw std::invalid_argument("homomorphism domain does not match the complex");
    if (!is_mult_injective(f.domain(), source.r) || !is_mult_injective(f.codomain(), source.r))
        throw std::invalid_argument("multiplication by r must be injective on both groups");

    RamificationSequence mapped;
    for (const auto& a : source.ramification.entries)
        mapped.entries.push_back(f.apply(a));
    mapped.ell = f.apply(source.ramification.ell);

    ConeComplex target = build_root_complex(source.poset.genus, source.poset.legs, source.r,
                                            mapped);
    long long r = source.r;
    return make_complex_map(
        source, std::move(target),
        [&](const GroupElement& v) { return f.apply(flow_lift(source, v)); },
        [&](const GroupElement& v) {
            GroupElement a = flow_lift(source, v);
            long long g_a = gcd_shifted(r, a);
            long long g_b = gcd_shifted(r, f.apply(a));
            if (g_b % g_a != 0)
                throw std::logic_error("coefficient change multiplier is not an integer");
            return g_b / g_a;
        });
}

} // namespace troproots
