#include "troproots/cone_complex.hpp"

#include <doctest.h>

#include <numeric>
#include <random>

using namespace troproots;

namespace {

ConeComplex integer_complex(int genus, int legs, long long r)
{
    return build_root_complex(genus, legs, r, RamificationSequence::trivial(integers(), legs));
}

std::vector<Rational> random_coords(std::mt19937_64& rng, int n)
{
    std::vector<Rational> out;
    for (int i = 0; i < n; ++i)
        out.emplace_back(1 + static_cast<long long>(rng() % 5),
                         1 + static_cast<long long>(rng() % 3));
    return out;
}

} // namespace

TEST_CASE("cone dimensions match poset ranks")
{
    ConeComplex cc = integer_complex(2, 0, 2);
    CHECK(cc.poset.dimension() == 3);
    for (size_t i = 0; i < cc.poset.elements.size(); ++i) {
        int el = static_cast<int>(i);
        CHECK(cc.cone_dimension(el) == cc.poset.graph_of(el).num_edges());
        CHECK(static_cast<int>(flow_stabilizer(cc, el).size()) >= 1);
    }
}

TEST_CASE("forgetful multipliers on a loop")
{
    // Zero flow: the root class stays on the same curve, y = x.
    ConeComplex cc = integer_complex(1, 1, 2);
    std::mt19937_64 rng(3);
    for (size_t i = 0; i < cc.poset.elements.size(); ++i) {
        int el = static_cast<int>(i);
        const Graph& g = cc.poset.graph_of(el);
        const Flow& flow = cc.poset.elements[i].flow;
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            long long mult = forgetful_multiplier(cc, el, e);
            // r = 2: multiplier 1 for even flow values, 2 for odd ones.
            bool zero = flow.value(e).is_zero();
            CHECK(mult == (zero ? 1 : 2));
        }
        if (g.num_edges() == 0)
            continue;
        ComplexPoint p = make_point(cc, el, random_coords(rng, g.num_edges()));
        TropicalModuliPoint y = forgetful_point(cc, p);
        CHECK(y.coords.size() == p.coords.size());
    }

    ConeComplex c4 = integer_complex(1, 1, 4);
    // With r = 4, flow value 2 has gcd 2 and multiplier 2; values 1 and 3
    // give multiplier 4.
    bool saw_two = false, saw_four = false;
    for (size_t i = 0; i < c4.poset.elements.size(); ++i) {
        const Graph& g = c4.poset.graph_of(static_cast<int>(i));
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            long long mult = forgetful_multiplier(c4, static_cast<int>(i), e);
            long long v = c4.poset.elements[i].flow.value(e).torsion_part().empty()
                              ? 0
                              : c4.poset.elements[i].flow.value(e).torsion_part()[0];
            if (v == 2) {
                CHECK(mult == 2);
                saw_two = true;
            }
            if (v == 1 || v == 3) {
                CHECK(mult == 4);
                saw_four = true;
            }
        }
    }
    CHECK(saw_two);
    CHECK(saw_four);
}

TEST_CASE("classification round trip")
{
    ConeComplex cc = integer_complex(2, 0, 2);
    std::mt19937_64 rng(5);
    for (size_t i = 0; i < cc.poset.elements.size(); ++i) {
        int el = static_cast<int>(i);
        int dim = cc.cone_dimension(el);
        if (dim == 0)
            continue;
        ComplexPoint p = make_point(cc, el, random_coords(rng, dim));
        ClassifiedPair pair = point_to_pair(cc, p);
        CHECK(equivalent(pair.curve, pair.root * 2,
                         ramification_divisor_on_curve(cc.ramification, pair.curve))
                  .principal);
        ComplexPoint back = classify_pair(cc, pair.curve, pair.root);
        CHECK(back == p);
    }
}

TEST_CASE("classifying a concrete square root on a circle")
{
    // Circle of length 2, zero divisor, r = 2.  The two cones over the
    // loop graph are the zero flow and the flow with value 1.
    ConeComplex cc = integer_complex(1, 1, 2);
    TropicalCurve c = make_curve(Graph({0}, {{0, 0}}, {{1, 0}}), {Rational(2)});

    TropicalDivisor trivial;
    ComplexPoint p0 = classify_pair(cc, c, trivial);
    CHECK(cc.poset.elements[p0.element].flow.value(0).is_zero());
    CHECK(p0.coords == std::vector<Rational>{Rational(2)});

    TropicalDivisor torsion;
    torsion.add(CurvePoint::interior(c, 0, Rational(1)), 1);
    torsion.add(CurvePoint::vertex(0), -1);
    ComplexPoint p1 = classify_pair(cc, c, torsion);
    CHECK_FALSE(cc.poset.elements[p1.element].flow.value(0).is_zero());
    // x = length * gcd(2, 1) / 2 = 1.
    CHECK(p1.coords == std::vector<Rational>{Rational(1)});
    // Forgetting the root recovers the curve length.
    TropicalModuliPoint y = forgetful_point(cc, p1);
    CHECK(y.coords == std::vector<Rational>{Rational(2)});
}

TEST_CASE("inclusion map is injective and preserves coordinates")
{
    ConeComplex cc = integer_complex(1, 1, 2);
    ComplexMap inc = inclusion_map(cc, 2); // into the r = 4 complex
    CHECK(inc.target.r == 4);
    CHECK(inc.injective);
    CHECK_FALSE(inc.surjective);
    std::mt19937_64 rng(9);
    for (size_t i = 0; i < cc.poset.elements.size(); ++i) {
        int el = static_cast<int>(i);
        for (long long m : inc.multipliers[i])
            CHECK(m == 1);
        int dim = cc.cone_dimension(el);
        if (dim == 0)
            continue;
        ComplexPoint p = make_point(cc, el, random_coords(rng, dim));
        ComplexPoint q = inc.apply(cc, p);
        CHECK(inc.target.cone_dimension(q.element) == dim);
    }
}

TEST_CASE("power map reduces the order and is surjective")
{
    ConeComplex c4 = integer_complex(1, 1, 4);
    ComplexMap pow = power_map(c4, 2);
    CHECK(pow.target.r == 2);
    CHECK(pow.surjective);
    CHECK_FALSE(pow.injective);
    for (size_t i = 0; i < c4.poset.elements.size(); ++i) {
        const Graph& g = c4.poset.graph_of(static_cast<int>(i));
        for (EdgeId e = 0; e < g.num_edges(); ++e) {
            long long v = c4.poset.elements[i].flow.value(e).torsion_part().empty()
                              ? 0
                              : c4.poset.elements[i].flow.value(e).torsion_part()[0];
            long long g4 = std::gcd(4LL, v);
            long long g2 = std::gcd(2LL, v % 2);
            // multiplier = r g(r', .) / (r' g(r, .)) = 4 g2 / (2 g4).
            CHECK(pow.multipliers[i][e] == 4 * g2 / (2 * g4));
        }
    }
}

TEST_CASE("forgetful scaling commutes with the structural maps")
{
    std::mt19937_64 rng(13);
    ConeComplex c2 = integer_complex(2, 0, 2);
    ConeComplex c4 = integer_complex(2, 0, 4);
    ComplexMap inc = inclusion_map(c2, 2);
    ComplexMap pow = power_map(c4, 2);
    for (const ConeComplex* src : {&c2, &c4}) {
        const ComplexMap& map = src == &c2 ? inc : pow;
        for (size_t i = 0; i < src->poset.elements.size(); ++i) {
            int el = static_cast<int>(i);
            int dim = src->cone_dimension(el);
            if (dim == 0)
                continue;
            ComplexPoint p = make_point(*src, el, random_coords(rng, dim));
            TropicalModuliPoint before = forgetful_point(*src, p);
            TropicalModuliPoint after = forgetful_point(map.target, map.apply(*src, p));
            CHECK(before == after);
        }
    }
}

TEST_CASE("coefficient change between integer and torsion coefficients")
{
    CoefficientGroup AB(1, {3});
    // Z -> Z + Z/3, injective on the quotients mod 2.
    Homomorphism f(integers(), AB, {GroupElement(AB, {1}, {0})});
    ConeComplex source = integer_complex(1, 1, 2);
    ComplexMap pushed = coefficient_change_map(source, f);
    CHECK(pushed.target.base_group == AB);
    CHECK(pushed.target.r == 2);
    // Mod 2 the torsion part dies, so f induces an isomorphism Z/2 -> Z/2.
    CHECK(pushed.injective);
    CHECK(pushed.surjective);
    std::mt19937_64 rng(21);
    for (size_t i = 0; i < source.poset.elements.size(); ++i) {
        int el = static_cast<int>(i);
        int dim = source.cone_dimension(el);
        if (dim == 0)
            continue;
        ComplexPoint p = make_point(source, el, random_coords(rng, dim));
        ComplexPoint q = pushed.apply(source, p);
        CHECK(pushed.target.cone_dimension(q.element) == dim);
        CHECK(forgetful_point(source, p) == forgetful_point(pushed.target, q));
    }

    // Projection Z + Z/3 -> Z is surjective on the mod-2 quotients.
    ConeComplex big = build_root_complex(1, 1, 2, RamificationSequence::trivial(AB, 1));
    Homomorphism proj(AB, integers(), {GroupElement::integer(1), GroupElement::integer(0)});
    ComplexMap down = coefficient_change_map(big, proj);
    CHECK(down.surjective);
}
