#include "troproots/tropical.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace troproots;

namespace {

TropicalCurve circle(Rational len)
{
    // One vertex of weight 1 keeps the model stable.
    return make_curve(Graph({1}, {{0, 0}}, {}), {len});
}

TropicalCurve random_curve(std::mt19937_64& rng)
{
    static const std::vector<Graph> graphs = [] {
        std::vector<Graph> out = enumerate_stable_graphs(2, 0);
        std::erase_if(out, [](const Graph& g) { return g.num_edges() == 0; });
        return out;
    }();
    const Graph& g = graphs[rng() % graphs.size()];
    std::vector<Rational> lengths;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        lengths.emplace_back(1 + static_cast<long long>(rng() % 4),
                             1 + static_cast<long long>(rng() % 3));
    return make_curve(g, std::move(lengths));
}

} // namespace

TEST_CASE("divisor of a stored function records slope breaks")
{
    TropicalCurve c = circle(Rational(2));
    // Tent function: slope 1 on the first half, -1 on the second.
    RationalFn f;
    f.segments = {{{Rational(1), 1}, {Rational(1), -1}}};
    TropicalDivisor D = divisor_of_fn(c, f);
    CHECK(D.degree() == 0);
    CHECK(D.coeff(CurvePoint::vertex(0)) == -2);
    CHECK(D.coeff(CurvePoint::interior(c, 0, Rational(1))) == 2);
}

TEST_CASE("two antipodal points on a circle differ by a principal divisor")
{
    TropicalCurve c = circle(Rational(2));
    CurvePoint v = CurvePoint::vertex(0);
    CurvePoint mid = CurvePoint::interior(c, 0, Rational(1));
    CurvePoint quarter = CurvePoint::interior(c, 0, Rational(1, 2));

    TropicalDivisor D;
    D.add(mid, 2);
    D.add(v, -2);
    PrincipalityResult res = is_principal(c, D);
    CHECK(res.principal);
    REQUIRE(res.witness.has_value());
    CHECK(divisor_of_fn(c, *res.witness) == D);
    CHECK(oracles::oracle_principal(c, D));

    // A single difference of distinct points on a circle is never
    // principal (the Jacobian of a cycle is the circle itself).
    TropicalDivisor E;
    E.add(quarter, 1);
    E.add(v, -1);
    CHECK_FALSE(is_principal(c, E).principal);
    CHECK_FALSE(oracles::oracle_principal(c, E));
    CHECK(equivalent(c, D, D).principal);
    CHECK_FALSE(equivalent(c, E, TropicalDivisor{}).principal);
}

TEST_CASE("segment divisors are principal for many generators and orders")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
        TropicalCurve c = random_curve(rng);
        EdgeId e = static_cast<EdgeId>(rng() % c.model.num_edges());
        for (long long a : {1LL, 2LL, 3LL}) {
            for (int r : {2, 3, 4}) {
                TropicalDivisor D = principal_segment_divisor(c, e, a, r);
                CHECK(D.degree() == 0);
                PrincipalityResult res = is_principal(c, D);
                CAPTURE(trial);
                CAPTURE(a);
                CAPTURE(r);
                CHECK(res.principal);
                REQUIRE(res.witness.has_value());
                CHECK(divisor_of_fn(c, *res.witness) == D);
                CHECK(oracles::oracle_principal(c, D));
            }
        }
    }
}

TEST_CASE("principality agrees with the q-reduction oracle on random divisors")
{
    std::mt19937_64 rng(19);
    int principal_seen = 0, nonprincipal_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
        TropicalCurve c = random_curve(rng);
        TropicalDivisor D;
        long long total = 0;
        for (int k = 0; k < 3; ++k) {
            long long coeff = static_cast<long long>(rng() % 5) - 2;
            CurvePoint p;
            if (rng() % 2 == 0 || c.model.num_edges() == 0) {
                p = CurvePoint::vertex(static_cast<VertexId>(rng() % c.model.num_vertices()));
            } else {
                EdgeId e = static_cast<EdgeId>(rng() % c.model.num_edges());
                Rational t = c.length(e) * Rational(1 + static_cast<long long>(rng() % 3), 4);
                p = CurvePoint::interior(c, e, t);
            }
            D.add(p, coeff);
            total += coeff;
        }
        // Balance the degree at the first vertex.
        D.add(CurvePoint::vertex(0), -total);
        bool ours = is_principal(c, D).principal;
        bool oracle = oracles::oracle_principal(c, D);
        CAPTURE(trial);
        CHECK(ours == oracle);
        (ours ? principal_seen : nonprincipal_seen)++;
    }
    // The sample must exercise both outcomes.
    CHECK(principal_seen > 0);
    CHECK(nonprincipal_seen > 0);
}

TEST_CASE("nonzero-degree divisors are never principal")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        TropicalCurve c = random_curve(rng);
        TropicalDivisor D;
        D.add(CurvePoint::vertex(static_cast<VertexId>(rng() % c.model.num_vertices())),
              1 + static_cast<long long>(rng() % 3));
        CHECK_FALSE(is_principal(c, D).principal);
        CHECK_FALSE(oracles::oracle_principal(c, D));
    }
}

TEST_CASE("the zero divisor has a constant witness")
{
    std::mt19937_64 rng(29);
    TropicalCurve c = random_curve(rng);
    PrincipalityResult res = is_principal(c, TropicalDivisor{});
    CHECK(res.principal);
    REQUIRE(res.witness.has_value());
    CHECK(res.witness->is_constant());
}

TEST_CASE("principality is invariant under length scaling")
{
    TropicalCurve c = make_curve(Graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {}),
                                 {Rational(1), Rational(2), Rational(3, 2)});
    TropicalDivisor D = principal_segment_divisor(c, 1, 2, 3);
    CHECK(is_principal(c, D).principal);

    // Scale every length (and the interior offsets) by 5/3.
    Rational s(5, 3);
    TropicalCurve scaled = make_curve(c.model, {s * 1, s * 2, s * Rational(3, 2)});
    TropicalDivisor Ds;
    for (const auto& [p, coeff] : D.support) {
        CurvePoint q = p.on_edge ? CurvePoint::interior(scaled, p.id, p.offset * s) : p;
        Ds.add(q, coeff);
    }
    CHECK(is_principal(scaled, Ds).principal);
    CHECK(oracles::oracle_principal(scaled, Ds));
}

TEST_CASE("common_model puts the requested points at vertices")
{
    TropicalCurve c = circle(Rational(3));
    CurvePoint a = CurvePoint::interior(c, 0, Rational(1, 2));
    CurvePoint b = CurvePoint::interior(c, 0, Rational(2));
    CommonModel m = common_model(c, {a, b});
    CHECK(m.graph.num_vertices() == 3);
    CHECK(m.graph.num_edges() == 3);
    CHECK(m.point_vertex.count(a) == 1);
    CHECK(m.point_vertex.count(b) == 1);
    Rational total(0);
    for (Rational len : m.lengths)
        total += len;
    CHECK(total == Rational(3));
}
