#include "troproots/graph.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace troproots;

namespace {

Graph theta()
{
    return Graph({0, 0}, {{0, 1}, {0, 1}, {0, 1}}, {});
}

Graph dumbbell()
{
    return Graph({0, 0}, {{0, 0}, {0, 1}, {1, 1}}, {});
}

} // namespace

TEST_CASE("basic graph invariants")
{
    Graph t = theta();
    CHECK(t.betti() == 2);
    CHECK(t.genus() == 2);
    CHECK(t.is_stable());
    CHECK(t.valence(0) == 3);

    Graph loop({1}, {{0, 0}}, {});
    CHECK(loop.genus() == 2);
    CHECK(loop.valence(0) == 2);

    Graph unstable({0}, {{0, 0}}, {});
    CHECK_FALSE(unstable.is_stable());

    CHECK_THROWS_AS(Graph({0, 0}, {}, {}), std::invalid_argument); // disconnected
}

TEST_CASE("canonical form identifies relabelings")
{
    Graph a({0, 1}, {{0, 0}, {0, 1}}, {});
    Graph b({1, 0}, {{0, 1}, {1, 1}}, {});
    CHECK(canonical_form(a).key == canonical_form(b).key);
    CHECK(find_isomorphism(a, b).has_value());

    Graph c({0, 1}, {{0, 1}, {0, 1}}, {});
    CHECK(canonical_form(a).key != canonical_form(c).key);
    CHECK_FALSE(find_isomorphism(a, c).has_value());
}

TEST_CASE("legs are matched by label")
{
    Graph a({0, 0}, {{0, 1}, {0, 1}}, {{1, 0}, {2, 1}});
    Graph b({0, 0}, {{0, 1}, {0, 1}}, {{1, 1}, {2, 0}});
    Graph c({0, 0}, {{0, 1}, {0, 1}}, {{1, 0}, {2, 0}});
    CHECK(find_isomorphism(a, b).has_value()); // swap the two vertices
    CHECK_FALSE(find_isomorphism(a, c).has_value());
}

TEST_CASE("the theta graph has 12 automorphisms")
{
    CHECK(automorphism_group(theta()).size() == 12);
    // Loop flips and the swap: 2 * 2 * 2 for flips/swap of the two loops.
    CHECK(automorphism_group(dumbbell()).size() == 8);
    CHECK(automorphism_group(Graph({1}, {{0, 0}}, {})).size() == 2);
}

TEST_CASE("isomorphisms respect incidence on half-edges")
{
    Graph a = dumbbell();
    for (const auto& aut : automorphism_group(a)) {
        for (EdgeId e = 0; e < a.num_edges(); ++e) {
            HalfEdge h = Graph::half(e);
            CHECK(a.attach(aut.apply(h)) == aut.vertex_perm[a.attach(h)]);
            CHECK(aut.apply(Graph::mate(h)) == Graph::mate(aut.apply(h)));
        }
    }
}

TEST_CASE("contraction of loops and non-loops")
{
    Graph d = dumbbell();
    ContractionStep loop_step = contract_edge(d, 0);
    CHECK(loop_step.target.num_vertices() == 2);
    CHECK(loop_step.target.weight(0) == 1);
    CHECK(loop_step.target.genus() == 2);

    ContractionStep bridge = contract_edge(d, 1);
    CHECK(bridge.target.num_vertices() == 1);
    CHECK(bridge.target.num_edges() == 2);
    CHECK(bridge.target.genus() == 2);

    Specialization all = contract(d, {0, 1, 2});
    CHECK(all.target.num_vertices() == 1);
    CHECK(all.target.num_edges() == 0);
    CHECK(all.target.weight(0) == 2);
}

TEST_CASE("refinement keeps genus and chains edges in order")
{
    Graph t = theta();
    Refinement r = refine(t, {2, 1, 3});
    CHECK(r.graph.genus() == 2);
    CHECK(r.graph.num_edges() == 6);
    CHECK(r.edges_over[0].size() == 2);
    CHECK(r.edges_over[2].size() == 3);
    // Chains run source to target.
    CHECK(r.graph.src(r.edges_over[0][0]) == t.src(0));
    CHECK(r.graph.dst(r.edges_over[0][1]) == t.dst(0));
}
