#include "troproots/enumeration.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace troproots;

TEST_CASE("stable graph counts for small (genus, legs)")
{
    CHECK(enumerate_stable_graphs(1, 1).size() == 2);
    CHECK(enumerate_stable_graphs(2, 0).size() == 7);
    CHECK(enumerate_stable_graphs(0, 3).size() == 1);
    CHECK(enumerate_stable_graphs(0, 4).size() == 4);
    CHECK_THROWS_AS(enumerate_stable_graphs(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), std::invalid_argument);
}

TEST_CASE("enumeration agrees with the brute-force oracle element by element")
{
    for (auto [genus, legs] :
         {std::pair{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 0}, {2, 1}}) {
        CAPTURE(genus);
        CAPTURE(legs);
        std::vector<Graph> ours = enumerate_stable_graphs(genus, legs);
        std::vector<Graph> oracle = oracles::brute_force_stable_graphs(genus, legs);
        CHECK(ours.size() == oracle.size());

        std::set<std::string> our_keys, oracle_keys;
        for (const Graph& g : ours) {
            CHECK(g.is_stable());
            CHECK(g.genus() == genus);
            CHECK(g.num_legs() == legs);
            our_keys.insert(canonical_form(g).key.to_string());
        }
        for (const Graph& g : oracle)
            oracle_keys.insert(canonical_form(g).key.to_string());
        CHECK(our_keys.size() == ours.size()); // pairwise non-isomorphic
        CHECK(our_keys == oracle_keys);
    }
}

TEST_CASE("graph poset covers are single-edge contractions")
{
    GraphPoset poset = build_graph_poset(2, 0);
    CHECK(poset.elements.size() == 7);
    CHECK(poset.dimension() == 3);

    int minimal = 0, maximal = 0;
    for (size_t i = 0; i < poset.elements.size(); ++i) {
        if (poset.rank(static_cast<int>(i)) == 0)
            ++minimal;
        if (poset.rank(static_cast<int>(i)) == poset.dimension())
            ++maximal;
    }
    CHECK(minimal == 1);
    CHECK(maximal == 2); // theta and dumbbell

    for (const PosetCover& cover : poset.covers) {
        const Graph& upper = poset.elements[cover.upper];
        const Graph& lower = poset.elements[cover.lower];
        CHECK(poset.rank(cover.upper) == poset.rank(cover.lower) + 1);
        ContractionStep step = contract_edge(upper, cover.contracted_in_upper);
        CHECK(canonical_form(step.target).key == canonical_form(lower).key);
        // edge_corr maps lower edges to distinct upper edges.
        std::set<EdgeId> images(cover.edge_corr.begin(), cover.edge_corr.end());
        CHECK(images.size() == cover.edge_corr.size());
        CHECK(cover.edge_corr.size() == lower.num_edges());
        CHECK(images.count(cover.contracted_in_upper) == 0);
    }
}

TEST_CASE("graph poset is connected through covers")
{
    for (auto [genus, legs] : {std::pair{2, 0}, {1, 2}}) {
        GraphPoset poset = build_graph_poset(genus, legs);
        std::vector<int> comp(poset.elements.size(), -1);
        std::vector<int> stack = {0};
        comp[0] = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const PosetCover& c : poset.covers) {
                for (int next : {c.upper == v ? c.lower : -1, c.lower == v ? c.upper : -1}) {
                    if (next >= 0 && comp[next] < 0) {
                        comp[next] = 0;
                        stack.push_back(next);
                    }
                }
            }
        }
        CHECK(std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; }));
    }
}
