#include <doctest.h>

#include <set>

#include "freeact/classify.hpp"
#include "freeact/schreier.hpp"
#include "oracles.hpp"

using namespace freeact;

namespace {

MarkedVector mv(std::vector<int> g, std::vector<int> v) {
    MarkedVector x;
    x.g = std::move(g);
    for (int s : v) x.v.push_back(static_cast<std::int8_t>(s));
    return x;
}

}  // namespace

TEST_CASE("graph shape") {
    SUBCASE("cyclic:2, one generator") {
        auto G = build_group("cyclic:2");
        auto graph = schreier_graph(G, {1});
        CHECK(graph.vertex_count == 2);
        CHECK(graph.edges.size() == 2);
        CHECK(graph.basis_cycles.size() == 1);
    }
    SUBCASE("quaternion on (i,j)") {
        auto G = build_group("quaternion");
        auto graph = schreier_graph(G, {G.element_index("i"), G.element_index("j")});
        CHECK(graph.vertex_count == 8);
        CHECK(graph.edges.size() == 16);
        CHECK(graph.basis_cycles.size() == 9);
    }
    SUBCASE("dihedral:3 on (s1,s2)") {
        auto G = build_group("dihedral:3");
        auto graph = schreier_graph(G, {G.element_index("s1"), G.element_index("s2")});
        CHECK(graph.vertex_count == 6);
        CHECK(graph.edges.size() == 12);
        CHECK(graph.basis_cycles.size() == 7);
    }
    SUBCASE("non-generating tuple is rejected") {
        auto G = build_group("cyclic:4");
        CHECK_THROWS_AS(schreier_graph(G, {G.element_index("s^2")}), std::invalid_argument);
    }
    SUBCASE("tree words multiply to their vertex") {
        auto G = build_group("dihedral:4");
        const GenVector g = {G.element_index("s1"), G.element_index("s2")};
        auto graph = schreier_graph(G, g);
        int tree_edges = 0;
        for (const auto& e : graph.edges) tree_edges += e.tree;
        CHECK(tree_edges == G.order() - 1);
        for (int x = 0; x < G.order(); x++)
            CHECK(oracle::eval_word_group(G, graph.tree_word(x), g) == x);
    }
}

TEST_CASE("covering genus formula") {
    CHECK(covering_genus(build_group("quaternion"), 2) == 9);
    CHECK(covering_genus(build_group("dihedral:5"), 1) == 1);
    CHECK(covering_genus(build_group("cyclic:3"), 1) == 1);
    CHECK(covering_genus(build_group("dihedral:6"), 3) == 25);

    SUBCASE("equals the cycle-basis size of every graph") {
        for (const auto& desc : {"dihedral:6", "abelian:4,2", "quaternion"}) {
            auto G = build_group(desc);
            auto tuple = minimal_generating_tuple(G);
            auto graph = schreier_graph(G, tuple);
            CHECK(static_cast<std::int64_t>(graph.basis_cycles.size()) ==
                  covering_genus(G, static_cast<int>(tuple.size())));
        }
    }
}

TEST_CASE("orientability from the cycle basis") {
    SUBCASE("all-ones signs are always orientable with the trivial character") {
        for (const auto& desc : {"cyclic:6", "dihedral:4", "quaternion"}) {
            auto G = build_group(desc);
            auto tuple = minimal_generating_tuple(G);
            MarkedVector x{tuple, OrientVector(tuple.size(), +1)};
            auto verdict = covering_orientable(G, x);
            REQUIRE(verdict.orientable);
            CHECK(verdict.character->trivial());
        }
    }

    SUBCASE("quaternion (i,j) with both signs negative") {
        auto G = build_group("quaternion");
        const int i = G.element_index("i"), j = G.element_index("j");
        auto verdict = covering_orientable(G, mv({i, j}, {-1, -1}));
        REQUIRE(verdict.orientable);
        CHECK(verdict.character->value(i) == -1);
        CHECK(verdict.character->value(j) == -1);
    }

    SUBCASE("dihedral:3 mixed signs are nonorientable with a checkable witness") {
        auto G = build_group("dihedral:3");
        const int s1 = G.element_index("s1");
        const MarkedVector x = mv({s1, G.mul(s1, G.element_index("s2"))}, {+1, -1});
        auto verdict = covering_orientable(G, x);
        REQUIRE_FALSE(verdict.orientable);
        REQUIRE(verdict.witness_cycle.has_value());
        CHECK(word_sign(verdict.witness_cycle->word, x.v) == -1);
    }

    SUBCASE("returned characters send each tuple entry to its sign") {
        for (const auto& desc : {"dihedral:4", "abelian:2,2"}) {
            auto G = build_group(desc);
            auto chars = homs_to_C2(G);
            auto tuple = minimal_generating_tuple(G);
            for (const auto& chr : chars) {
                MarkedVector x{tuple, {}};
                for (int e : tuple) x.v.push_back(static_cast<std::int8_t>(chr.value(e)));
                auto verdict = covering_orientable(G, x);
                REQUIRE(verdict.orientable);
                CHECK(*verdict.character == chr);
            }
        }
    }

    SUBCASE("verdict is independent of the spanning-tree root") {
        auto G = build_group("dihedral:4");
        const int s1 = G.element_index("s1"), s2 = G.element_index("s2");
        for (int v1 : {+1, -1})
            for (int v2 : {+1, -1}) {
                const MarkedVector x = mv({s1, s2}, {v1, v2});
                auto base = covering_orientable(G, x, 0);
                for (int root = 1; root < G.order(); root++) {
                    auto other = covering_orientable(G, x, root);
                    CHECK(other.orientable == base.orientable);
                    if (base.orientable) CHECK(*other.character == *base.character);
                }
            }
    }
}

TEST_CASE("edge list export") {
    auto G = build_group("cyclic:2");
    auto graph = schreier_graph(G, {1});
    CHECK(edge_list_text(graph, {-1}) == "0 1 1 -1\n1 0 1 -1\n");
}

TEST_CASE("covering test agrees with the sign criterion on a sample sweep") {
    for (const auto& desc : {"dihedral:3", "quaternion", "abelian:2,2"}) {
        auto G = build_group(desc);
        auto result = oracle_check(G, 2);
        CAPTURE(desc);
        CHECK(result.mismatch == 0);
        CHECK(result.genus_ok);
        CHECK(result.states > 0);
        CHECK(result.agree == result.states);
    }
}
