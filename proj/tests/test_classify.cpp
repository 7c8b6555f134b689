#include <doctest.h>

#include <random>
#include <set>

#include "freeact/classify.hpp"
#include "freeact/schreier.hpp"

using namespace freeact;

namespace {

MarkedVector mv(std::vector<int> g, std::vector<int> v) {
    MarkedVector x;
    x.g = std::move(g);
    for (int s : v) x.v.push_back(static_cast<std::int8_t>(s));
    return x;
}

}  // namespace

TEST_CASE("sign criterion") {
    SUBCASE("all-ones is orientation preserving for any group") {
        for (const auto& desc : {"cyclic:6", "dihedral:5", "quaternion"}) {
            auto G = build_group(desc);
            auto tuple = minimal_generating_tuple(G);
            auto res = orientability_class(G, MarkedVector{tuple, OrientVector(tuple.size(), 1)});
            CHECK(res.kind == ActionKind::OrientationPreserving);
            CHECK(res.character->trivial());
        }
    }
    SUBCASE("quaternion (i,j) with signs (-,+) reverses orientation") {
        auto G = build_group("quaternion");
        auto res = orientability_class(G, mv({G.element_index("i"), G.element_index("j")},
                                             {-1, +1}));
        CHECK(res.kind == ActionKind::OrientationReversing);
        REQUIRE(res.character.has_value());
        CHECK(res.character->value(G.element_index("i")) == -1);
        CHECK(res.character->value(G.element_index("j")) == +1);
    }
    SUBCASE("dihedral:3 mixed signs admit no character") {
        auto G = build_group("dihedral:3");
        const int s1 = G.element_index("s1");
        auto res = orientability_class(
            G, mv({s1, G.mul(s1, G.element_index("s2"))}, {+1, -1}));
        CHECK(res.kind == ActionKind::Nonorientable);
        CHECK_FALSE(res.character.has_value());
    }
}

TEST_CASE("classification counts for the worked groups") {
    SUBCASE("quaternion n=2") {
        auto report = classify_actions(build_group("quaternion"), 2);
        CHECK(report.genus == 9);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 3);
        CHECK(report.or_weak == 1);
        CHECK(report.nonor_classes == 0);
        CHECK(report.op_weak == 1);
    }
    SUBCASE("dihedral:6 n=2") {
        auto report = classify_actions(build_group("dihedral:6"), 2);
        CHECK(report.genus == 13);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 3);
        CHECK(report.or_weak == 2);
        CHECK(report.nonor_classes == 0);
    }
    SUBCASE("abelian:4,2 n=2") {
        auto report = classify_actions(build_group("abelian:4,2"), 2);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 3);
        CHECK(report.or_weak == 2);
        CHECK(report.nonor_classes == 0);
    }
}

TEST_CASE("classes carry consistent tags") {
    for (const auto& desc : {"dihedral:3", "quaternion"}) {
        auto report = classify_actions(build_group(desc), 2);
        auto G = build_group(desc);
        CAPTURE(desc);
        for (const auto& cls : report.classes) {
            const bool all_ones =
                std::all_of(cls.rep.v.begin(), cls.rep.v.end(), [](auto s) { return s == 1; });
            CHECK((cls.kind == ActionKind::OrientationPreserving) == all_ones);
            CHECK((cls.kind != ActionKind::Nonorientable) == cls.character.has_value());
            if (cls.character)
                for (int k = 0; k < cls.rep.n(); k++)
                    CHECK(cls.character->value(cls.rep.g[k]) == cls.rep.v[k]);
        }
    }
}

TEST_CASE("character is constant on orbits and covariant under automorphisms") {
    SUBCASE("orbit invariance, exhaustive over small partitions") {
        for (const auto& desc : {"cyclic:2", "dihedral:3", "quaternion"}) {
            auto G = build_group(desc);
            auto chars = homs_to_C2(G);
            auto part = enumerate_orbits(G, 2, EquivMode::Equivalence, kDefaultStateCap, true);
            tag_partition(G, part);
            StateCodec codec(G, 2);
            CAPTURE(desc);
            for (std::uint64_t s = 0; s < codec.state_count(); s++) {
                if (part.membership[s] < 0) continue;
                const auto& orbit = part.orbits[static_cast<size_t>(part.membership[s])];
                auto res = orientability_class(G, codec.decode(s), chars);
                CHECK(res.kind == *orbit.kind);
                CHECK(res.character == orbit.character);
            }
        }
    }

    SUBCASE("applying an automorphism composes the character with its inverse") {
        for (const auto& desc : {"quaternion", "dihedral:4"}) {
            auto G = build_group(desc);
            auto chars = homs_to_C2(G);
            auto tuple = minimal_generating_tuple(G);
            CAPTURE(desc);
            for (const auto& chr : chars) {
                MarkedVector x{tuple, {}};
                for (int e : tuple) x.v.push_back(static_cast<std::int8_t>(chr.value(e)));
                for (const auto& alpha : automorphisms(G)) {
                    MarkedVector y = x;
                    for (int& e : y.g) e = alpha(e);
                    auto res = orientability_class(G, y, chars);
                    REQUIRE(res.character.has_value());
                    const auto alpha_inv = alpha.inverse();
                    for (int e = 0; e < G.order(); e++)
                        CHECK(res.character->value(e) == chr.value(alpha_inv(e)));
                }
            }
        }
    }
}

TEST_CASE("structural count and nonorientable existence") {
    struct Config {
        const char* desc;
        int n;
    };
    for (const Config& cfg : {Config{"cyclic:2", 2}, Config{"cyclic:5", 1}, Config{"dihedral:3", 2},
                              Config{"dihedral:4", 2}, Config{"dihedral:5", 2},
                              Config{"quaternion", 2}, Config{"quaternion", 3},
                              Config{"abelian:2,2", 2}, Config{"abelian:4,2", 2}}) {
        auto G = build_group(cfg.desc);
        auto report = classify_actions(G, cfg.n);
        const auto e_n = nielsen_classes(G, cfg.n).size();
        const auto homs = homs_to_C2(G).size();
        CAPTURE(cfg.desc);
        CAPTURE(cfg.n);
        CHECK(report.op_classes + report.or_classes ==
              static_cast<std::int64_t>(e_n * homs));
        // nonorientable classes exist exactly when n exceeds the C2 rank
        if (cfg.n >= report.mu_value)
            CHECK((report.nonor_classes > 0) == (cfg.n > report.h1_rank));
    }
}

TEST_CASE("a group with no index-2 subgroup never reverses orientation") {
    auto G = build_group("perm:(1 2 3),(1 2)(3 4)");  // alternating on 4 points
    REQUIRE(G.order() == 12);
    CHECK(homs_to_C2(G).size() == 1);
    CHECK(h1_rank(G) == 0);
    const auto report = classify_actions(G, 2);
    CHECK(report.or_classes == 0);
    CHECK(report.or_weak == 0);
    CHECK(report.nonor_classes > 0);
    CHECK(report.op_classes ==
          static_cast<std::int64_t>(nielsen_classes(G, 2).size()));
}

TEST_CASE("invariant factors") {
    CHECK(invariant_factors(build_group("cyclic:12")) == std::vector<int>{12});
    CHECK(invariant_factors(build_group("abelian:2,6")) == std::vector<int>{6, 2});
    CHECK(invariant_factors(build_group("abelian:4,6")) == std::vector<int>{12, 2});
    CHECK(invariant_factors(build_group("abelian:2,2,2")) == std::vector<int>{2, 2, 2});
    CHECK(invariant_factors(build_group("cyclic:1")).empty());
    CHECK_THROWS_AS(invariant_factors(build_group("quaternion")), std::invalid_argument);
    CHECK_THROWS_AS(invariant_factors(build_group("dihedral:3")), std::invalid_argument);

    SUBCASE("perm-built abelian groups go through the element-order path") {
        CHECK(invariant_factors(build_group("perm:(1 2),(3 4)")) == std::vector<int>{2, 2});
        CHECK(invariant_factors(build_group("perm:(1 2 3 4)")) == std::vector<int>{4});
        CHECK(invariant_factors(build_group("perm:(1 2 3 4),(5 6)")) ==
              std::vector<int>{4, 2});
        CHECK(invariant_factors(build_group("perm:(1 2 3),(4 5)")) == std::vector<int>{6});
    }
}

TEST_CASE("abelian closed form") {
    SUBCASE("abelian:2,2 at n=2") {
        auto report = abelian_formula(build_group("abelian:2,2"), 2);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 3);
        CHECK(report.or_weak == 1);
        CHECK(report.nonor_classes == 0);
    }
    SUBCASE("cyclic:3 at n=1") {
        auto report = abelian_formula(build_group("cyclic:3"), 1);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 0);
        CHECK(report.nonor_classes == 1);
        CHECK(report.nonor_weak == 1);
    }
    SUBCASE("abelian:4,2 at n=3") {
        auto report = abelian_formula(build_group("abelian:4,2"), 3);
        CHECK(report.op_classes == 1);
        CHECK(report.or_classes == 3);
        CHECK(report.or_weak == 2);
        CHECK(report.nonor_classes == 1);
    }
    SUBCASE("rejects nonabelian groups") {
        CHECK_THROWS_AS(abelian_formula(build_group("quaternion"), 2), std::invalid_argument);
    }
    SUBCASE("matches enumeration on every abelian test group") {
        for (const auto& desc : {"cyclic:3", "cyclic:5", "cyclic:6", "abelian:2,2",
                                 "abelian:4,2", "abelian:2,2,2", "cyclic:1"}) {
            auto G = build_group(desc);
            const int m = mu(G);
            CAPTURE(desc);
            for (int n = m; n <= m + 1; n++)
                CHECK(abelian_formula(G, n).counts_equal(classify_actions(G, n)));
        }
    }
}

TEST_CASE("genus spectrum") {
    SUBCASE("quaternion up to 30") {
        auto s = genus_spectrum(build_group("quaternion"), 30);
        CHECK(s.orientation_preserving == std::vector<std::int64_t>{9, 17, 25});
        CHECK(s.orientation_reversing == std::vector<std::int64_t>{9, 17, 25});
        CHECK(s.nonorientable == std::vector<std::int64_t>{17, 25});
    }
    SUBCASE("cyclic:3 up to 10") {
        auto s = genus_spectrum(build_group("cyclic:3"), 10);
        CHECK(s.orientation_preserving == std::vector<std::int64_t>{1, 4, 7, 10});
        CHECK(s.orientation_reversing.empty());
        CHECK(s.nonorientable == std::vector<std::int64_t>{1, 4, 7, 10});
    }
    SUBCASE("dihedral:3 up to 20") {
        auto s = genus_spectrum(build_group("dihedral:3"), 20);
        CHECK(s.nonorientable == std::vector<std::int64_t>{7, 13, 19});
        CHECK(s.orientation_preserving == std::vector<std::int64_t>{7, 13, 19});
        CHECK(s.orientation_reversing == std::vector<std::int64_t>{7, 13, 19});
    }
}

TEST_CASE("single class check") {
    CHECK(single_class_check(build_group("quaternion"), 2));
    CHECK(single_class_check(build_group("dihedral:4"), 3));
    CHECK_FALSE(single_class_check(build_group("cyclic:5"), 1));
    // n > mu cases trigger the internal consistency cross-check
    CHECK(single_class_check(build_group("quaternion"), 3));
    CHECK(single_class_check(build_group("cyclic:6"), 2));
}

TEST_CASE("random-walk sign-criterion invariance across moves") {
    std::mt19937_64 rng(20250811);
    int cases = 0;
    for (const auto& desc : {"dihedral:5", "dihedral:8", "abelian:4,2", "quaternion",
                             "cyclic:12", "abelian:2,2,2"}) {
        auto G = build_group(desc);
        auto chars = homs_to_C2(G);
        std::uniform_int_distribution<int> elem(0, G.order() - 1);
        std::uniform_int_distribution<int> sign(0, 1);
        const int n = 3;
        auto moves = all_moves(n);
        std::uniform_int_distribution<size_t> pick_move(0, moves.size() - 1);
        for (int walk = 0; walk < 40; walk++) {
            MarkedVector x;
            do {
                x.g.clear();
                x.v.clear();
                for (int k = 0; k < n; k++) {
                    x.g.push_back(elem(rng));
                    x.v.push_back(sign(rng) ? 1 : -1);
                }
            } while (!generates(G, x.g));
            const auto base = orientability_class(G, x, chars);
            for (int step = 0; step < 60; step++) {
                x = apply_move(G, moves[pick_move(rng)], x);
                const auto res = orientability_class(G, x, chars);
                CHECK(res.kind == base.kind);
                CHECK(res.character == base.character);
                cases++;
            }
        }
    }
    CHECK(cases >= 10000);
}
