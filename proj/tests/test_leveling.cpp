#include "makergame/errors.hpp"
#include "makergame/leveling.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace makergame;

TEST_CASE("paper_r values") {
    CHECK(paper_r(1) == 3);
    CHECK(paper_r(2) == 696);
    CHECK(paper_r(3) == 17835);
    CHECK_THROWS_AS(paper_r(0), LevelingError);
}

TEST_CASE("validate_leveling on hand levelings") {
    auto c6 = TargetGraph::cycle(6);
    Leveling good{{1, 2, 3, 1, 2, 3}, 3};
    CHECK(validate_leveling(c6, good).empty());

    auto c4 = TargetGraph::cycle(4);
    Leveling bad{{1, 2, 1, 2}, 2};
    auto viol = validate_leveling(c4, bad);
    REQUIRE(viol.size() == 2);
    CHECK(viol[0].u == 0);
    CHECK(viol[0].v == 2);
    CHECK(viol[1].u == 1);
    CHECK(viol[1].v == 3);

    // injective levelings are always valid
    Leveling inj{{1, 2, 3, 4}, 4};
    CHECK(validate_leveling(c4, inj).empty());
}

TEST_CASE("greedy leveling") {
    auto c6 = TargetGraph::cycle(6);
    Leveling l = level_greedy(c6);
    CHECK(l.levels == std::vector<int>{1, 2, 3, 1, 2, 3});
    CHECK(l.r <= 5); // d^2 + 1
    CHECK(validate_leveling(c6, l).empty());

    auto c4 = TargetGraph::cycle(4);
    Leveling l4 = level_greedy(c4);
    CHECK(std::set<int>(l4.levels.begin(), l4.levels.end()).size() == 4);

    auto c3 = TargetGraph::cycle(3);
    Leveling l3 = level_greedy(c3);
    CHECK(std::set<int>(l3.levels.begin(), l3.levels.end()).size() == 3);
}

TEST_CASE("lll leveling") {
    auto edge = TargetGraph::single_edge();
    Leveling le = level_lll(edge, 5);
    CHECK(le.levels[0] != le.levels[1]);
    CHECK(le.r == 3); // paper_r(1)

    auto c6 = TargetGraph::cycle(6);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        CHECK(validate_leveling(c6, level_lll(c6, seed)).empty());

    // diameter 2 forces all levels distinct
    auto pet = TargetGraph::petersen();
    Leveling lp = level_lll(pet, 3);
    CHECK(std::set<int>(lp.levels.begin(), lp.levels.end()).size() == 10);

    // deterministic per seed
    CHECK(level_lll(c6, 11).levels == level_lll(c6, 11).levels);
}

TEST_CASE("levelings on random regular graphs") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        int d = 2 + static_cast<int>(seed % 2);
        int n = 10 + static_cast<int>(seed % 20);
        if (n * d % 2) ++n;
        auto g = TargetGraph::random_regular(n, d, seed);

        Leveling lg = level_greedy(g);
        CHECK(validate_leveling(g, lg).empty());
        CHECK(lg.r <= d * d + 1);

        Leveling ll = level_lll(g, seed);
        CHECK(validate_leveling(g, ll).empty());

        // distance >= 3 implies: no adjacent pair shares a level, no
        // same-level pair shares a common neighbor
        for (const Leveling& l : {lg, ll}) {
            for (auto [u, v] : g.edges()) CHECK(l.level_of(u) != l.level_of(v));
            for (Vertex w = 0; w < n; ++w) {
                auto nb = g.neighbors(w);
                for (std::size_t i = 0; i < nb.size(); ++i)
                    for (std::size_t j = i + 1; j < nb.size(); ++j)
                        CHECK(l.level_of(nb[i]) != l.level_of(nb[j]));
            }
        }
    }
}

TEST_CASE("leveling text round trip") {
    auto c6 = TargetGraph::cycle(6);
    Leveling l = level_greedy(c6);
    Leveling back = Leveling::from_text(l.to_text(), 6);
    CHECK(back.levels == l.levels);
}
