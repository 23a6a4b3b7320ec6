#include <doctest.h>

#include "coopgame/dependency.hpp"
#include "fixtures.hpp"

using namespace coopgame;
using namespace coopgame::fixtures;

TEST_CASE("dependence in the four-cycle fixture") {
    Game g = four_cycle_game();
    // 0 and 2 share no MWC but 0's contribution to {1,3} changes when 2 arrives
    CHECK(depends(g, 0, 2));
    CHECK(depends(g, 1, 3));
    CHECK(depends(g, 0, 1));
    // smallest witness for (0,2): 0 pivots for {1} but not for {1,2}
    CHECK(depends_witness(g, 0, 2).value() == Coalition::of({1}));
    CHECK(depends_witness(g, 0, 1).value() == Coalition());

    CHECK(positively_depends(g, 0, 1));
    CHECK(positively_depends(g, 0, 3));
    CHECK(!positively_depends(g, 0, 2));
    CHECK(!positively_depends(g, 1, 3));
}

TEST_CASE("additive games have no dependencies") {
    Game g = additive_game({rat(1), rat(2), rat(0), rat(5, 2)});
    for (player_id i = 0; i < 4; ++i)
        for (player_id j = i + 1; j < 4; ++j) {
            CHECK(!depends(g, i, j));
            CHECK(!positively_depends(g, i, j));
        }
}

TEST_CASE("zero-weight players never matter") {
    Game g = Game::weighted_voting({1, 1, 0}, 2);
    CHECK(!depends(g, 0, 2));
    CHECK(!depends_wvg(g, 0, 2));
    CHECK(depends(g, 0, 1));
}

TEST_CASE("pair argument validation") {
    Game g = veto_wvg();
    CHECK_THROWS_AS(depends(g, 1, 1), domain_error);
    CHECK_THROWS_AS(positively_depends(g, 0, 3), domain_error);
    CHECK_THROWS_AS(depends_wvg(g, 2, 2), domain_error);
    Game big = Game::hypergraph(22, {{Coalition::of({0, 1}), rat(1)}});
    CHECK_THROWS_AS(depends(big, 0, 1), size_guard_error);
}

TEST_CASE("simple-game witness search equals the general detector") {
    Game g = veto_wvg();
    CHECK(positively_depends_simple(g, 0, 1));  // S = {}: {0,1} wins, {0},{1} lose
    CHECK(!positively_depends_simple(g, 1, 2));
    Game ex1 = four_cycle_game();
    for (player_id i = 0; i < 4; ++i)
        for (player_id j = i + 1; j < 4; ++j)
            CHECK(positively_depends_simple(ex1, i, j) == positively_depends(ex1, i, j));

    Game nonsimple = Game::induced_subgraph(3, {{0, 1, rat(3)}});
    CHECK_THROWS_AS(positively_depends_simple(nonsimple, 0, 1), domain_error);
}

TEST_CASE("weighted voting windows") {
    Game g = veto_wvg();
    CHECK(depends_wvg(g, 0, 1));  // window (a) = [0,1), S = {}
    CHECK(depends_wvg(g, 1, 2));  // window (b) = [2,3), S = {0}
    CHECK(positively_depends_wvg(g, 0, 1));
    CHECK(positively_depends_wvg(g, 0, 2));
    CHECK(!positively_depends_wvg(g, 1, 2));
}

TEST_CASE("windowed detectors agree with brute force on random games") {
    Xoshiro256 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 6));
        Game g = random_wvg(rng, n, 9);
        for (player_id i = 0; i < n; ++i)
            for (player_id j = i + 1; j < n; ++j) {
                CAPTURE(trial);
                CAPTURE(i);
                CAPTURE(j);
                CHECK(depends_wvg(g, i, j) == depends(g, i, j));
                CHECK(positively_depends_wvg(g, i, j) == positively_depends(g, i, j));
                CHECK(positively_depends_simple(g, i, j) == positively_depends(g, i, j));
            }
    }
}

TEST_CASE("dependence is symmetric") {
    Xoshiro256 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 4));
        Game g = random_mwc_game(rng, n, 3, 4);
        for (player_id i = 0; i < n; ++i)
            for (player_id j = 0; j < n; ++j) {
                if (i == j) continue;
                CHECK(depends(g, i, j) == depends(g, j, i));
                CHECK(positively_depends(g, i, j) == positively_depends(g, j, i));
            }
    }
}

TEST_CASE("induced subgraph dependence reads off the edge weight") {
    Game g = Game::induced_subgraph(4, {{0, 1, rat(5)}, {1, 2, rat(-1)}, {2, 3, rat(0)}});
    CHECK(depends_isg(g, 0, 1).depends);
    CHECK(depends_isg(g, 0, 1).positive);
    CHECK(depends_isg(g, 1, 2).depends);
    CHECK(!depends_isg(g, 1, 2).positive);
    CHECK(!depends_isg(g, 0, 3).depends);
    CHECK(!depends_isg(g, 2, 3).depends);  // explicit zero weight

    // the rule must match the brute-force detectors
    for (player_id i = 0; i < 4; ++i)
        for (player_id j = i + 1; j < 4; ++j) {
            CHECK(depends_isg(g, i, j).depends == depends(g, i, j));
            CHECK(depends_isg(g, i, j).positive == positively_depends(g, i, j));
        }
}

TEST_CASE("dependency graphs of the four-cycle fixture") {
    Game g = four_cycle_game();
    DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
    DependencyGraph full = dependency_graph(g, Flavor::Full);

    // supermodular graph is the 4-cycle 0-1-2-3-0
    CHECK(plus.graph.has_edge(0, 1));
    CHECK(plus.graph.has_edge(1, 2));
    CHECK(plus.graph.has_edge(2, 3));
    CHECK(plus.graph.has_edge(0, 3));
    CHECK(!plus.graph.has_edge(0, 2));
    CHECK(!plus.graph.has_edge(1, 3));

    // full graph adds both chords: K4
    for (player_id i = 0; i < 4; ++i)
        for (player_id j = i + 1; j < 4; ++j) CHECK(full.graph.has_edge(i, j));

    Degrees dplus = degrees(plus), dfull = degrees(full);
    CHECK(dplus.per_player == std::vector<int>{2, 2, 2, 2});
    CHECK(dplus.max == 2);
    CHECK(dfull.per_player == std::vector<int>{3, 3, 3, 3});
    CHECK(dfull.max == 3);
}

TEST_CASE("additive game has an edgeless dependency graph") {
    Game g = additive_game({rat(2), rat(3), rat(1)});
    Degrees d = degrees(dependency_graph(g, Flavor::Full));
    CHECK(d.per_player == std::vector<int>{0, 0, 0});
    CHECK(d.max == 0);
}

TEST_CASE("supermodular edges are a subset of full edges") {
    Xoshiro256 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 4));
        Game g = trial % 2 == 0 ? random_mwc_game(rng, n, 3, 4) : random_wvg(rng, n, 9);
        DependencyGraph full = dependency_graph(g, Flavor::Full);
        DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
        CHECK(full.graph.contains_edges_of(plus.graph));
    }
}

TEST_CASE("dummy characterization") {
    Game g = Game::weighted_voting({1, 1, 0}, 2);
    DependencyGraph full = dependency_graph(g, Flavor::Full);
    DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
    CHECK(is_dummy(g, full, 2));
    CHECK(is_dummy(g, plus, 2));
    CHECK(!is_dummy(g, full, 0));

    Game ex1 = four_cycle_game();
    DependencyGraph ex1full = dependency_graph(ex1, Flavor::Full);
    CHECK(!is_dummy(ex1, ex1full, 0));

    // v({i}) != 0 alone rules a player out
    Game solo = Game::weighted_voting({1, 1}, 1);
    DependencyGraph sfull = dependency_graph(solo, Flavor::Full);
    CHECK(solo.value(Coalition::single(0)) != 0);
    CHECK(!is_dummy(solo, sfull, 0));
}

TEST_CASE("dummy test agrees with the definitional check") {
    Xoshiro256 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 5));
        Game g = trial % 2 == 0 ? random_mwc_game(rng, n, 3, 5) : random_wvg(rng, n, 6);
        DependencyGraph full = dependency_graph(g, Flavor::Full);
        DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
        for (player_id i = 0; i < n; ++i) {
            bool definitional = true;
            for_each_submask(Coalition::full(n).without(i), [&](Coalition s) {
                if (g.marginal(i, s) != 0) definitional = false;
            });
            CHECK(is_dummy(g, full, i) == definitional);
            CHECK(is_dummy(g, plus, i) == definitional);
        }
    }
}

TEST_CASE("veto players") {
    CHECK(veto_players(veto_wvg()) == Coalition::of({0}));
    CHECK(veto_players(four_cycle_game()) == Coalition());
    CHECK(veto_players(unanimity_game(5)) == Coalition::full(5));
    CHECK_THROWS_AS(veto_players(Game::induced_subgraph(2, {{0, 1, rat(3)}})), domain_error);
    // no winning coalition at all: vacuously everyone is a veto player
    CHECK(veto_players(Game::mwc_list(3, {})) == Coalition::full(3));
}

TEST_CASE("veto players positively depend on every non-dummy") {
    Xoshiro256 rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 4));
        Game g = trial % 2 == 0 ? random_mwc_game(rng, n, 3, 4) : random_wvg(rng, n, 5);
        if (g.value01(Coalition::full(n)) != 1) continue;
        DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
        Coalition veto = veto_players(g);
        for (player_id v : veto.members())
            for (player_id j = 0; j < n; ++j) {
                if (j == v || is_dummy(g, plus, j)) continue;
                CAPTURE(trial);
                CHECK(plus.graph.has_edge(v, j));
            }
    }
}

TEST_CASE("minimal winning coalitions via the supermodular graph") {
    Game ex1 = four_cycle_game();
    auto mwcs = minimal_winning_coalitions(ex1, dependency_graph(ex1, Flavor::Supermodular));
    REQUIRE(mwcs.size() == 4);
    CHECK(mwcs[0] == Coalition::of({0, 1}));
    CHECK(mwcs[1] == Coalition::of({1, 2}));
    CHECK(mwcs[2] == Coalition::of({0, 3}));
    CHECK(mwcs[3] == Coalition::of({2, 3}));

    Game g = veto_wvg();
    auto vm = minimal_winning_coalitions(g, dependency_graph(g, Flavor::Supermodular));
    REQUIRE(vm.size() == 2);
    CHECK(vm[0] == Coalition::of({0, 1}));
    CHECK(vm[1] == Coalition::of({0, 2}));

    Game zero = Game::mwc_list(3, {});
    CHECK(minimal_winning_coalitions(zero, dependency_graph(zero, Flavor::Supermodular)).empty());

    // flavor and size checks
    CHECK_THROWS_AS(minimal_winning_coalitions(g, dependency_graph(g, Flavor::Full)),
                    domain_error);
}

TEST_CASE("enumerated MWCs equal brute-force enumeration") {
    Xoshiro256 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 5));
        Game g = trial % 2 == 0 ? random_mwc_game(rng, n, 4, 5) : random_wvg(rng, n, 7);
        auto fast = minimal_winning_coalitions(g, dependency_graph(g, Flavor::Supermodular));

        std::vector<Coalition> brute;
        const std::uint64_t all = Coalition::full(n).bits;
        for (std::uint64_t m = 1; m <= all; ++m) {
            Coalition s(m);
            if (g.value01(s) != 1) continue;
            bool minimal = true;
            for (player_id i : s.members())
                if (g.value01(s.without(i)) != 0) minimal = false;
            if (minimal) brute.push_back(s);
        }
        REQUIRE(fast.size() == brute.size());
        for (std::size_t k = 0; k < fast.size(); ++k) CHECK(fast[k] == brute[k]);
    }
}

TEST_CASE("supermodular edges coincide with MWC co-membership") {
    Xoshiro256 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + static_cast<int>(rng.bounded(0, 5));
        Game g = trial % 2 == 0 ? random_mwc_game(rng, n, 3, 5) : random_wvg(rng, n, 6);
        DependencyGraph plus = dependency_graph(g, Flavor::Supermodular);
        auto mwcs = minimal_winning_coalitions(g, plus);
        for (player_id i = 0; i < n; ++i)
            for (player_id j = i + 1; j < n; ++j) {
                bool together = false;
                for (Coalition m : mwcs)
                    if (m.contains(i) && m.contains(j)) together = true;
                CHECK(plus.graph.has_edge(i, j) == together);
            }
    }
}

TEST_CASE("MWC enumeration tolerates a supergraph of the true graph") {
    Game g = four_cycle_game();
    Graph complete(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) complete.add_edge(i, j);
    DependencyGraph fat{Flavor::Supermodular, complete};
    auto mwcs = minimal_winning_coalitions(g, fat);
    CHECK(mwcs.size() == 4);
}
