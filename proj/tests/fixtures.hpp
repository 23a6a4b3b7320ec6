#ifndef COOPGAME_TESTS_FIXTURES_HPP
#define COOPGAME_TESTS_FIXTURES_HPP

#include <vector>

#include "coopgame/game.hpp"
#include "coopgame/prng.hpp"

namespace coopgame::fixtures {

// 4-player simple game with MWCs {0,1},{1,2},{2,3},{0,3}.
inline Game four_cycle_game() {
    return Game::mwc_list(4, {Coalition::of({0, 1}), Coalition::of({1, 2}),
                              Coalition::of({2, 3}), Coalition::of({0, 3})});
}

// [3; (2,1,1); 3]: player 0 is a veto player; MWCs {0,1},{0,2}.
inline Game veto_wvg() { return Game::weighted_voting({2, 1, 1}, 3); }

// v(S) = sum of per-player constants.
inline Game additive_game(const std::vector<Rat>& c) {
    int n = static_cast<int>(c.size());
    std::vector<Rat> table(std::size_t{1} << n, Rat(0));
    for (std::size_t m = 1; m < table.size(); ++m)
        for (player_id p : Coalition(m).members()) table[m] += c[p];
    return Game::explicit_table(n, std::move(table));
}

// Single MWC = the grand coalition.
inline Game unanimity_game(int n) { return Game::mwc_list(n, {Coalition::full(n)}); }

inline Game random_wvg(Xoshiro256& rng, int n, int w_max) {
    std::vector<std::int64_t> w(n);
    std::int64_t total = 0;
    for (auto& x : w) {
        x = static_cast<std::int64_t>(rng.bounded(0, w_max));
        total += x;
    }
    std::int64_t quota = std::max<std::int64_t>(1, (total + 1) / 2);
    return Game::weighted_voting(std::move(w), quota);
}

inline Game random_mwc_game(Xoshiro256& rng, int n, int max_size, int count) {
    std::vector<Coalition> kept;
    for (int t = 0; t < count; ++t) {
        int size = static_cast<int>(rng.bounded(1, std::min(max_size, n)));
        Coalition c;
        while (c.size() < size) c = c.with(static_cast<player_id>(rng.bounded(0, n - 1)));
        bool comparable = false;
        for (Coalition k : kept)
            if (k.subset_of(c) || c.subset_of(k)) { comparable = true; break; }
        if (!comparable) kept.push_back(c);
    }
    return Game::mwc_list(n, std::move(kept));
}

}  // namespace coopgame::fixtures

#endif
