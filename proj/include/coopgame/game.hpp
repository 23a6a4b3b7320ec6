#ifndef COOPGAME_GAME_HPP
#define COOPGAME_GAME_HPP

#include <atomic>
#include <cstdint>
#include <map>
#include <utility>
#include <variant>
#include <vector>

#include "coopgame/coalition.hpp"
#include "coopgame/rational.hpp"

namespace coopgame {

// Enumeration-guarded operations refuse to run past this many players
// unless the caller explicitly forces them.
constexpr int kEnumGuard = 20;

// v(S) = 1 iff the total weight of S meets the quota. Weights are
// non-negative integers; quota >= 1 so that v(empty) = 0.
struct WeightedVotingGame {
    std::vector<std::int64_t> weights;
    std::int64_t quota = 1;

    bool operator==(const WeightedVotingGame&) const = default;
};

// v(S) = total weight of graph edges with both endpoints in S.
struct InducedSubgraphGame {
    // key is (u, v) with u < v
    std::map<std::pair<player_id, player_id>, Rat> edges;

    bool operator==(const InducedSubgraphGame&) const = default;
};

// v(S) = total weight of hyperedges fully contained in S. Rank-1
// hyperedges are permitted, with arbitrary weight.
struct HypergraphGame {
    std::vector<std::pair<Coalition, Rat>> hyperedges;

    bool operator==(const HypergraphGame&) const = default;
};

// Full 2^n table, indexed by coalition mask. Desk-scale oracle backend.
struct ExplicitGame {
    std::vector<Rat> values;

    bool operator==(const ExplicitGame&) const = default;
};

// Simple game given by its antichain of minimal winning coalitions:
// v(S) = 1 iff some listed coalition is a subset of S.
struct MwcListGame {
    std::vector<Coalition> mwcs;

    bool operator==(const MwcListGame&) const = default;
};

enum class BackendKind { WeightedVoting, InducedSubgraph, Hypergraph, Explicit, MwcList };

const char* backend_name(BackendKind k);

// A cooperative game (N, v): a player count plus one of the backend
// representations. Immutable after construction; value() is a pure
// function, so concurrent reads are safe. The monotone/simple flags are
// idempotent caches (computing twice is fine, torn state is not).
class Game {
public:
    using Backend =
        std::variant<WeightedVotingGame, InducedSubgraphGame, HypergraphGame, ExplicitGame, MwcListGame>;

    static Game weighted_voting(std::vector<std::int64_t> weights, std::int64_t quota);
    static Game induced_subgraph(int n, std::vector<std::tuple<player_id, player_id, Rat>> edges);
    static Game hypergraph(int n, std::vector<std::pair<Coalition, Rat>> hyperedges);
    static Game explicit_table(int n, std::vector<Rat> values);
    static Game mwc_list(int n, std::vector<Coalition> mwcs);

    Game(const Game& o) : n_(o.n_), backend_(o.backend_) { copy_flags(o); }
    Game& operator=(const Game& o) {
        n_ = o.n_;
        backend_ = o.backend_;
        copy_flags(o);
        return *this;
    }
    Game(Game&& o) noexcept : n_(o.n_), backend_(std::move(o.backend_)) { copy_flags(o); }
    Game& operator=(Game&& o) noexcept {
        n_ = o.n_;
        backend_ = std::move(o.backend_);
        copy_flags(o);
        return *this;
    }

    int n() const { return n_; }
    BackendKind kind() const { return static_cast<BackendKind>(backend_.index()); }
    const Backend& backend() const { return backend_; }

    template <typename T>
    const T& as() const { return std::get<T>(backend_); }

    // v(S). Throws domain_error if S has players outside [0, n).
    Rat value(Coalition s) const;

    // v(S) over {0,1} without rational temporaries. Callers must only use
    // this on simple games; for backends that are not simple by
    // construction it falls back on value().
    int value01(Coalition s) const;

    // v(S u {i}) - v(S). Throws domain_error if i is in S.
    Rat marginal(player_id i, Coalition s) const;
    // marginal() over simple games.
    int marginal01(player_id i, Coalition s) const;

    // True iff S subseteq T implies v(S) <= v(T). Structural for backends
    // where monotonicity is decided by the description (weighted voting,
    // MWC lists, induced subgraph); otherwise compares each S with S u {i}
    // over the full 2^n, guarded at kEnumGuard players.
    bool check_monotone(bool force = false) const;

    // True iff the game is monotone with values in {0,1}.
    bool check_simple(bool force = false) const;

    // Unsafe-assumption path: records the flags without verifying them.
    void assume_monotone(bool value) const { monotone_.store(value ? 1 : 0); }
    void assume_simple(bool value) const { simple_.store(value ? 1 : 0); }

    bool operator==(const Game& o) const { return n_ == o.n_ && backend_ == o.backend_; }

private:
    Game(int n, Backend b) : n_(n), backend_(std::move(b)) {}
    void copy_flags(const Game& o) {
        monotone_.store(o.monotone_.load());
        simple_.store(o.simple_.load());
    }

    int n_;
    Backend backend_;
    mutable std::atomic<std::int8_t> monotone_{-1};
    mutable std::atomic<std::int8_t> simple_{-1};
};

}  // namespace coopgame

#endif
