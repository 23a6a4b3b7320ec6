#include "coopgame/game.hpp"

#include <string>

#include "coopgame/errors.hpp"

namespace coopgame {

const char* backend_name(BackendKind k) {
    switch (k) {
        case BackendKind::WeightedVoting: return "wvg";
        case BackendKind::InducedSubgraph: return "isg";
        case BackendKind::Hypergraph: return "hypergraph";
        case BackendKind::Explicit: return "explicit";
        case BackendKind::MwcList: return "mwc";
    }
    return "?";
}

namespace {

void check_player_count(int n) {
    if (n < 1 || n > kMaxPlayers)
        throw validation_error("player count " + std::to_string(n) + " outside [1," +
                               std::to_string(kMaxPlayers) + "]");
}

void check_player(player_id p, int n, const char* what) {
    if (p < 0 || p >= n)
        throw validation_error(std::string(what) + ": player " + std::to_string(p) +
                               " outside [0," + std::to_string(n) + ")");
}

}  // namespace

Game Game::weighted_voting(std::vector<std::int64_t> weights, std::int64_t quota) {
    int n = static_cast<int>(weights.size());
    check_player_count(n);
    if (quota < 1)
        throw validation_error("quota must be >= 1 (quota 0 would make the empty coalition win)");
    __int128 total = 0;
    for (auto w : weights) {
        if (w < 0) throw validation_error("negative weight in weighted voting game");
        total += w;
    }
    if (total > (__int128{1} << 62))
        throw validation_error("total weight too large for 64-bit weight sums");
    return Game(n, WeightedVotingGame{std::move(weights), quota});
}

Game Game::induced_subgraph(int n, std::vector<std::tuple<player_id, player_id, Rat>> edges) {
    check_player_count(n);
    InducedSubgraphGame g;
    for (auto& [u, v, w] : edges) {
        check_player(u, n, "induced subgraph edge");
        check_player(v, n, "induced subgraph edge");
        if (u == v)
            throw validation_error("self-loop on player " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!g.edges.emplace(key, w).second)
            throw validation_error("duplicate edge {" + std::to_string(key.first) + "," +
                                   std::to_string(key.second) + "}");
    }
    return Game(n, std::move(g));
}

Game Game::hypergraph(int n, std::vector<std::pair<Coalition, Rat>> hyperedges) {
    check_player_count(n);
    for (auto& [e, w] : hyperedges) {
        if (e.empty()) throw validation_error("empty hyperedge");
        require_in_range(e, n, "hyperedge");
    }
    return Game(n, HypergraphGame{std::move(hyperedges)});
}

Game Game::explicit_table(int n, std::vector<Rat> values) {
    check_player_count(n);
    if (n > kEnumGuard)
        throw validation_error("explicit table limited to " + std::to_string(kEnumGuard) +
                               " players");
    if (values.size() != (std::size_t{1} << n))
        throw validation_error("explicit table needs 2^n entries, got " +
                               std::to_string(values.size()));
    if (values[0] != 0) throw validation_error("explicit table has v(empty) != 0");
    return Game(n, ExplicitGame{std::move(values)});
}

Game Game::mwc_list(int n, std::vector<Coalition> mwcs) {
    check_player_count(n);
    for (std::size_t a = 0; a < mwcs.size(); ++a) {
        if (mwcs[a].empty()) throw validation_error("empty minimal winning coalition");
        require_in_range(mwcs[a], n, "minimal winning coalition");
        for (std::size_t b = 0; b < mwcs.size(); ++b) {
            if (a != b && mwcs[a].subset_of(mwcs[b]))
                throw validation_error("MWC list is not an antichain: " + mwcs[a].to_string() +
                                       " is contained in " + mwcs[b].to_string());
        }
    }
    return Game(n, MwcListGame{std::move(mwcs)});
}

Rat Game::value(Coalition s) const {
    require_in_range(s, n_, "value");
    switch (kind()) {
        case BackendKind::WeightedVoting:
        case BackendKind::MwcList:
            return Rat(value01(s));
        case BackendKind::InducedSubgraph: {
            const auto& g = as<InducedSubgraphGame>();
            Rat total = 0;
            for (const auto& [uv, w] : g.edges)
                if (s.contains(uv.first) && s.contains(uv.second)) total += w;
            return total;
        }
        case BackendKind::Hypergraph: {
            const auto& g = as<HypergraphGame>();
            Rat total = 0;
            for (const auto& [e, w] : g.hyperedges)
                if (e.subset_of(s)) total += w;
            return total;
        }
        case BackendKind::Explicit:
            return as<ExplicitGame>().values[s.bits];
    }
    throw error("unreachable");
}

int Game::value01(Coalition s) const {
    switch (kind()) {
        case BackendKind::WeightedVoting: {
            const auto& g = as<WeightedVotingGame>();
            std::int64_t total = 0;
            for (std::uint64_t m = s.bits; m;) {
                total += g.weights[std::countr_zero(m)];
                m &= m - 1;
            }
            return total >= g.quota ? 1 : 0;
        }
        case BackendKind::MwcList: {
            for (Coalition mwc : as<MwcListGame>().mwcs)
                if (mwc.subset_of(s)) return 1;
            return 0;
        }
        default:
            return value(s) == 1 ? 1 : 0;
    }
}

Rat Game::marginal(player_id i, Coalition s) const {
    if (s.contains(i))
        throw domain_error("marginal: player " + std::to_string(i) + " already in " +
                           s.to_string());
    return value(s.with(i)) - value(s);
}

int Game::marginal01(player_id i, Coalition s) const {
    if (s.contains(i))
        throw domain_error("marginal: player " + std::to_string(i) + " already in " +
                           s.to_string());
    return value01(s.with(i)) - value01(s);
}

bool Game::check_monotone(bool force) const {
    std::int8_t cached = monotone_.load();
    if (cached >= 0) return cached == 1;

    bool result;
    switch (kind()) {
        case BackendKind::WeightedVoting:
        case BackendKind::MwcList:
            result = true;  // thresholds of non-negative weights; up-closed families
            break;
        case BackendKind::InducedSubgraph: {
            // Adding i to {j} changes v by w(i,j), so any negative edge is
            // a monotonicity violation and all-non-negative edges never are.
            result = true;
            for (const auto& [uv, w] : as<InducedSubgraphGame>().edges)
                if (w < 0) { result = false; break; }
            break;
        }
        default: {
            if (n_ > kEnumGuard && !force)
                throw size_guard_error("check_monotone enumerates 2^n coalitions; n = " +
                                       std::to_string(n_) + " exceeds " +
                                       std::to_string(kEnumGuard));
            result = true;
            const std::uint64_t all = Coalition::full(n_).bits;
            for (std::uint64_t m = 0; m <= all && result; ++m) {
                Coalition s(m);
                Rat vs = value(s);
                for (int i = 0; i < n_ && result; ++i)
                    if (!s.contains(i) && value(s.with(i)) < vs) result = false;
                if (m == all) break;
            }
            break;
        }
    }
    monotone_.store(result ? 1 : 0);
    return result;
}

bool Game::check_simple(bool force) const {
    std::int8_t cached = simple_.load();
    if (cached >= 0) return cached == 1;

    bool result;
    switch (kind()) {
        case BackendKind::WeightedVoting:
        case BackendKind::MwcList:
            result = true;
            break;
        default: {
            if (!check_monotone(force)) {
                result = false;
                break;
            }
            if (n_ > kEnumGuard && !force)
                throw size_guard_error("check_simple enumerates 2^n coalitions; n = " +
                                       std::to_string(n_) + " exceeds " +
                                       std::to_string(kEnumGuard));
            result = true;
            const std::uint64_t all = Coalition::full(n_).bits;
            for (std::uint64_t m = 0;; ++m) {
                Rat v = value(Coalition(m));
                if (v != 0 && v != 1) { result = false; break; }
                if (m == all) break;
            }
            break;
        }
    }
    simple_.store(result ? 1 : 0);
    return result;
}

}  // namespace coopgame
