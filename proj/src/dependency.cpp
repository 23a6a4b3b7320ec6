#include "coopgame/dependency.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <string>
#include <thread>

namespace coopgame {

namespace {

void check_pair(const Game& g, player_id i, player_id j, const char* what) {
    if (i == j)
        throw domain_error(std::string(what) + ": players must be distinct, got " +
                           std::to_string(i) + " twice");
    if (i < 0 || i >= g.n() || j < 0 || j >= g.n())
        throw domain_error(std::string(what) + ": player outside [0," + std::to_string(g.n()) +
                           ")");
}

void check_enum_guard(const Game& g, bool force, const char* what) {
    if (g.n() > kEnumGuard && !force)
        throw size_guard_error(std::string(what) + " searches 2^(n-2) coalitions; n = " +
                               std::to_string(g.n()) + " exceeds " + std::to_string(kEnumGuard));
}

// Runs probe(k) for k in [0, count) and stores the results in a vector.
// Each slot is written by exactly one task, so the outcome does not
// depend on scheduling.
template <typename Probe>
std::vector<char> parallel_probe(std::size_t count, Probe&& probe) {
    std::vector<char> out(count, 0);
    unsigned threads = std::min<std::size_t>(std::thread::hardware_concurrency(), count);
    if (threads <= 1 || count < 32) {
        for (std::size_t k = 0; k < count; ++k) out[k] = probe(k) ? 1 : 0;
        return out;
    }
    std::vector<std::future<void>> tasks;
    for (unsigned t = 0; t < threads; ++t) {
        tasks.push_back(std::async(std::launch::async, [&, t] {
            for (std::size_t k = t; k < count; k += threads) out[k] = probe(k) ? 1 : 0;
        }));
    }
    for (auto& task : tasks) task.get();
    return out;
}

template <typename Pred>
std::optional<Coalition> find_witness(const Game& g, player_id i, player_id j, Pred&& differs) {
    Coalition rest = Coalition::full(g.n()).without(i).without(j);
    std::optional<Coalition> witness;
    for_each_subset_sized_lex(rest, [&](Coalition s) {
        if (differs(s)) {
            witness = s;
            return true;
        }
        return false;
    });
    return witness;
}

std::int64_t wvg_weight(const WeightedVotingGame& wv, Coalition s) {
    std::int64_t total = 0;
    for (player_id p : s.members()) total += wv.weights[p];
    return total;
}

// reach[w] = 1 iff some subset of `pool` has total weight w.
std::vector<char> subset_sum_table(const WeightedVotingGame& wv, Coalition pool) {
    std::int64_t total = wvg_weight(wv, pool);
    if (total > 100'000'000)
        throw size_guard_error("subset-sum table over total weight " + std::to_string(total) +
                               " is too large");
    std::vector<char> reach(static_cast<std::size_t>(total) + 1, 0);
    reach[0] = 1;
    for (player_id p : pool.members()) {
        std::int64_t w = wv.weights[p];
        if (w == 0) continue;
        for (std::int64_t s = total; s >= w; --s) reach[s] |= reach[s - w];
    }
    return reach;
}

bool any_reachable(const std::vector<char>& reach, std::int64_t lo, std::int64_t hi) {
    lo = std::max<std::int64_t>(lo, 0);
    hi = std::min<std::int64_t>(hi, static_cast<std::int64_t>(reach.size()));
    for (std::int64_t s = lo; s < hi; ++s)
        if (reach[s]) return true;
    return false;
}

const WeightedVotingGame& require_wvg(const Game& g, const char* what) {
    if (g.kind() != BackendKind::WeightedVoting)
        throw domain_error(std::string(what) + " requires a weighted voting game");
    return g.as<WeightedVotingGame>();
}

}  // namespace

std::optional<Coalition> depends_witness(const Game& g, player_id i, player_id j, bool force) {
    check_pair(g, i, j, "depends");
    check_enum_guard(g, force, "depends");
    return find_witness(g, i, j, [&](Coalition s) {
        return g.value(s.with(i).with(j)) - g.value(s.with(j)) !=
               g.value(s.with(i)) - g.value(s);
    });
}

bool depends(const Game& g, player_id i, player_id j, bool force) {
    return depends_witness(g, i, j, force).has_value();
}

std::optional<Coalition> positive_dependency_witness(const Game& g, player_id i, player_id j,
                                                     bool force) {
    check_pair(g, i, j, "positively_depends");
    check_enum_guard(g, force, "positively_depends");
    return find_witness(g, i, j, [&](Coalition s) {
        return g.value(s.with(i).with(j)) - g.value(s.with(j)) >
               g.value(s.with(i)) - g.value(s);
    });
}

bool positively_depends(const Game& g, player_id i, player_id j, bool force) {
    return positive_dependency_witness(g, i, j, force).has_value();
}

bool positively_depends_simple(const Game& g, player_id i, player_id j, bool force) {
    check_pair(g, i, j, "positively_depends_simple");
    if (!g.check_simple(force))
        throw domain_error("positively_depends_simple requires a simple game");
    check_enum_guard(g, force, "positively_depends_simple");
    return find_witness(g, i, j, [&](Coalition s) {
               return g.value01(s.with(i).with(j)) == 1 && g.value01(s.with(i)) == 0 &&
                      g.value01(s.with(j)) == 0;
           })
        .has_value();
}

bool depends_wvg(const Game& g, player_id i, player_id j) {
    const auto& wv = require_wvg(g, "depends_wvg");
    check_pair(g, i, j, "depends_wvg");
    Coalition rest = Coalition::full(g.n()).without(i).without(j);
    auto reach = subset_sum_table(wv, rest);
    std::int64_t wi = wv.weights[i], wj = wv.weights[j], q = wv.quota;
    return any_reachable(reach, q - wi - wj, q - std::max(wi, wj)) ||
           any_reachable(reach, q - std::min(wi, wj), q);
}

bool positively_depends_wvg(const Game& g, player_id i, player_id j) {
    const auto& wv = require_wvg(g, "positively_depends_wvg");
    check_pair(g, i, j, "positively_depends_wvg");
    Coalition rest = Coalition::full(g.n()).without(i).without(j);
    auto reach = subset_sum_table(wv, rest);
    std::int64_t wi = wv.weights[i], wj = wv.weights[j], q = wv.quota;
    return any_reachable(reach, q - wi - wj, q - std::max(wi, wj));
}

IsgDependence depends_isg(const Game& g, player_id i, player_id j) {
    if (g.kind() != BackendKind::InducedSubgraph)
        throw domain_error("depends_isg requires an induced subgraph game");
    check_pair(g, i, j, "depends_isg");
    const auto& isg = g.as<InducedSubgraphGame>();
    auto it = isg.edges.find(std::minmax(i, j));
    if (it == isg.edges.end() || it->second == 0) return {false, false};
    return {true, it->second > 0};
}

DependencyGraph dependency_graph(const Game& g, Flavor flavor, bool force) {
    const int n = g.n();
    std::vector<std::pair<player_id, player_id>> pairs;
    for (player_id i = 0; i < n; ++i)
        for (player_id j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

    std::vector<char> edge_flags;
    switch (g.kind()) {
        case BackendKind::InducedSubgraph:
            edge_flags = parallel_probe(pairs.size(), [&](std::size_t k) {
                IsgDependence d = depends_isg(g, pairs[k].first, pairs[k].second);
                return flavor == Flavor::Full ? d.depends : d.positive;
            });
            break;
        case BackendKind::WeightedVoting:
            edge_flags = parallel_probe(pairs.size(), [&](std::size_t k) {
                return flavor == Flavor::Full
                           ? depends_wvg(g, pairs[k].first, pairs[k].second)
                           : positively_depends_wvg(g, pairs[k].first, pairs[k].second);
            });
            break;
        default: {
            bool simple = flavor == Flavor::Supermodular && g.check_simple(force);
            edge_flags = parallel_probe(pairs.size(), [&](std::size_t k) {
                auto [i, j] = pairs[k];
                if (flavor == Flavor::Full) return depends(g, i, j, force);
                return simple ? positively_depends_simple(g, i, j, force)
                              : positively_depends(g, i, j, force);
            });
            break;
        }
    }

    DependencyGraph dg{flavor, Graph(n)};
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (edge_flags[k]) dg.graph.add_edge(pairs[k].first, pairs[k].second);
    return dg;
}

Degrees degrees(const DependencyGraph& dg) {
    Degrees d;
    d.per_player.reserve(dg.n());
    for (int v = 0; v < dg.n(); ++v) {
        d.per_player.push_back(dg.graph.degree(v));
        d.max = std::max(d.max, d.per_player.back());
    }
    return d;
}

bool is_dummy(const Game& g, const DependencyGraph& dg, player_id i) {
    if (dg.n() != g.n()) throw domain_error("is_dummy: graph size does not match game");
    if (i < 0 || i >= g.n()) throw domain_error("is_dummy: player outside range");
    return g.value(Coalition::single(i)) == 0 && dg.graph.degree(i) == 0;
}

Coalition veto_players(const Game& g, bool force) {
    if (!g.check_simple(force)) throw domain_error("veto_players requires a simple game");
    if (g.kind() == BackendKind::MwcList) {
        Coalition veto = Coalition::full(g.n());
        for (Coalition mwc : g.as<MwcListGame>().mwcs) veto = veto.intersect(mwc);
        return veto;
    }
    if (g.n() > kEnumGuard && !force)
        throw size_guard_error("veto_players enumerates 2^n coalitions; n = " +
                               std::to_string(g.n()) + " exceeds " + std::to_string(kEnumGuard));
    Coalition veto = Coalition::full(g.n());
    const std::uint64_t all = Coalition::full(g.n()).bits;
    for (std::uint64_t m = 0;; ++m) {
        if (g.value01(Coalition(m)) == 1) veto = veto.intersect(Coalition(m));
        if (m == all) break;
    }
    return veto;
}

std::vector<Coalition> minimal_winning_coalitions(const Game& g, const DependencyGraph& sg) {
    if (!g.check_simple()) throw domain_error("minimal_winning_coalitions requires a simple game");
    if (sg.flavor != Flavor::Supermodular)
        throw domain_error("minimal_winning_coalitions needs the supermodular dependency graph");
    if (sg.n() != g.n())
        throw domain_error("minimal_winning_coalitions: graph size does not match game");

    std::set<std::uint64_t> found;
    for (player_id i = 0; i < g.n(); ++i) {
        for_each_submask(sg.graph.neighbors(i), [&](Coalition sub) {
            Coalition cand = sub.with(i);
            if (g.value01(cand) != 1) return;
            for (player_id k : cand.members())
                if (g.value01(cand.without(k)) != 0) return;
            found.insert(cand.bits);
        });
    }
    std::vector<Coalition> out;
    out.reserve(found.size());
    for (std::uint64_t m : found) out.push_back(Coalition(m));
    return out;
}

}  // namespace coopgame
