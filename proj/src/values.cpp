#include "coopgame/values.hpp"

#include <string>

namespace coopgame {

namespace {

void check_naive_guard(const Game& g, bool force, const char* what) {
    if (g.n() > kNaiveValueGuard && !force)
        throw size_guard_error(std::string(what) + " enumerates 2^(n-1) coalitions per player; n = " +
                               std::to_string(g.n()) + " exceeds " +
                               std::to_string(kNaiveValueGuard));
}

void check_full_graph(const Game& g, const DependencyGraph& dg, const char* what) {
    if (dg.n() != g.n())
        throw domain_error(std::string(what) + ": graph has " + std::to_string(dg.n()) +
                           " vertices but the game has " + std::to_string(g.n()) + " players");
    if (dg.flavor != Flavor::Full)
        throw domain_error(std::string(what) + " needs the full dependency graph");
}

}  // namespace

ValueVector shapley_naive(const Game& g, bool force) {
    check_naive_guard(g, force, "shapley_naive");
    const int n = g.n();
    const Int nfact = factorial(n);
    std::vector<Rat> coef(n);
    for (int s = 0; s < n; ++s) {
        Rat c(factorial(s) * factorial(n - s - 1), nfact);
        c.canonicalize();
        coef[s] = c;
    }
    ValueVector phi(n, Rat(0));
    for (player_id i = 0; i < n; ++i) {
        for_each_submask(Coalition::full(n).without(i), [&](Coalition s) {
            phi[i] += coef[s.size()] * g.marginal(i, s);
        });
    }
    return phi;
}

ValueVector shapley_fpt(const Game& g, const DependencyGraph& dg) {
    check_full_graph(g, dg, "shapley_fpt");
    const int n = g.n();
    const Int nfact = factorial(n);
    ValueVector phi(n, Rat(0));
    for (player_id i = 0; i < n; ++i) {
        Coalition dep = dg.graph.neighbors(i);
        const int d = dep.size();
        const int m = n - d - 1;
        // w(s): total permutation weight carried by one S of size s once
        // all placements of the independent players are folded in.
        std::vector<Rat> w(d + 1, Rat(0));
        for (int s = 0; s <= d; ++s) {
            Int total = 0;
            for (int t = 0; t <= m; ++t)
                total += binomial(m, t) * factorial(s + t) * factorial(n - s - t - 1);
            Rat ws(total, nfact);
            ws.canonicalize();
            w[s] = ws;
        }
        for_each_submask(dep, [&](Coalition s) { phi[i] += w[s.size()] * g.marginal(i, s); });
    }
    return phi;
}

ValueVector banzhaf_naive(const Game& g, bool force) {
    check_naive_guard(g, force, "banzhaf_naive");
    const int n = g.n();
    ValueVector beta(n, Rat(0));
    for (player_id i = 0; i < n; ++i) {
        Rat total = 0;
        for_each_submask(Coalition::full(n).without(i), [&](Coalition s) {
            total += g.marginal(i, s);
        });
        Rat scale(Int(1), Int(1) << (n - 1));
        beta[i] = total * scale;
    }
    return beta;
}

ValueVector banzhaf_fpt(const Game& g, const DependencyGraph& dg) {
    check_full_graph(g, dg, "banzhaf_fpt");
    const int n = g.n();
    ValueVector beta(n, Rat(0));
    for (player_id i = 0; i < n; ++i) {
        Coalition dep = dg.graph.neighbors(i);
        Rat total = 0;
        for_each_submask(dep, [&](Coalition s) { total += g.marginal(i, s); });
        Rat scale(Int(1), Int(1) << dep.size());
        beta[i] = total * scale;
    }
    return beta;
}

}  // namespace coopgame
