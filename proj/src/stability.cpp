#include "coopgame/stability.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "coopgame/simplex.hpp"

namespace coopgame {

namespace {

Rat payoff_sum(const std::vector<Rat>& x, Coalition s) {
    Rat total = 0;
    for (player_id p : s.members()) total += x[p];
    return total;
}

void check_payoff_size(const Game& g, const std::vector<Rat>& x, const char* what) {
    if (static_cast<int>(x.size()) != g.n())
        throw domain_error(std::string(what) + ": payoff vector has " +
                           std::to_string(x.size()) + " entries for " + std::to_string(g.n()) +
                           " players");
}

// Minimize the worst excess over the constraint family: variables are the
// payoffs (bounded below by the singleton values) and the excess bound.
// Solved through the dual so the tableau has n+1 rows regardless of how
// many coalitions are constrained.
LeastCoreResult solve_least_core(const Game& g, std::vector<Coalition> family) {
    const int n = g.n();
    std::vector<Rat> lower(n);
    Rat lower_total = 0;
    for (player_id i = 0; i < n; ++i) {
        lower[i] = g.value(Coalition::single(i));
        lower_total += lower[i];
    }
    const Rat slack_total = g.value(Coalition::full(n)) - lower_total;  // >= 0, checked by caller

    if (n == 1 || family.empty()) {
        // no proper coalitions to constrain: the excess bound is vacuous
        LeastCoreResult out;
        out.epsilon = 0;
        out.x = lower;
        out.x[0] += slack_total;  // lands on v(N) while keeping bounds
        return out;
    }

    // Dual standard form. Columns: one per family coalition, the split
    // free multiplier of the efficiency row, then one slack per player.
    const std::size_t ncols = family.size() + 2 + n;
    std::vector<std::vector<Rat>> A(n + 1, std::vector<Rat>(ncols, Rat(0)));
    std::vector<Rat> b(n + 1, Rat(0));
    std::vector<Rat> c(ncols, Rat(0));

    for (std::size_t k = 0; k < family.size(); ++k) {
        Coalition s = family[k];
        for (player_id i : s.members()) A[i][k] = 1;
        A[n][k] = 1;
        Rat reduced_rhs = g.value(s) - payoff_sum(lower, s);
        c[k] = -reduced_rhs;
    }
    const std::size_t lam_pos = family.size(), lam_neg = family.size() + 1;
    for (player_id i = 0; i < n; ++i) {
        A[i][lam_pos] = 1;
        A[i][lam_neg] = -1;
        A[i][family.size() + 2 + i] = 1;  // slack
    }
    c[lam_pos] = -slack_total;
    c[lam_neg] = slack_total;
    b[n] = 1;

    LpSolution sol = solve_standard_lp(std::move(A), std::move(b), std::move(c));
    if (sol.status != LpStatus::Optimal)
        throw error("least-core LP unsolvable; this contradicts the imputation check");

    LeastCoreResult out;
    out.epsilon = -sol.prices[n];
    out.x.resize(n);
    for (player_id i = 0; i < n; ++i) out.x[i] = lower[i] - sol.prices[i];

    // The recovered point must solve the original program exactly.
    if (out.epsilon != -sol.objective)
        throw error("least-core LP: price/objective mismatch");
    Rat total = 0;
    for (player_id i = 0; i < n; ++i) {
        if (out.x[i] < lower[i]) throw error("least-core LP: individual rationality violated");
        total += out.x[i];
    }
    if (total != g.value(Coalition::full(n)))
        throw error("least-core LP: efficiency violated");
    for (Coalition s : family) {
        Rat e = g.value(s) - payoff_sum(out.x, s);
        if (e > out.epsilon) throw error("least-core LP: constraint violated at optimum");
        if (e == out.epsilon) out.binding.push_back(s);
    }
    std::sort(out.binding.begin(), out.binding.end(),
              [](Coalition a, Coalition b2) { return a.bits < b2.bits; });
    return out;
}

}  // namespace

Rat excess(const Game& g, const std::vector<Rat>& x, Coalition s) {
    check_payoff_size(g, x, "excess");
    if (s.empty() || s == Coalition::full(g.n()))
        throw domain_error("excess is defined for proper non-empty coalitions only");
    return g.value(s) - payoff_sum(x, s);
}

CoreResult core_simple(const Game& g, bool force) {
    if (!g.check_simple(force)) throw domain_error("core_simple requires a simple game");
    if (g.value01(Coalition::full(g.n())) != 1)
        throw domain_error("core_simple requires a winning grand coalition");
    Coalition veto = veto_players(g, force);
    if (veto.empty()) return {};
    CoreResult out;
    out.non_empty = true;
    out.witness.assign(g.n(), Rat(0));
    Rat share(1, static_cast<unsigned long>(veto.size()));
    for (player_id i : veto.members()) out.witness[i] = share;
    return out;
}

SeparationResult separation_oracle_simple(const Game& g, const std::vector<Coalition>& mwcs,
                                          const std::vector<Rat>& x, const Rat& eps) {
    check_payoff_size(g, x, "separation_oracle_simple");
    Rat total = 0;
    for (const Rat& xi : x) total += xi;
    Rat grand = g.value(Coalition::full(g.n()));
    if (total != grand)
        throw domain_error("not an imputation: x(N) = " + format_rational(total) +
                           " but v(N) = " + format_rational(grand));
    for (player_id i = 0; i < g.n(); ++i) {
        Rat vi = g.value(Coalition::single(i));
        if (x[i] < vi)
            throw domain_error("not an imputation: x_" + std::to_string(i) + " = " +
                               format_rational(x[i]) + " is below v({" + std::to_string(i) +
                               "}) = " + format_rational(vi));
    }

    bool found = false;
    Rat best;
    Coalition argmin;
    for (Coalition s : mwcs) {
        if (s == Coalition::full(g.n())) continue;  // no excess constraint on N
        Rat margin = payoff_sum(x, s) - 1;
        if (!found || margin < best || (margin == best && lex_less(s, argmin))) {
            found = true;
            best = margin;
            argmin = s;
        }
    }
    if (!found || best >= -eps) return {};
    return {false, argmin};
}

std::optional<LeastCoreResult> least_core_simple(const Game& g, const DependencyGraph& sg) {
    if (!g.check_simple()) throw domain_error("least_core_simple requires a simple game");
    const int n = g.n();
    Rat singles_total = 0;
    for (player_id i = 0; i < n; ++i) singles_total += g.value(Coalition::single(i));
    if (g.value(Coalition::full(n)) < singles_total) return std::nullopt;

    std::set<std::uint64_t> family_masks;
    for (Coalition s : minimal_winning_coalitions(g, sg))
        if (s != Coalition::full(n)) family_masks.insert(s.bits);
    if (n > 1)
        for (player_id i = 0; i < n; ++i) family_masks.insert(Coalition::single(i).bits);

    std::vector<Coalition> family;
    family.reserve(family_masks.size());
    for (std::uint64_t m : family_masks) family.push_back(Coalition(m));
    return solve_least_core(g, std::move(family));
}

std::optional<LeastCoreResult> least_core_bruteforce(const Game& g, bool force) {
    const int n = g.n();
    if (n > kBruteLpGuard && !force)
        throw size_guard_error("least_core_bruteforce materializes 2^n constraints; n = " +
                               std::to_string(n) + " exceeds " + std::to_string(kBruteLpGuard));
    Rat singles_total = 0;
    for (player_id i = 0; i < n; ++i) singles_total += g.value(Coalition::single(i));
    if (g.value(Coalition::full(n)) < singles_total) return std::nullopt;

    std::vector<Coalition> family;
    const std::uint64_t all = Coalition::full(n).bits;
    for (std::uint64_t m = 1; m < all; ++m) family.push_back(Coalition(m));
    return solve_least_core(g, std::move(family));
}

}  // namespace coopgame
