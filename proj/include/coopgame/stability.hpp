#ifndef COOPGAME_STABILITY_HPP
#define COOPGAME_STABILITY_HPP

#include <optional>
#include <vector>

#include "coopgame/dependency.hpp"
#include "coopgame/game.hpp"

namespace coopgame {

// Materializing all 2^n - 2 excess constraints is desk-scale only.
constexpr int kBruteLpGuard = 10;

// e(x, S) = v(S) - x(S) for proper non-empty S.
Rat excess(const Game& g, const std::vector<Rat>& x, Coalition s);

struct CoreResult {
    bool non_empty = false;
    std::vector<Rat> witness;  // an allocation in the core when non_empty
};

// Simple games with v(N) = 1: the core is non-empty iff a veto player
// exists; the witness splits 1 uniformly over the veto set.
CoreResult core_simple(const Game& g, bool force = false);

struct SeparationResult {
    bool feasible = true;
    Coalition violated;  // a minimizer of x(S) - 1 when not feasible
};

// Separation for the least-core program of a simple game, restricted to
// the minimal-winning-coalition constraints: feasible iff
// min over S in mwcs of x(S) - 1 >= -eps. The grand coalition carries no
// excess constraint and is skipped; ties break to the lexicographically
// least coalition. x must be an imputation; the failing constraint is
// named otherwise.
SeparationResult separation_oracle_simple(const Game& g, const std::vector<Coalition>& mwcs,
                                          const std::vector<Rat>& x, const Rat& eps);

struct LeastCoreResult {
    Rat epsilon;
    std::vector<Rat> x;
    // constraint-family coalitions whose excess at x equals epsilon
    std::vector<Coalition> binding;
};

// Least core of a simple game, where the excess constraints are reduced
// to the proper minimal winning coalitions plus all singletons (the
// singletons matter exactly when no proper coalition wins). Solved as an
// exact-rational LP. Empty result: the game admits no imputation.
std::optional<LeastCoreResult> least_core_simple(const Game& g, const DependencyGraph& sg);

// Least core with every proper non-empty coalition materialized as a
// constraint; the oracle the reduced route is checked against. Works for
// arbitrary games, guarded at kBruteLpGuard players.
std::optional<LeastCoreResult> least_core_bruteforce(const Game& g, bool force = false);

}  // namespace coopgame

#endif
