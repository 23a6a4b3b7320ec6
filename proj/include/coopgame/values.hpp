#ifndef COOPGAME_VALUES_HPP
#define COOPGAME_VALUES_HPP

#include <vector>

#include "coopgame/dependency.hpp"
#include "coopgame/game.hpp"

namespace coopgame {

// Per-player payoffs, exact rationals.
using ValueVector = std::vector<Rat>;

// Naive evaluators enumerate all of 2^(n-1) per player; guarded here.
constexpr int kNaiveValueGuard = 12;

// phi_i = sum over S subseteq N\{i} of |S|!(n-|S|-1)!/n! * v(i|S).
ValueVector shapley_naive(const Game& g, bool force = false);

// Grouped form: marginals are constant on players outside the dependency
// set, so with D = D(i), m = n - |D| - 1,
//   phi_i = sum over S subseteq D of v(i|S) * w(|S|),
//   w(s)  = sum over t of C(m,t) (s+t)! (n-s-t-1)! / n!.
// dg must be the full dependency graph of g (a supergraph also works).
ValueVector shapley_fpt(const Game& g, const DependencyGraph& dg);

// beta_i = 2^-(n-1) * sum over S subseteq N\{i} of v(i|S).
ValueVector banzhaf_naive(const Game& g, bool force = false);

// Grouped form: beta_i = 2^-|D(i)| * sum over S subseteq D(i) of v(i|S).
ValueVector banzhaf_fpt(const Game& g, const DependencyGraph& dg);

}  // namespace coopgame

#endif
