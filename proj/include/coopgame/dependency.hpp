#ifndef COOPGAME_DEPENDENCY_HPP
#define COOPGAME_DEPENDENCY_HPP

#include <optional>
#include <vector>

#include "coopgame/game.hpp"
#include "coopgame/graph.hpp"

namespace coopgame {

enum class Flavor { Full, Supermodular };

// Undirected graph over players. Full: edge (i,j) iff some coalition's
// marginal value for i changes when j is present. Supermodular: iff some
// marginal strictly increases. The supermodular edge set is always a
// subset of the full one.
struct DependencyGraph {
    Flavor flavor = Flavor::Full;
    Graph graph;

    int n() const { return graph.n; }
};

// Brute-force detector: searches S subseteq N \ {i,j} with
// v(i|S u {j}) != v(i|S), subsets visited smallest first, then
// lexicographically, so the returned witness is deterministic.
std::optional<Coalition> depends_witness(const Game& g, player_id i, player_id j,
                                         bool force = false);
bool depends(const Game& g, player_id i, player_id j, bool force = false);

// Same search with a strict increase: v(i|S u {j}) > v(i|S).
std::optional<Coalition> positive_dependency_witness(const Game& g, player_id i, player_id j,
                                                     bool force = false);
bool positively_depends(const Game& g, player_id i, player_id j, bool force = false);

// Simple games only: searches for S such that S u {i,j} wins while
// S u {i} and S u {j} both lose; equivalent to positively_depends there.
bool positively_depends_simple(const Game& g, player_id i, player_id j, bool force = false);

// Pseudo-polynomial detector for weighted voting games: one subset-sum
// reachability table over the weights of N \ {i,j}, then a scan of the
// two weight windows
//   (a)  q - (w_i + w_j) <= w(S) < min{q - w_i, q - w_j}
//   (b)  max{q - w_i, q - w_j} <= w(S) < q.
bool depends_wvg(const Game& g, player_id i, player_id j);

// Window (a) alone characterizes positive dependence for weighted voting
// games (it is exactly the winning/losing witness pattern of simple
// games); validated against the brute-force detector in tests.
bool positively_depends_wvg(const Game& g, player_id i, player_id j);

// Induced subgraph games: i depends on j iff the edge (i,j) has non-zero
// weight, positively iff the weight is positive.
struct IsgDependence {
    bool depends = false;
    bool positive = false;
};
IsgDependence depends_isg(const Game& g, player_id i, player_id j);

// Builds the requested graph with the cheapest valid detector: the
// induced-subgraph rule, the weighted-voting subset-sum windows, the
// simple-game witness search, or plain brute force. Pair detection runs
// in parallel; the merge is deterministic.
DependencyGraph dependency_graph(const Game& g, Flavor flavor, bool force = false);

struct Degrees {
    std::vector<int> per_player;
    int max = 0;
};
Degrees degrees(const DependencyGraph& dg);

// Theorem-style characterization: i is a dummy iff v({i}) = 0 and i is
// isolated in the (either-flavor) dependency graph.
bool is_dummy(const Game& g, const DependencyGraph& dg, player_id i);

// Exact veto set of a simple game: players present in every winning
// coalition. MWC-list games intersect their list; other backends
// enumerate winning coalitions (guarded). With no winning coalition at
// all, every player is vacuously a veto player.
Coalition veto_players(const Game& g, bool force = false);

// All minimal winning coalitions of a simple game, found by trying, for
// each player i, every subset of D+(i) u {i} containing i. `sg` must be
// the supermodular dependency graph of g (a supergraph also works).
// Deduplicated, sorted by ascending mask.
std::vector<Coalition> minimal_winning_coalitions(const Game& g, const DependencyGraph& sg);

}  // namespace coopgame

#endif
