#ifndef COOPGAME_GRAPH_HPP
#define COOPGAME_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "coopgame/coalition.hpp"
#include "coopgame/errors.hpp"

namespace coopgame {

// Undirected graph on vertices [0, n), n <= 64, adjacency as bitmasks.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int vertices) : n(vertices), adj(vertices, 0) {
        if (vertices < 0 || vertices > kMaxPlayers)
            throw validation_error("graph size " + std::to_string(vertices) + " outside [0,64]");
    }

    void add_edge(int u, int v) {
        if (u == v) throw validation_error("self-loop on vertex " + std::to_string(u));
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1; }
    int degree(int v) const { return std::popcount(adj[v]); }
    Coalition neighbors(int v) const { return Coalition(adj[v]); }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (has_edge(u, v)) out.emplace_back(u, v);
        return out;
    }

    // True iff every edge of `other` is an edge here.
    bool contains_edges_of(const Graph& other) const {
        if (other.n != n) return false;
        for (int v = 0; v < n; ++v)
            if (other.adj[v] & ~adj[v]) return false;
        return true;
    }

    bool operator==(const Graph&) const = default;
};

}  // namespace coopgame

#endif
