#ifndef COOPGAME_COALITION_HPP
#define COOPGAME_COALITION_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coopgame/errors.hpp"

namespace coopgame {

using player_id = int;

constexpr int kMaxPlayers = 64;

// A set of players encoded as a 64-bit mask; bit i is player i.
struct Coalition {
    std::uint64_t bits = 0;

    Coalition() = default;
    explicit constexpr Coalition(std::uint64_t mask) : bits(mask) {}

    static Coalition of(std::initializer_list<player_id> players) {
        Coalition c;
        for (player_id p : players) c = c.with(p);
        return c;
    }
    static Coalition full(int n) {
        return Coalition(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static Coalition single(player_id p) { return Coalition(std::uint64_t{1} << p); }

    bool contains(player_id p) const { return (bits >> p) & 1; }
    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    Coalition with(player_id p) const { return Coalition(bits | (std::uint64_t{1} << p)); }
    Coalition without(player_id p) const { return Coalition(bits & ~(std::uint64_t{1} << p)); }
    Coalition unite(Coalition o) const { return Coalition(bits | o.bits); }
    Coalition intersect(Coalition o) const { return Coalition(bits & o.bits); }
    Coalition minus(Coalition o) const { return Coalition(bits & ~o.bits); }
    bool subset_of(Coalition o) const { return (bits & ~o.bits) == 0; }

    std::vector<player_id> members() const {
        std::vector<player_id> out;
        out.reserve(size());
        for (std::uint64_t m = bits; m;) {
            int p = std::countr_zero(m);
            out.push_back(p);
            m &= m - 1;
        }
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (player_id p : members()) {
            if (!first) s += ",";
            s += std::to_string(p);
            first = false;
        }
        return s + "}";
    }

    bool operator==(const Coalition&) const = default;
};

// Order on coalitions as ascending member sequences. {0,3} < {1,2}.
inline bool lex_less(Coalition a, Coalition b) {
    if (a.bits == b.bits) return false;
    // Walk common low-index players; the first place they differ decides.
    std::uint64_t x = a.bits, y = b.bits;
    while (x && y) {
        int pa = std::countr_zero(x), pb = std::countr_zero(y);
        if (pa != pb) return pa < pb;
        x &= x - 1;
        y &= y - 1;
    }
    return x == 0 && y != 0;  // a ran out first: a is a prefix of b
}

inline void require_in_range(Coalition s, int n, const char* what) {
    if (!s.subset_of(Coalition::full(n)))
        throw domain_error(std::string(what) + ": coalition " + s.to_string() +
                           " has players outside [0," + std::to_string(n) + ")");
}

// Calls fn(sub) for every subset of `universe`, in submask order
// (descending mask value except the final empty set). Cheap; order
// unspecified to callers that need determinism by size.
template <typename Fn>
void for_each_submask(Coalition universe, Fn&& fn) {
    std::uint64_t u = universe.bits;
    std::uint64_t sub = u;
    while (true) {
        fn(Coalition(sub));
        if (sub == 0) break;
        sub = (sub - 1) & u;
    }
}

// Calls fn(sub) for subsets of `universe` ordered by size, then
// lexicographically as ascending member sequences (so the first witness
// found is the smallest, lexicographically least one). Returns early if
// fn returns true.
template <typename Fn>
bool for_each_subset_sized_lex(Coalition universe, Fn&& fn) {
    std::vector<player_id> pool = universe.members();
    int m = static_cast<int>(pool.size());
    std::vector<int> idx;
    for (int k = 0; k <= m; ++k) {
        idx.resize(k);
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            Coalition s;
            for (int i : idx) s = s.with(pool[i]);
            if (fn(s)) return true;
            // next k-combination of [0,m) in lexicographic order
            int i = k - 1;
            while (i >= 0 && idx[i] == m - k + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return false;
}

struct CoalitionHash {
    std::size_t operator()(const Coalition& c) const {
        return std::hash<std::uint64_t>{}(c.bits);
    }
};

}  // namespace coopgame

#endif
