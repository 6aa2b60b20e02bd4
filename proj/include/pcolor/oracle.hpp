#pragma once

// Exponential-time exact references for tiny graphs. Hard vertex-count
// guards keep an accidental call on a large instance from hanging; limits
// are sized so each call finishes well under a second.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"

namespace pcolor::oracle {

namespace detail {

inline bool try_color(const Graph& g, int k, const std::vector<int>& order, std::size_t pos,
                      std::vector<int>& color, int used) {
    if (pos == order.size()) return true;
    int v = order[pos];
    // symmetry pruning: allow at most one brand-new color
    int cap = std::min(k, used + 1);
    for (int c = 0; c < cap; ++c) {
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (try_color(g, k, order, pos + 1, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace detail

// Proper k-coloring of g, or absent. Backtracking over vertices in
// descending-degree order with first-new-color symmetry pruning.
inline std::optional<std::vector<int>> find_k_coloring(const Graph& g, int k, int guard = 16) {
    if (g.n() > guard) throw OracleGuardError("find_k_coloring", g.n(), guard);
    if (k <= 0) return g.n() == 0 ? std::optional<std::vector<int>>{std::vector<int>{}} : std::nullopt;
    std::vector<int> order(g.n());
    for (int i = 0; i < g.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> color(g.n(), -1);
    if (detail::try_color(g, k, order, 0, color, 0)) return color;
    return std::nullopt;
}

inline int exact_chromatic_number(const Graph& g) {
    constexpr int kGuard = 16;
    if (g.n() > kGuard) throw OracleGuardError("exact_chromatic_number", g.n(), kGuard);
    if (g.n() == 0) return 0;
    for (int k = 1; k <= g.n(); ++k)
        if (find_k_coloring(g, k, kGuard)) return k;
    return g.n();
}

struct InducedColorable {
    int num = 0;  // |witness|
    int den = 1;  // n, so alpha = num/den
    std::vector<int> witness;
};

// Largest vertex subset whose induced subgraph is k-colorable; exhaustive
// over subsets in decreasing size order, lexicographic within a size.
inline InducedColorable max_induced_k_colorable(const Graph& g, int k) {
    constexpr int kGuard = 14;
    if (g.n() > kGuard) throw OracleGuardError("max_induced_k_colorable", g.n(), kGuard);
    int n = g.n();
    InducedColorable out;
    out.den = std::max(1, n);
    for (int s = n; s >= 0; --s) {
        std::vector<int> pick(s);
        for (int i = 0; i < s; ++i) pick[i] = i;
        for (;;) {
            auto [sub, ids] = induced_subgraph(g, pick);
            if (find_k_coloring(sub, k, kGuard)) {
                out.num = s;
                out.witness = ids;
                return out;
            }
            // next lexicographic s-combination of 0..n-1
            int i = s - 1;
            while (i >= 0 && pick[i] == n - s + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return out;
}

// Maximum number of pairwise vertex-disjoint odd cycles of length <= ell;
// exhaustive over the enumerated cycle masks.
inline int max_disjoint_odd_cycles(const Graph& g, int ell) {
    constexpr int kGuard = 12;
    if (g.n() > kGuard) throw OracleGuardError("max_disjoint_odd_cycles", g.n(), kGuard);
    int n = g.n();
    std::vector<std::uint32_t> cycles;
    {
        // enumerate simple cycles with smallest vertex first; dedupe by mask
        std::vector<std::uint32_t> seen;
        auto record = [&](std::uint32_t mask) {
            if (std::find(seen.begin(), seen.end(), mask) == seen.end()) seen.push_back(mask);
        };
        auto dfs = [&](auto&& self, int start, int u, int len, std::uint32_t mask) -> void {
            if (len > ell) return;
            for (int w : g.neighbors(u)) {
                if (w == start && len >= 3 && len % 2 == 1) record(mask);
                if (w <= start || (mask >> w) & 1) continue;
                if (len + 1 > ell) continue;
                self(self, start, w, len + 1, mask | (1u << w));
            }
        };
        for (int s = 0; s < n; ++s) dfs(dfs, s, s, 1, 1u << s);
        cycles = std::move(seen);
    }
    std::map<std::uint32_t, int> memo;
    auto best = [&](auto&& self, std::uint32_t avail) -> int {
        auto it = memo.find(avail);
        if (it != memo.end()) return it->second;
        int r = 0;
        for (std::uint32_t c : cycles)
            if ((c & avail) == c) r = std::max(r, 1 + self(self, avail & ~c));
        memo[avail] = r;
        return r;
    };
    return best(best, n == 32 ? ~0u : ((1u << n) - 1));
}

namespace detail {

inline void mis_branch(const Graph& g, std::uint32_t cand, std::uint32_t cur, int cur_size,
                       std::uint32_t& best, int& best_size) {
    if (cur_size + __builtin_popcount(cand) <= best_size) return;
    if (cand == 0) {
        if (cur_size > best_size) {
            best_size = cur_size;
            best = cur;
        }
        return;
    }
    // branch on the max-degree candidate (ties: lowest id)
    int v = -1, vd = -1;
    for (int u = 0; u < g.n(); ++u) {
        if (!((cand >> u) & 1)) continue;
        int d = 0;
        for (int w : g.neighbors(u)) d += (cand >> w) & 1;
        if (d > vd) {
            vd = d;
            v = u;
        }
    }
    std::uint32_t take = cand & ~(1u << v);
    for (int w : g.neighbors(v)) take &= ~(1u << w);
    mis_branch(g, take, cur | (1u << v), cur_size + 1, best, best_size);
    mis_branch(g, cand & ~(1u << v), cur, cur_size, best, best_size);
}

}  // namespace detail

inline std::vector<int> max_independent_set(const Graph& g) {
    constexpr int kGuard = 20;
    if (g.n() > kGuard) throw OracleGuardError("max_independent_set", g.n(), kGuard);
    std::uint32_t best = 0;
    int best_size = -1;
    std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    detail::mis_branch(g, all, 0, 0, best, best_size);
    std::vector<int> out;
    for (int v = 0; v < g.n(); ++v)
        if ((best >> v) & 1) out.push_back(v);
    return out;
}

inline int min_vertex_cover_size(const Graph& g) {
    // complement of a maximum independent set
    return g.n() - static_cast<int>(max_independent_set(g).size());
}

inline int max_matching_size(const Graph& g) {
    constexpr int kGuard = 16;
    if (g.n() > kGuard) throw OracleGuardError("max_matching_size", g.n(), kGuard);
    std::vector<int> memo(std::size_t(1) << g.n(), -1);
    auto rec = [&](auto&& self, std::uint32_t avail) -> int {
        if (avail == 0) return 0;
        int& m = memo[avail];
        if (m >= 0) return m;
        int v = __builtin_ctz(avail);
        int r = self(self, avail & ~(1u << v));  // leave v unmatched
        for (int w : g.neighbors(v))
            if ((avail >> w) & 1)
                r = std::max(r, 1 + self(self, avail & ~(1u << v) & ~(1u << w)));
        m = r;
        return r;
    };
    std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    return rec(rec, all);
}

// Length of the shortest odd cycle, or 0 if bipartite; exhaustive, used to
// certify odd girth on tiny graphs.
inline int shortest_odd_cycle_length(const Graph& g) {
    constexpr int kGuard = 16;
    if (g.n() > kGuard) throw OracleGuardError("shortest_odd_cycle_length", g.n(), kGuard);
    int best = 0;
    std::vector<char> in_path;
    for (int s = 0; s < g.n(); ++s) {
        in_path.assign(g.n(), 0);
        in_path[s] = 1;
        auto dfs = [&](auto&& self, int u, int len) -> void {
            for (int w : g.neighbors(u)) {
                if (w == s && len >= 3 && len % 2 == 1) {
                    if (best == 0 || len < best) best = len;
                }
                if (w <= s || in_path[w]) continue;
                if (best != 0 && len + 1 >= best) continue;
                in_path[w] = 1;
                self(self, w, len + 1);
                in_path[w] = 0;
            }
        };
        dfs(dfs, s, 1);
    }
    return best;
}

}  // namespace pcolor::oracle
