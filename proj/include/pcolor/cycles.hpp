#pragma once

// Odd-cycle detection and the greedy maximal disjoint odd-cycle set.
//
// Detection runs BFS on the bipartite double cover: a shortest walk from
// (v,even) to (v,odd) of length <= ell is a shortest odd closed walk through
// v, and any closed odd walk contains a simple odd cycle of no greater
// length, which extract_odd_cycle recovers by splicing out repeats.

#include <optional>
#include <queue>
#include <vector>

#include "pcolor/graph.hpp"

namespace pcolor {

struct CycleSet {
    std::vector<std::vector<int>> cycles;  // each: odd vertex sequence, wraparound closes it
    int length_bound = 0;                  // ell
};

struct Matching {
    std::vector<std::pair<int, int>> edges;
};

// Reduce a closed odd walk (walk.front() == walk.back(), odd edge count) to a
// simple odd cycle of length <= the walk's, returned without the closing
// repeat.
inline std::vector<int> extract_odd_cycle(std::vector<int> walk) {
    for (;;) {
        int L = static_cast<int>(walk.size()) - 1;
        std::vector<int> first_pos;
        int max_id = 0;
        for (int x : walk) max_id = std::max(max_id, x);
        first_pos.assign(max_id + 1, -1);
        int ri = -1, rj = -1;
        for (int j = 0; j < L; ++j) {
            int x = walk[j];
            if (first_pos[x] >= 0) {
                ri = first_pos[x];
                rj = j;
                break;
            }
            first_pos[x] = j;
        }
        if (ri < 0) {
            walk.pop_back();
            return walk;
        }
        int inner = rj - ri;
        if (inner % 2 == 1) {
            // walk[ri..rj] is itself closed (same endpoint vertex)
            walk = std::vector<int>(walk.begin() + ri, walk.begin() + rj + 1);
        } else {
            std::vector<int> outer(walk.begin(), walk.begin() + ri + 1);
            outer.insert(outer.end(), walk.begin() + rj + 1, walk.end());
            walk = std::move(outer);
        }
    }
}

namespace detail {

// Reusable double-cover BFS over an alive-masked subgraph.
class OddWalkFinder {
public:
    explicit OddWalkFinder(const Graph& g)
        : g_(g), dist_(2 * g.n(), -1), parent_(2 * g.n(), -1), touched_() {}

    // Shortest odd closed walk through v of length <= ell among alive
    // vertices, as a vertex sequence with walk.front()==walk.back()==v.
    std::optional<std::vector<int>> find(int v, int ell, const std::vector<char>& alive) {
        for (int s : touched_) {
            dist_[s] = -1;
            parent_[s] = -1;
        }
        touched_.clear();
        int start = 2 * v, target = 2 * v + 1;
        dist_[start] = 0;
        touched_.push_back(start);
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int s = q.front();
            q.pop();
            if (dist_[s] >= ell) break;
            int u = s / 2, par = s % 2;
            for (int w : g_.neighbors(u)) {
                if (!alive[w]) continue;
                int t = 2 * w + (1 - par);
                if (dist_[t] >= 0) continue;
                dist_[t] = dist_[s] + 1;
                parent_[t] = s;
                touched_.push_back(t);
                if (t == target) return reconstruct(start, target);
                q.push(t);
            }
        }
        return std::nullopt;
    }

private:
    std::vector<int> reconstruct(int start, int target) const {
        std::vector<int> walk;
        for (int s = target; s != -1; s = parent_[s]) walk.push_back(s / 2);
        std::reverse(walk.begin(), walk.end());
        (void)start;
        return walk;
    }

    const Graph& g_;
    std::vector<int> dist_, parent_;
    std::vector<int> touched_;
};

}  // namespace detail

// Proper 2-coloring if g is bipartite, else absent. BFS from the lowest
// unvisited id per component.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[u];
                    q.push(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

// Shortest odd cycle reachable from a shortest odd closed walk through v of
// length <= ell, or absent if no such walk exists.
inline std::optional<std::vector<int>> shortest_odd_cycle_at(const Graph& g, int v, int ell) {
    if (ell < 3) throw ContractViolation("shortest_odd_cycle_at: ell < 3");
    if (v < 0 || v >= g.n()) throw ContractViolation("shortest_odd_cycle_at: vertex out of range");
    std::vector<char> alive(g.n(), 1);
    detail::OddWalkFinder finder(g);
    auto walk = finder.find(v, ell, alive);
    if (!walk) return std::nullopt;
    return extract_odd_cycle(*walk);
}

// Any odd cycle of g (unbounded length), or absent if bipartite. Used to
// build non-3-colorability certificates.
inline std::optional<std::vector<int>> find_odd_cycle(const Graph& g) {
    if (bipartition(g)) return std::nullopt;
    std::vector<char> alive(g.n(), 1);
    detail::OddWalkFinder finder(g);
    for (int v = 0; v < g.n(); ++v) {
        auto walk = finder.find(v, 2 * g.n() + 1, alive);
        if (walk) return extract_odd_cycle(*walk);
    }
    return std::nullopt;
}

// Greedy maximal set of vertex-disjoint odd cycles of length <= ell: scan
// vertices ascending, repeatedly extract a shortest qualifying cycle and
// delete its vertices. On return no odd cycle of length <= ell survives
// among the untouched vertices.
inline CycleSet greedy_disjoint_odd_cycles(const Graph& g, int ell) {
    if (ell < 3) throw ContractViolation("greedy_disjoint_odd_cycles: ell < 3");
    CycleSet cs;
    cs.length_bound = ell;
    std::vector<char> alive(g.n(), 1);
    detail::OddWalkFinder finder(g);
    for (int v = 0; v < g.n(); ++v) {
        while (alive[v]) {
            auto walk = finder.find(v, ell, alive);
            if (!walk) break;
            auto cycle = extract_odd_cycle(*walk);
            for (int u : cycle) alive[u] = 0;
            cs.cycles.push_back(std::move(cycle));
        }
    }
    return cs;
}

inline bool validate_cycle_set(const Graph& g, const CycleSet& cs) {
    std::vector<char> used(g.n(), 0);
    for (const auto& c : cs.cycles) {
        int len = static_cast<int>(c.size());
        if (len < 3 || len % 2 == 0 || len > cs.length_bound) return false;
        for (int i = 0; i < len; ++i) {
            int u = c[i], w = c[(i + 1) % len];
            if (u < 0 || u >= g.n() || !g.has_edge(u, w)) return false;
            if (used[u]) return false;
        }
        for (int u : c) used[u] = 1;
    }
    return true;
}

}  // namespace pcolor
