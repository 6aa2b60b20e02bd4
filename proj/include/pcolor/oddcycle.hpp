#pragma once

// Independent sets and colorings for graphs without short odd cycles.
//
// Ball-growing greedy: from the lowest surviving vertex grow BFS layers
// L_0, L_1, ...; take the first layer whose successor grew by less than a
// factor r = ceil(n^(1/k)), k = floor((ell-1)/2). Such a layer exists at
// index <= k-1 (otherwise the ball would exceed n vertices), it is
// independent when the graph has no odd cycle of length <= ell (an
// intra-layer edge at depth i closes an odd walk of length 2i+1 <= ell),
// and deleting the enclosing ball charges at most (r+2) deleted vertices
// per kept vertex, which yields the n/(r+2) overall guarantee.

#include <optional>
#include <vector>

#include "pcolor/coloring.hpp"
#include "pcolor/cycles.hpp"
#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"

namespace pcolor {

// Size guarantee of independent_set_no_short_odd_cycles on an n-vertex
// graph: ceil(n / (ceil(n^(1/k)) + 2)) with k = floor((ell-1)/2).
inline long long odd_free_is_bound(long long n, int ell) {
    if (n <= 0) return 0;
    int k = (ell - 1) / 2;
    long long r = ceil_root(n, k);
    return (n + r + 1) / (r + 2);
}

namespace detail {

// Certificate from an intra-layer BFS edge {u,v} at equal depth: climb the
// parent chains to the deepest common ancestor; the two chains plus {u,v}
// form a simple odd cycle of length 2*(depth-anc_depth)+1.
inline std::vector<int> cycle_from_layer_edge(int u, int v, const std::vector<int>& parent) {
    std::vector<int> pu{u}, pv{v};
    int a = u, b = v;
    while (a != b) {
        a = parent[a];
        b = parent[b];
        pu.push_back(a);
        pv.push_back(b);
    }
    // pu: u..a, pv: v..a; cycle = a..u along pu, edge {u,v}, v..a along pv
    std::vector<int> cycle(pu.rbegin(), pu.rend());
    for (std::size_t i = 0; i + 1 < pv.size(); ++i) cycle.push_back(pv[i]);
    return cycle;
}

struct BallGrower {
    const Graph& g;
    std::vector<char> alive;
    std::vector<int> depth;   // -1 = unvisited in current ball
    std::vector<int> parent;
    std::vector<int> touched;

    explicit BallGrower(const Graph& graph)
        : g(graph), alive(graph.n(), 1), depth(graph.n(), -1), parent(graph.n(), -1) {}

    void reset_ball() {
        for (int v : touched) {
            depth[v] = -1;
            parent[v] = -1;
        }
        touched.clear();
    }

    // Grow layers from root; returns the selected layer (the output
    // independent set) and records the ball to delete in `ball`.
    std::vector<int> grow(int root, int k, long long r, int ell, std::vector<int>& ball) {
        reset_ball();
        std::vector<std::vector<int>> layers;
        layers.push_back({root});
        depth[root] = 0;
        parent[root] = -1;
        touched.push_back(root);
        ball.clear();
        ball.push_back(root);
        for (int i = 0;; ++i) {
            // build layer i+1
            std::vector<int> next;
            for (int u : layers[i]) {
                for (int w : g.neighbors(u)) {
                    if (!alive[w]) continue;
                    if (depth[w] == -1) {
                        depth[w] = i + 1;
                        parent[w] = u;
                        touched.push_back(w);
                        next.push_back(w);
                    } else if (depth[w] == i) {
                        // intra-layer edge at depth i: odd cycle of length
                        // 2i+1 <= 2k+1 <= ell
                        throw ShortOddCycleError(cycle_from_layer_edge(u, w, parent), ell);
                    }
                }
            }
            for (int u : next) ball.push_back(u);
            if (static_cast<long long>(next.size()) < r * static_cast<long long>(layers[i].size())) {
                // minimal i selected: keep L_i, delete B_{i+1}
                return layers[i];
            }
            layers.push_back(std::move(next));
            if (i + 1 >= k) {
                // unreachable: |L_k| >= r^k >= n would exceed the vertex count
                throw ContractViolation("ball growth exceeded radius k");
            }
        }
    }
};

}  // namespace detail

// Independent set of size >= odd_free_is_bound(n, ell) in a graph with no
// odd cycle of length <= ell. A discovered violation of that precondition
// raises ShortOddCycleError carrying the cycle.
inline std::vector<int> independent_set_no_short_odd_cycles(const Graph& g, int ell) {
    if (ell < 3) throw ContractViolation("independent_set_no_short_odd_cycles: ell < 3");
    const int n = g.n();
    if (n == 0) return {};
    const int k = (ell - 1) / 2;
    const long long r = ceil_root(n, k);
    detail::BallGrower grower(g);
    std::vector<int> result;
    std::vector<int> ball;
    int cursor = 0;
    int alive_count = n;
    while (alive_count > 0) {
        while (cursor < n && !grower.alive[cursor]) ++cursor;
        int root = cursor;
        auto layer = grower.grow(root, k, r, ell, ball);
        for (int u : layer) result.push_back(u);
        for (int u : ball) {
            grower.alive[u] = 0;
            --alive_count;
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

// Peel color classes: repeatedly extract an independent set from the surviving
// subgraph (r recomputed on the shrinking instance) and make it a color
// class. Colors every vertex; discarded stays empty.
inline PartialColoring color_no_short_odd_cycles(const Graph& g, int ell) {
    if (ell < 3) throw ContractViolation("color_no_short_odd_cycles: ell < 3");
    PartialColoring pc;
    std::vector<int> survivors(g.n());
    for (int v = 0; v < g.n(); ++v) survivors[v] = v;
    int color = 0;
    while (!survivors.empty()) {
        auto [sub, ids] = induced_subgraph(g, survivors);
        std::vector<int> set;
        try {
            set = independent_set_no_short_odd_cycles(sub, ell);
        } catch (const ShortOddCycleError& err) {
            std::vector<int> mapped;
            mapped.reserve(err.cycle().size());
            for (int u : err.cycle()) mapped.push_back(ids[u]);
            throw ShortOddCycleError(std::move(mapped), err.bound());
        }
        std::vector<char> taken(sub.n(), 0);
        for (int u : set) {
            pc.colors[ids[u]] = color;
            taken[u] = 1;
        }
        std::vector<int> rest;
        rest.reserve(survivors.size() - set.size());
        for (int u = 0; u < sub.n(); ++u)
            if (!taken[u]) rest.push_back(ids[u]);
        survivors = std::move(rest);
        ++color;
    }
    pc.num_colors = color;
    return pc;
}

}  // namespace pcolor
