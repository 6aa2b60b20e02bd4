#pragma once

// Greedy maximal matching (lexicographic edge scan) and the standard
// 2-approximate vertex cover built from its endpoints.

#include <vector>

#include "pcolor/cycles.hpp"
#include "pcolor/graph.hpp"

namespace pcolor {

inline Matching greedy_maximal_matching(const Graph& g) {
    Matching m;
    std::vector<char> matched(g.n(), 0);
    for (int u = 0; u < g.n(); ++u) {
        if (matched[u]) continue;
        for (int v : g.neighbors(u)) {
            if (v <= u || matched[v]) continue;
            m.edges.emplace_back(u, v);
            matched[u] = matched[v] = 1;
            break;
        }
    }
    return m;
}

inline bool validate_matching(const Graph& g, const Matching& m) {
    std::vector<char> used(g.n(), 0);
    for (auto [u, v] : m.edges) {
        if (u < 0 || u >= g.n() || v < 0 || v >= g.n() || !g.has_edge(u, v)) return false;
        if (used[u] || used[v]) return false;
        used[u] = used[v] = 1;
    }
    return true;
}

// Endpoints of a greedy maximal matching; covers every edge, size at most
// twice the minimum vertex cover.
inline std::vector<int> vertex_cover_2approx(const Graph& g) {
    auto m = greedy_maximal_matching(g);
    std::vector<int> cover;
    cover.reserve(2 * m.edges.size());
    for (auto [u, v] : m.edges) {
        cover.push_back(u);
        cover.push_back(v);
    }
    std::sort(cover.begin(), cover.end());
    return cover;
}

inline bool is_vertex_cover(const Graph& g, const std::vector<int>& cover) {
    std::vector<char> in(g.n(), 0);
    for (int v : cover) in[v] = 1;
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

inline bool is_independent_set(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in(g.n(), 0);
    for (int v : set) {
        if (v < 0 || v >= g.n()) return false;
        in[v] = 1;
    }
    for (int v : set)
        for (int w : g.neighbors(v))
            if (in[w]) return false;
    return true;
}

}  // namespace pcolor
