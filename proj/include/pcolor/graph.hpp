#pragma once

// Undirected simple graph in canonical form: vertex ids 0..n-1, neighbor
// lists sorted ascending, no self-loops or parallel edges. Graphs are
// immutable after construction; vertex deletion is expressed through
// induced_subgraph.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pcolor/errors.hpp"

namespace pcolor {

class Graph {
public:
    Graph() = default;

    // Canonicalizes: both orientations and duplicate pairs collapse to one edge.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        if (n < 0) throw ContractViolation("graph: negative vertex count");
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, {});
        for (auto [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ContractViolation("graph: vertex id out of range");
            if (u == v) throw ContractViolation("graph: self-loop");
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (auto& nb : g.adj_) {
            std::sort(nb.begin(), nb.end());
            nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        }
        for (int u = 0; u < n; ++u) g.m_ += g.adj_[u].size();
        g.m_ /= 2;
        return g;
    }

    int n() const { return n_; }
    std::size_t edge_count() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        const auto& nb = adj_[u];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges as (u,v) with u < v, lexicographic; the canonical scan order.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(m_);
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[u])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// DIMACS "p edge n m" reader. 1-based ids in the file, 0-based in the Graph.
// Duplicate edge lines and both orientations collapse; malformed input names
// the offending line.
inline Graph parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    int n = -1;
    long long m_declared = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        // strip trailing CR and skip blank lines
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'c') continue;
        if (kind == 'p') {
            std::string fmt;
            long long nn, mm;
            if (!(ls >> fmt >> nn >> mm) || (fmt != "edge" && fmt != "col") || nn < 0 || mm < 0)
                throw ParseError(lineno, "malformed problem line, expected 'p edge <n> <m>'");
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            n = static_cast<int>(nn);
            m_declared = mm;
            continue;
        }
        if (kind == 'e') {
            if (n < 0) throw ParseError(lineno, "edge line before problem line");
            long long u, v;
            if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "vertex id out of range 1.." + std::to_string(n));
            if (u == v) throw ParseError(lineno, "self-loop");
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            continue;
        }
        throw ParseError(lineno, std::string("unknown line kind '") + kind + "'");
    }
    if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing problem line");
    (void)m_declared;  // header count is advisory; canonicalization recounts
    return Graph::from_edges(n, edges);
}

// Canonical writer: header, then "e u v" with u < v, ascending, 1-based.
inline std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.n() << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
    return out.str();
}

// Subgraph induced on `keep`. New ids are 0..|keep|-1 in ascending original-id
// order; returned map sends new id -> original id.
inline std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g,
                                                           const std::vector<int>& keep) {
    std::vector<int> ids(keep);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<int> new_of(g.n(), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= g.n()) throw ContractViolation("induced_subgraph: id out of range");
        new_of[ids[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u : ids)
        for (int v : g.neighbors(u))
            if (u < v && new_of[v] >= 0) edges.emplace_back(new_of[u], new_of[v]);
    return {Graph::from_edges(static_cast<int>(ids.size()), edges), ids};
}

// --- tiny numeric helpers shared across modules ---

// floor/ceil guarded against values sitting a few ulps off an integer
inline long long floor_stable(double x) { return static_cast<long long>(std::floor(x + 1e-9)); }
inline long long ceil_stable(double x) { return static_cast<long long>(std::ceil(x - 1e-9)); }

// smallest r >= 1 with r^k >= n; exact integer form of ceil(n^(1/k))
inline int ceil_root(long long n, int k) {
    if (n <= 1) return 1;
    int r = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(n), 1.0 / k))) - 2);
    auto pow_ge = [&](long long base) {
        long long acc = 1;
        for (int i = 0; i < k; ++i) {
            acc *= base;
            if (acc >= n) return true;
        }
        return false;
    };
    while (!pow_ge(r)) ++r;
    return r;
}

// ceil(n^(3/4)): smallest d with d^4 >= n^3
inline int ceil_pow34(long long n) {
    if (n <= 1) return static_cast<int>(n);
    long long n3 = n * n * n;
    int d = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(n), 0.75))) - 2);
    auto ok = [&](long long x) {
        long long acc = 1;
        for (int i = 0; i < 4; ++i) {
            acc *= x;
            if (acc >= n3) return true;
        }
        return acc >= n3;
    };
    while (!ok(d)) ++d;
    return d;
}

}  // namespace pcolor
