#pragma once

// Semi-random planted instances and the two recovery algorithms.
//
// generate() follows the five-step model: fix the good/bad split, build an
// always-k-colorable good subgraph, an adversarial bad subgraph, random
// cross edges E0 at rate p (one hash-derived coin per pair, so regeneration
// never depends on evaluation order), and extra adversarial cross edges E1.
//
// p3c_random thresholds on the number of vertex-disjoint short odd cycles
// in each neighborhood; p2c_random on greedy neighborhood matchings. Both
// keep the fallback branch (odd-cycle-free coloring / vertex-cover
// complement) that never needs the random edges to cooperate.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pcolor/coloring.hpp"
#include "pcolor/cycles.hpp"
#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/matching.hpp"
#include "pcolor/oddcycle.hpp"
#include "pcolor/rng.hpp"

namespace pcolor::semirandom {

struct AdversarySpec {
    enum class Bad { Empty, Gnp, Clique, Custom };
    enum class Cross { None, Random, Custom };
    enum class Good { KPartite, StarForest };

    Bad bad_policy = Bad::Empty;
    double bad_q = 0.5;
    std::vector<std::pair<int, int>> bad_edges;  // Custom: pairs within V_bad

    Cross e1_policy = Cross::None;
    double e1_q = 0.0;
    std::vector<std::pair<int, int>> e1_edges;  // Custom: good x bad pairs

    Good good_shape = Good::KPartite;
    double good_q = 0.25;  // cross-part edge probability
    int star_size = 10;    // StarForest: vertices per star

    std::string describe() const {
        std::string s = "good=";
        s += good_shape == Good::KPartite ? "kpartite(q=" + std::to_string(good_q) + ")"
                                          : "starforest(size=" + std::to_string(star_size) + ")";
        s += " bad=";
        switch (bad_policy) {
            case Bad::Empty: s += "empty"; break;
            case Bad::Gnp: s += "gnp(q=" + std::to_string(bad_q) + ")"; break;
            case Bad::Clique: s += "clique"; break;
            case Bad::Custom: s += "custom(" + std::to_string(bad_edges.size()) + ")"; break;
        }
        s += " e1=";
        switch (e1_policy) {
            case Cross::None: s += "none"; break;
            case Cross::Random: s += "random(q=" + std::to_string(e1_q) + ")"; break;
            case Cross::Custom: s += "custom(" + std::to_string(e1_edges.size()) + ")"; break;
        }
        return s;
    }
};

struct PlantedInstance {
    Graph graph;
    std::vector<int> good;  // ascending ids
    std::vector<int> bad;   // ascending ids (the last floor(eps*n))
    double p = 0;
    double eps = 0;
    int k = 3;
    std::map<int, int> planted_coloring;  // proper k-coloring of graph[good]
    std::uint64_t seed = 0;
    AdversarySpec adversary;
    std::vector<std::pair<int, int>> e1_edges;  // realized E1
};

inline PlantedInstance generate(int n, double eps, double p, int k, const AdversarySpec& adv,
                                std::uint64_t seed) {
    if (n <= 0) throw ParamError("generate: n must be positive");
    if (eps < 0 || eps >= 1) throw ParamError("generate: eps must be in [0,1)");
    if (p < 0 || p > 1) throw ParamError("generate: p must be in [0,1]");
    if (k != 2 && k != 3) throw ParamError("generate: k must be 2 or 3");

    PlantedInstance inst;
    inst.p = p;
    inst.eps = eps;
    inst.k = k;
    inst.seed = seed;
    inst.adversary = adv;

    const int n_bad = static_cast<int>(floor_stable(eps * n));
    const int n_good = n - n_bad;
    for (int v = 0; v < n_good; ++v) inst.good.push_back(v);
    for (int v = n_good; v < n; ++v) inst.bad.push_back(v);

    std::vector<std::pair<int, int>> edges;

    // step 2: good subgraph, k-colorable by construction
    if (adv.good_shape == AdversarySpec::Good::KPartite) {
        for (int v = 0; v < n_good; ++v) inst.planted_coloring[v] = v % k;
        for (int i = 0; i < n_good; ++i)
            for (int j = i + 1; j < n_good; ++j)
                if (i % k != j % k && rng::coin(seed, "good-edge", i, j, adv.good_q))
                    edges.emplace_back(i, j);
    } else {
        int size = std::max(2, adv.star_size);
        for (int v = 0; v < n_good; ++v) {
            int center = (v / size) * size;
            inst.planted_coloring[v] = v == center ? 0 : 1;
            if (v != center) edges.emplace_back(center, v);
        }
    }

    // step 3: bad subgraph per policy
    switch (adv.bad_policy) {
        case AdversarySpec::Bad::Empty:
            break;
        case AdversarySpec::Bad::Clique:
            for (int i = n_good; i < n; ++i)
                for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
            break;
        case AdversarySpec::Bad::Gnp:
            for (int i = n_good; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (rng::coin(seed, "bad-edge", i, j, adv.bad_q)) edges.emplace_back(i, j);
            break;
        case AdversarySpec::Bad::Custom:
            for (auto [u, v] : adv.bad_edges) {
                if (u < n_good || v < n_good || u >= n || v >= n || u == v)
                    throw GenerateError("custom bad edge is not a pair within V_bad", {{u, v}});
                edges.emplace_back(u, v);
            }
            break;
    }

    // step 4: E0, one coin per good x bad pair
    for (int i = 0; i < n_good; ++i)
        for (int j = n_good; j < n; ++j)
            if (rng::coin(seed, "cross-edge", i, j, p)) edges.emplace_back(i, j);

    // step 5: E1 per policy
    switch (adv.e1_policy) {
        case AdversarySpec::Cross::None:
            break;
        case AdversarySpec::Cross::Random:
            for (int i = 0; i < n_good; ++i)
                for (int j = n_good; j < n; ++j)
                    if (rng::coin(seed, "e1-edge", i, j, adv.e1_q)) {
                        edges.emplace_back(i, j);
                        inst.e1_edges.emplace_back(i, j);
                    }
            break;
        case AdversarySpec::Cross::Custom:
            for (auto [u, v] : adv.e1_edges) {
                int a = std::min(u, v), b = std::max(u, v);
                if (a < 0 || a >= n_good || b < n_good || b >= n)
                    throw GenerateError("custom E1 edge is not a good x bad pair", {{u, v}});
                edges.emplace_back(a, b);
                inst.e1_edges.emplace_back(a, b);
            }
            break;
    }

    inst.graph = Graph::from_edges(n, edges);
    return inst;
}

// Wigderson-style baseline: while a vertex has degree >= ceil(sqrt(n)),
// 2-color its (necessarily bipartite) neighborhood with fresh colors and a
// third fresh color for the vertex itself, delete, repeat; greedy-color the
// low-degree remainder from one final fresh palette. At most 4*ceil(sqrt n)
// + 2 colors. A non-bipartite neighborhood certifies non-3-colorability.
inline PartialColoring wigderson_color(const Graph& g) {
    const int n = g.n();
    PartialColoring pc;
    if (n == 0) return pc;
    const int threshold = static_cast<int>(ceil_stable(std::sqrt(static_cast<double>(n))));
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int next_color = 0;
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] >= threshold && (pick == -1 || deg[v] > deg[pick])) pick = v;
        if (pick == -1) break;
        std::vector<int> nb;
        for (int w : g.neighbors(pick))
            if (alive[w]) nb.push_back(w);
        auto [sub, ids] = induced_subgraph(g, nb);
        auto side = bipartition(sub);
        if (!side) {
            auto cyc = find_odd_cycle(sub);
            std::vector<int> mapped;
            for (int u : *cyc) mapped.push_back(ids[u]);
            throw NotThreeColorableError(pick, std::move(mapped));
        }
        for (int u = 0; u < sub.n(); ++u) pc.colors[ids[u]] = next_color + (*side)[u];
        pc.colors[pick] = next_color + 2;
        next_color += 3;
        alive[pick] = 0;
        for (int w : nb) alive[w] = 0;
        for (int w : nb)
            for (int x : g.neighbors(w))
                if (alive[x]) --deg[x];
        for (int x : g.neighbors(pick))
            if (alive[x]) --deg[x];
    }
    // greedy tail on the < threshold remainder, one fresh palette;
    // cross-stage edges never conflict since earlier stages used their own
    // color ranges
    std::vector<int> palette_used(threshold + 2, -1);
    for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        for (int w : g.neighbors(v)) {
            if (!alive[w]) continue;
            auto it = pc.colors.find(w);
            if (it != pc.colors.end()) palette_used[it->second - next_color] = v;
        }
        int c = 0;
        while (palette_used[c] == v) ++c;
        pc.colors[v] = next_color + c;
    }
    pc.recount();
    return pc;
}

// Color budget the Wigderson baseline guarantees on an m-vertex
// 3-colorable graph; plays the role of "n^theta colors" (theta = 1/2).
inline long long wigderson_budget(int m) {
    if (m <= 0) return 1;
    return 4 * ceil_stable(std::sqrt(static_cast<double>(m))) + 2;
}

// Pluggable exact-3-coloring approximation: a
// run function that may fail with a certificate, plus the color budget the
// algorithm guarantees on an m-vertex 3-colorable input. The branch gate
// compares colors actually used against budget(m); with the literal n^theta
// the gate could never accept a colorer whose guarantee carries a constant
// factor, such as this Wigderson baseline.
struct ColorerResult {
    bool ok = false;
    PartialColoring coloring;
    int colors_used = 0;
    std::optional<NotThreeColorableError> certificate;
};

struct Colorer {
    std::function<ColorerResult(const Graph&)> run;
    std::function<long long(int)> budget;
    double theta = 0.5;
};

inline Colorer wigderson_colorer() {
    Colorer col;
    col.theta = 0.5;
    col.budget = [](int m) { return wigderson_budget(m); };
    col.run = [](const Graph& g) {
        ColorerResult res;
        try {
            res.coloring = wigderson_color(g);
            res.colors_used = res.coloring.num_colors;
            res.ok = true;
        } catch (const NotThreeColorableError& err) {
            res.certificate = err;
        }
        return res;
    };
    return col;
}

struct P3cResult {
    std::vector<int> S;              // threshold set {v : |C_v| >= ceil(2 eps n)}
    char branch = 'B';               // 'A': colorer on V\S, 'B': odd-cycle removal
    PartialColoring coloring;        // discarded = S (A) or cycle vertices (B)
    std::vector<CycleSet> cycles_per_vertex;
    long long threshold = 0;
    int ell = 0;
    int colorer_colors = -1;         // -1 when the colorer failed
    std::vector<int> removed;        // vertices not colored (== discarded)
};

inline P3cResult p3c_random(const Graph& g, double eps, double theta, const Colorer& colorer,
                            std::uint64_t seed) {
    if (eps <= 0 || eps >= 1) throw ParamError("p3c_random: eps must be in (0,1)");
    if (theta <= 0 || theta >= 1) throw ParamError("p3c_random: theta must be in (0,1)");
    (void)seed;  // both branches are deterministic; kept for interface symmetry
    const int n = g.n();
    const double delta = theta / 10.0;
    P3cResult out;
    out.ell = static_cast<int>(std::max<long long>(3, floor_stable(1.0 / delta)));
    out.threshold = std::max<long long>(1, ceil_stable(2.0 * eps * n));

    out.cycles_per_vertex.reserve(n);
    for (int v = 0; v < n; ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        auto cs = greedy_disjoint_odd_cycles(sub, out.ell);
        for (auto& cyc : cs.cycles)
            for (int& u : cyc) u = ids[u];
        out.cycles_per_vertex.push_back(std::move(cs));
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<long long>(out.cycles_per_vertex[v].cycles.size()) >= out.threshold)
            out.S.push_back(v);

    // branch A: colorer on G[V \ S]
    std::vector<char> in_s(n, 0);
    for (int v : out.S) in_s[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) keep.push_back(v);
    auto [g0, ids0] = induced_subgraph(g, keep);
    auto colorer_res = colorer.run(g0);
    if (colorer_res.ok) out.colorer_colors = colorer_res.colors_used;

    bool use_a = colorer_res.ok &&
                 static_cast<double>(out.S.size()) <= eps * n + 1e-9 &&
                 colorer_res.colors_used <= colorer.budget(g0.n());
    if (use_a) {
        out.branch = 'A';
        for (auto& [local, c] : colorer_res.coloring.colors) out.coloring.colors[ids0[local]] = c;
        for (int v : out.S) out.coloring.discarded.insert(v);
        out.removed = out.S;
    } else {
        out.branch = 'B';
        auto cs = greedy_disjoint_odd_cycles(g, out.ell);
        std::vector<char> dead(n, 0);
        for (const auto& cyc : cs.cycles)
            for (int u : cyc) dead[u] = 1;
        std::vector<int> survivors;
        for (int v = 0; v < n; ++v)
            if (!dead[v]) survivors.push_back(v);
        auto [gp, idsp] = induced_subgraph(g, survivors);
        auto pc = color_no_short_odd_cycles(gp, out.ell);  // maximality certifies the precondition
        for (auto& [local, c] : pc.colors) out.coloring.colors[idsp[local]] = c;
        for (int v = 0; v < n; ++v)
            if (dead[v]) {
                out.coloring.discarded.insert(v);
                out.removed.push_back(v);
            }
    }
    out.coloring.recount();
    return out;
}

struct P2cResult {
    std::vector<int> S;                   // threshold set {v : t(v) >= ceil(2 eps n)}
    bool bipartite_branch = false;        // true: G0 returned, false: independent set
    std::vector<int> remainder;           // vert(G0) or the independent set G1
    std::vector<int> bipartition_sides;   // aligned with remainder when bipartite
    std::vector<int> cover;               // the 2-approx vertex cover behind G1
    std::vector<Matching> matchings_per_vertex;  // T(v)
    long long threshold = 0;
};

inline P2cResult p2c_random(const Graph& g, double eps, std::uint64_t seed) {
    if (eps <= 0 || eps >= 1) throw ParamError("p2c_random: eps must be in (0,1)");
    (void)seed;  // deterministic; kept for interface symmetry
    const int n = g.n();
    P2cResult out;
    out.threshold = std::max<long long>(1, ceil_stable(2.0 * eps * n));
    out.matchings_per_vertex.reserve(n);
    for (int v = 0; v < n; ++v) {
        auto [sub, ids] = induced_subgraph(g, g.neighbors(v));
        auto m = greedy_maximal_matching(sub);
        for (auto& [a, b] : m.edges) {
            a = ids[a];
            b = ids[b];
        }
        out.matchings_per_vertex.push_back(std::move(m));
    }
    for (int v = 0; v < n; ++v)
        if (static_cast<long long>(out.matchings_per_vertex[v].edges.size()) >= out.threshold)
            out.S.push_back(v);

    std::vector<char> in_s(n, 0);
    for (int v : out.S) in_s[v] = 1;
    std::vector<int> g0_vertices;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) g0_vertices.push_back(v);

    out.cover = vertex_cover_2approx(g);
    std::vector<char> covered(n, 0);
    for (int v : out.cover) covered[v] = 1;
    std::vector<int> g1_vertices;
    for (int v = 0; v < n; ++v)
        if (!covered[v]) g1_vertices.push_back(v);

    auto [g0, ids0] = induced_subgraph(g, g0_vertices);
    std::optional<std::vector<int>> side;
    if (g0_vertices.size() >= g1_vertices.size()) side = bipartition(g0);
    if (side) {
        out.bipartite_branch = true;
        out.remainder = g0_vertices;
        out.bipartition_sides = *side;
    } else {
        out.bipartite_branch = false;
        out.remainder = g1_vertices;
    }
    return out;
}

// --- frozen presets: pilot-calibrated, shared by bench and acceptance ---

inline AdversarySpec preset_recovery3_adv() {
    AdversarySpec adv;
    adv.bad_policy = AdversarySpec::Bad::Clique;
    adv.good_shape = AdversarySpec::Good::KPartite;
    adv.good_q = 0.25;
    return adv;
}

inline PlantedInstance preset_recovery3(std::uint64_t seed) {
    return generate(400, 0.01, 0.7, 3, preset_recovery3_adv(), seed);
}

inline AdversarySpec preset_recovery2_adv() {
    AdversarySpec adv;
    adv.bad_policy = AdversarySpec::Bad::Gnp;
    adv.bad_q = 0.5;
    adv.good_shape = AdversarySpec::Good::KPartite;
    adv.good_q = 0.25;
    return adv;
}

inline PlantedInstance preset_recovery2(std::uint64_t seed) {
    return generate(600, 0.02, 0.6, 2, preset_recovery2_adv(), seed);
}

inline AdversarySpec preset_starforest2_adv() {
    AdversarySpec adv;
    adv.bad_policy = AdversarySpec::Bad::Empty;  // bad side stays independent
    adv.good_shape = AdversarySpec::Good::StarForest;
    // ~10 stars: the good matching stays far below the 2*eps*n threshold,
    // so thresholding cannot separate good from bad and the cover branch
    // must carry the run
    adv.star_size = 60;
    return adv;
}

inline PlantedInstance preset_starforest2(std::uint64_t seed) {
    return generate(600, 0.02, 0.6, 2, preset_starforest2_adv(), seed);
}

}  // namespace pcolor::semirandom
