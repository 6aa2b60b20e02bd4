#pragma once

// Adversarial-model pipelines.
//
// partial_3_color: solve the k=3 SDP, drop vertices with w >= gamma/3,
// degree-reduce at Delta = ceil(n^(3/4)) by coloring high-degree
// neighborhoods through their projected (2,4g')-vector colorings, then
// hyperplane-round the bounded-degree residual.
//
// partial_2_color: solve the k=2 SDP, drop w >= gamma/4, and color the
// residual directly via the odd-cycle-free machinery (no degree reduction).
//
// Finite-precision slack is absorbed into gamma: downstream stages run at
// gamma' = gamma + (solver edge residual), so every downstream guarantee
// holds for the vectors actually returned.

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "pcolor/coloring.hpp"
#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/oddcycle.hpp"
#include "pcolor/rng.hpp"
#include "pcolor/sdp.hpp"

namespace pcolor::rounding {

// S = {i : w_i >= gamma/3} for k=3, {i : w_i >= gamma/4} for k=2 (>= at the
// boundary). |S| <= (3 or 4) * objective / gamma by Markov, an arithmetic
// identity on the returned solution.
inline std::vector<int> threshold_slack_vertices(const sdp::SdpSolution& sol, double gamma, int k) {
    if (k != 2 && k != 3) throw ParamError("threshold_slack_vertices: k must be 2 or 3");
    double cut = k == 3 ? gamma / 3.0 : gamma / 4.0;
    std::vector<int> S;
    for (int i = 0; i < sol.n; ++i)
        if (sol.w[i] >= cut) S.push_back(i);
    return S;
}

// Odd-cycle length bound implied by a (2,gamma2) vector coloring; the
// machinery needs ell >= 3, and below that the exclusion is vacuous anyway
// (the ball-growing greedy at ell=3 degrades to plain greedy MIS).
inline int odd_cycle_bound_for_slack(double gamma2) {
    if (gamma2 <= 0) return 3;
    long long ell = floor_stable(1.0 / (8.0 * std::sqrt(gamma2)));
    return static_cast<int>(std::max<long long>(3, ell));
}

struct DegreeReduction {
    std::map<int, int> colors;  // graph-local vertex -> color in [0, colors_used)
    int colors_used = 0;
    int passes = 0;
    std::vector<int> residual;         // vertices left, max degree < delta
    double max_projected_ip = -2.0;    // stat: worst neighborhood edge after projection
};

// Algorithm step (ii): while a vertex of degree >= delta exists (ties:
// lowest id), color {i} + N(i) with fresh colors via the projected
// neighborhood's odd-cycle-free coloring, then delete it. Each pass removes
// at least delta+1 vertices, so passes <= ceil(n/delta).
inline DegreeReduction reduce_degree(const Graph& g, const std::vector<double>& vectors, int dim,
                                     int delta, double gamma_prime) {
    if (delta < 1) throw ParamError("reduce_degree: delta must be >= 1");
    DegreeReduction out;
    const int n = g.n();
    std::vector<char> alive(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    const int ell = odd_cycle_bound_for_slack(4.0 * gamma_prime);  // neighborhoods carry a (2,4g') witness
    for (;;) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && deg[v] >= delta && (pick == -1 || deg[v] > deg[pick])) pick = v;
        if (pick == -1) break;
        ++out.passes;
        std::vector<int> nb;
        for (int w : g.neighbors(pick))
            if (alive[w]) nb.push_back(w);
        auto projected = sdp::project_neighborhood(vectors, dim, pick, nb);
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b)
                if (g.has_edge(nb[a], nb[b]))
                    out.max_projected_ip =
                        std::max(out.max_projected_ip,
                                 sdp::dot(projected.data() + a * dim, projected.data() + b * dim, dim));
        auto [sub, ids] = induced_subgraph(g, nb);
        // restrict to alive is implicit: nb holds only alive vertices, and
        // g[nb] edges among them are exactly the alive-induced ones
        auto pc = color_no_short_odd_cycles(sub, ell);
        for (auto& [local, c] : pc.colors) out.colors[ids[local]] = out.colors_used + c;
        out.colors[pick] = out.colors_used + pc.num_colors;  // one extra fresh color
        out.colors_used += pc.num_colors + 1;
        alive[pick] = 0;
        for (int w : nb) alive[w] = 0;
        for (int w : nb)
            for (int x : g.neighbors(w))
                if (alive[x]) --deg[x];
        for (int x : g.neighbors(pick))
            if (alive[x]) --deg[x];
    }
    for (int v = 0; v < n; ++v)
        if (alive[v]) out.residual.push_back(v);
    return out;
}

// One hyperplane rounding trial: draw r ~ N(0,1)^dim,
// S(beta) = {i : <v_i,r> >= beta}, return the members with no neighbor in
// S(beta). beta uses the measured max degree (floored at 2).
inline std::vector<int> round_independent_set(const Graph& g, const std::vector<double>& vectors,
                                              int dim, double alpha, std::uint64_t seed) {
    if (alpha < 0 || alpha > 0.5) throw ParamError("round_independent_set: alpha outside [0, 1/2]");
    const int n = g.n();
    if (n == 0) return {};
    double max_deg = std::max(2, g.max_degree());
    double beta = std::sqrt(2.0 * std::log(max_deg)) *
                  std::sqrt(0.75 + alpha - alpha * alpha) / (1.5 - alpha);
    std::mt19937_64 eng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> r(dim);
    for (int t = 0; t < dim; ++t) r[t] = gauss(eng);
    std::vector<char> in_s(n, 0);
    for (int i = 0; i < n; ++i)
        in_s[i] = sdp::dot(vectors.data() + static_cast<std::size_t>(i) * dim, r.data(), dim) >= beta;
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (!in_s[i]) continue;
        bool isolated = true;
        for (int w : g.neighbors(i))
            if (in_s[w]) {
                isolated = false;
                break;
            }
        if (isolated) out.push_back(i);
    }
    return out;
}

struct HyperplaneColoring {
    PartialColoring coloring;  // full cover of the input graph
    int iterations = 0;
    int weak_iterations = 0;  // best trial below rho * survivors / 2
    int fallback_singletons = 0;
    double rho = 0;
    long long trials_per_iteration = 0;
};

// ApproxHyperplaneColoring: per iteration run N = ceil((10/rho) ln n)
// independent trials, keep the largest independent set (ties: first trial),
// color and delete it. An empty best trial falls back to removing the
// lowest surviving vertex as its own color class, so termination never
// depends on the rounding guarantee.
inline HyperplaneColoring approx_hyperplane_coloring(const Graph& g,
                                                     const std::vector<double>& vectors, int dim,
                                                     double alpha, double rho_constant,
                                                     std::uint64_t seed) {
    HyperplaneColoring out;
    const int n = g.n();
    if (n == 0) return out;
    double max_deg = std::max(2, g.max_degree());
    double exponent = (0.75 + alpha - alpha * alpha) / std::pow(1.5 - alpha, 2.0);
    out.rho = rho_constant * std::pow(std::log(max_deg), -0.5) * std::pow(max_deg, -exponent);
    out.trials_per_iteration =
        std::max<long long>(1, ceil_stable((10.0 / out.rho) * std::log(std::max(2, n))));
    std::vector<int> survivors(n);
    for (int v = 0; v < n; ++v) survivors[v] = v;
    int color = 0;
    while (!survivors.empty()) {
        ++out.iterations;
        auto [sub, ids] = induced_subgraph(g, survivors);
        std::vector<double> subvecs(static_cast<std::size_t>(sub.n()) * dim);
        for (int v = 0; v < sub.n(); ++v)
            for (int t = 0; t < dim; ++t)
                subvecs[static_cast<std::size_t>(v) * dim + t] =
                    vectors[static_cast<std::size_t>(ids[v]) * dim + t];
        std::vector<int> best;
        for (long long j = 0; j < out.trials_per_iteration; ++j) {
            auto trial = round_independent_set(
                sub, subvecs, dim, alpha,
                rng::derive(seed, "hyperplane-trial", static_cast<std::uint64_t>(out.iterations),
                            static_cast<std::uint64_t>(j)));
            if (trial.size() > best.size()) best = std::move(trial);
        }
        if (2.0 * static_cast<double>(best.size()) < out.rho * static_cast<double>(sub.n()))
            ++out.weak_iterations;
        std::vector<char> taken(sub.n(), 0);
        if (best.empty()) {
            ++out.fallback_singletons;
            taken[0] = 1;  // lowest surviving id (ids ascending)
            out.coloring.colors[ids[0]] = color;
        } else {
            for (int v : best) {
                taken[v] = 1;
                out.coloring.colors[ids[v]] = color;
            }
        }
        ++color;
        std::vector<int> rest;
        for (int v = 0; v < sub.n(); ++v)
            if (!taken[v]) rest.push_back(ids[v]);
        survivors = std::move(rest);
    }
    out.coloring.num_colors = color;
    return out;
}

struct PipelineParams {
    double eps = 0.0;
    double gamma = 0.01;
    int delta = 0;                // 0: ceil(n^(3/4))
    double rho_constant = 0.125;  // sizes the per-round set fraction rho and trial count N only
    sdp::SolverConfig solver;     // k is overridden per pipeline
    std::uint64_t seed = 1;

    void validate() const {
        if (eps < 0 || eps >= 1) throw ParamError("pipeline: eps must be in [0,1)");
        if (gamma <= 0) throw ParamError("pipeline: gamma must be positive");
        if (gamma < eps || gamma > 0.1 + 1e-12)
            throw ParamError("pipeline: gamma must lie in [eps, 1/10]");
    }
};

struct PipelineResult {
    std::vector<int> S;
    PartialColoring coloring;  // colors V \ S, discarded == S
    int num_colors = 0;
    double sdp_objective = 0;
    sdp::ResidualReport sdp_residuals;
    int sdp_rounds = 0;
    double gamma_prime = 0;
    int delta = 0;
    int degree_passes = 0;
    int degree_colors = 0;
    int residual_size = 0;        // vertices left after degree reduction
    int residual_max_degree = 0;  // measured within the residual subgraph
    int rounding_iterations = 0;
    int weak_rounding_iterations = 0;
    int oddfree_colors = 0;
};

inline PipelineResult partial_3_color(const Graph& g, PipelineParams params) {
    params.validate();
    if (g.n() == 0) throw ContractViolation("partial_3_color: empty graph");
    params.solver.k = 3;
    params.solver.seed = rng::derive(params.seed, "sdp");
    auto sol = sdp::solve_partial_coloring_sdp(g, params.solver);

    PipelineResult out;
    out.S = threshold_slack_vertices(sol, params.gamma, 3);
    out.sdp_objective = sol.objective;
    out.sdp_residuals = sol.residuals;
    out.sdp_rounds = sol.rounds_used;
    out.gamma_prime = params.gamma + sol.residuals.edge_ip;
    out.delta = params.delta > 0 ? params.delta : ceil_pow34(g.n());

    std::vector<char> removed(g.n(), 0);
    for (int v : out.S) removed[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    auto [gp, ids] = induced_subgraph(g, keep);
    std::vector<double> vecs(static_cast<std::size_t>(gp.n()) * sol.dim);
    for (int v = 0; v < gp.n(); ++v)
        for (int t = 0; t < sol.dim; ++t)
            vecs[static_cast<std::size_t>(v) * sol.dim + t] =
                sol.vectors[static_cast<std::size_t>(ids[v]) * sol.dim + t];

    auto red = reduce_degree(gp, vecs, sol.dim, out.delta, out.gamma_prime);
    out.degree_passes = red.passes;
    out.degree_colors = red.colors_used;
    for (auto& [local, c] : red.colors) out.coloring.colors[ids[local]] = c;

    out.residual_size = static_cast<int>(red.residual.size());
    if (!red.residual.empty()) {
        auto [gr, ids2] = induced_subgraph(gp, red.residual);
        out.residual_max_degree = gr.max_degree();
        std::vector<double> vecs2(static_cast<std::size_t>(gr.n()) * sol.dim);
        for (int v = 0; v < gr.n(); ++v)
            for (int t = 0; t < sol.dim; ++t)
                vecs2[static_cast<std::size_t>(v) * sol.dim + t] =
                    vecs[static_cast<std::size_t>(ids2[v]) * sol.dim + t];
        auto hp = approx_hyperplane_coloring(gr, vecs2, sol.dim, out.gamma_prime,
                                             params.rho_constant, rng::derive(params.seed, "rounding"));
        out.rounding_iterations = hp.iterations;
        out.weak_rounding_iterations = hp.weak_iterations;
        for (auto& [local, c] : hp.coloring.colors)
            out.coloring.colors[ids[ids2[local]]] = red.colors_used + c;
    }
    for (int v : out.S) out.coloring.discarded.insert(v);
    out.coloring.recount();
    out.num_colors = out.coloring.num_colors;
    return out;
}

inline PipelineResult partial_2_color(const Graph& g, PipelineParams params) {
    params.validate();
    if (g.n() == 0) throw ContractViolation("partial_2_color: empty graph");
    params.solver.k = 2;
    params.solver.seed = rng::derive(params.seed, "sdp");
    auto sol = sdp::solve_partial_coloring_sdp(g, params.solver);

    PipelineResult out;
    out.S = threshold_slack_vertices(sol, params.gamma, 2);
    out.sdp_objective = sol.objective;
    out.sdp_residuals = sol.residuals;
    out.sdp_rounds = sol.rounds_used;
    out.gamma_prime = params.gamma + sol.residuals.edge_ip;

    std::vector<char> removed(g.n(), 0);
    for (int v : out.S) removed[v] = 1;
    std::vector<int> keep;
    for (int v = 0; v < g.n(); ++v)
        if (!removed[v]) keep.push_back(v);
    auto [gp, ids] = induced_subgraph(g, keep);
    int ell = odd_cycle_bound_for_slack(out.gamma_prime);
    auto pc = color_no_short_odd_cycles(gp, ell);
    out.oddfree_colors = pc.num_colors;
    for (auto& [local, c] : pc.colors) out.coloring.colors[ids[local]] = c;
    for (int v : out.S) out.coloring.discarded.insert(v);
    out.coloring.recount();
    out.num_colors = out.coloring.num_colors;
    return out;
}

}  // namespace pcolor::rounding
