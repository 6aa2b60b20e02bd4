#pragma once

// Partial k-coloring SDP (k = 3 or 2) solved by a low-rank factorized
// penalty method. Unit-norm factor vectors v_i and box-clipped slacks w_i
// are the free variables; the per-edge slack z_ij appears in exactly two
// constraints and the objective is z-free, so it is eliminated in closed
// form each evaluation:
//
//   z_ij = max(0, min(1, min(w_i + w_j, (<v_i,v_j> + 1/(k-1)) * (k-1)/k)))
//
// The loop minimizes sum(w) plus quadratic penalties on violated edge
// constraints, escalating the penalty weight, and finishes with an exact
// per-edge lift of w that removes any remaining violation (the lift can
// only increase the objective, never break feasibility elsewhere).

#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"
#include "pcolor/rng.hpp"

namespace pcolor::sdp {

struct ResidualReport {
    double edge_ip = 0;  // <v_i,v_j> <= -1/(k-1) + k/(k-1) z_ij
    double z_link = 0;   // z_ij <= w_i + w_j
    double box = 0;      // 0 <= w, z <= 1
    double norm = 0;     // | ||v_i||^2 - 1 |

    double max_violation() const { return std::max(std::max(edge_ip, z_link), std::max(box, norm)); }
    bool pass(double tol) const { return max_violation() <= tol; }
};

struct SdpSolution {
    int n = 0;
    int dim = 0;
    int k = 3;
    std::vector<double> vectors;               // row-major n x dim, unit rows
    std::vector<double> w;                     // n, in [0,1]
    std::vector<std::pair<int, int>> edges;    // lexicographic, aligned with z
    std::vector<double> z;                     // per edge, in [0,1]
    double objective = 0;                      // sum w
    ResidualReport residuals;
    int rounds_used = 0;

    const double* vec(int i) const { return vectors.data() + static_cast<std::size_t>(i) * dim; }
};

struct SolverConfig {
    int k = 3;
    int dim = 0;  // 0: min(n, ceil(sqrt(2n)) + 1), floored at 3
    int max_rounds = 18;
    int iters_per_round = 400;
    double feas_tol = 1e-4;
    // Penalty warm-up: while 2*penalty*viol*k/(k-1) < 1 the w gradient stays
    // positive, so w sits clamped at 0 and the vectors alone chase
    // feasibility; w only starts absorbing slack once escalation makes the
    // residual edges expensive.
    double penalty0 = 0.5;
    double penalty_growth = 2.0;
    double lr = 0.05;
    std::uint64_t seed = 1;

    void validate() const {
        if (k != 2 && k != 3) throw ParamError("solver: k must be 2 or 3");
        if (dim != 0 && dim < 3) throw ParamError("solver: dim must be >= 3");
        if (feas_tol <= 0) throw ParamError("solver: feas_tol must be positive");
        if (max_rounds < 1 || iters_per_round < 1) throw ParamError("solver: iteration budget");
    }

    int resolve_dim(int n) const {
        if (dim != 0) return dim;
        int auto_dim = static_cast<int>(ceil_stable(std::sqrt(2.0 * n))) + 1;
        return std::max(3, std::min(n, auto_dim));
    }
};

inline double dot(const double* a, const double* b, int dim) {
    double s = 0;
    for (int t = 0; t < dim; ++t) s += a[t] * b[t];
    return s;
}

// Closed-form slack for one edge given the inner product and w sum.
inline double closed_form_z(double ip, double w_sum, int k) {
    double inv = 1.0 / (k - 1);
    double req = (ip + inv) * (k - 1) / k;
    double v = std::min(w_sum, req);
    return std::max(0.0, std::min(1.0, v));
}

inline ResidualReport check_feasibility(const Graph& g, const SdpSolution& sol) {
    if (sol.n != g.n() || sol.edges.size() != g.edge_count())
        throw ContractViolation("check_feasibility: solution does not match graph");
    ResidualReport r;
    double inv = 1.0 / (sol.k - 1);
    double scale = static_cast<double>(sol.k) / (sol.k - 1);
    for (std::size_t e = 0; e < sol.edges.size(); ++e) {
        auto [i, j] = sol.edges[e];
        double ip = dot(sol.vec(i), sol.vec(j), sol.dim);
        r.edge_ip = std::max(r.edge_ip, ip + inv - scale * sol.z[e]);
        r.z_link = std::max(r.z_link, sol.z[e] - sol.w[i] - sol.w[j]);
        r.box = std::max(r.box, std::max(-sol.z[e], sol.z[e] - 1.0));
    }
    for (int i = 0; i < sol.n; ++i) {
        r.box = std::max(r.box, std::max(-sol.w[i], sol.w[i] - 1.0));
        r.norm = std::max(r.norm, std::abs(dot(sol.vec(i), sol.vec(i), sol.dim) - 1.0));
    }
    r.edge_ip = std::max(0.0, r.edge_ip);
    r.z_link = std::max(0.0, r.z_link);
    r.box = std::max(0.0, r.box);
    return r;
}

// Max over edges of <v_i,v_j> + 1/(k-1): the gamma for which the vectors
// are a (k,gamma)-vector coloring of g (negative when strictly feasible).
inline double measured_edge_slack(const Graph& g, const std::vector<double>& vectors, int dim,
                                  int k) {
    double inv = 1.0 / (k - 1);
    double worst = -2.0;
    for (auto [i, j] : g.edges()) {
        double ip = dot(vectors.data() + static_cast<std::size_t>(i) * dim,
                        vectors.data() + static_cast<std::size_t>(j) * dim, dim);
        worst = std::max(worst, ip + inv);
    }
    return worst;
}

// Explicit feasible point for a known good/bad split: w = 1 on bad vertices, z = 1 on edges
// touching them, color-class unit vectors elsewhere. Objective |bad| exactly.
inline SdpSolution witness_solution(const Graph& g, const std::map<int, int>& good_coloring,
                                    const std::vector<int>& bad, int k) {
    if (k != 2 && k != 3) throw ParamError("witness_solution: k must be 2 or 3");
    std::vector<char> is_bad(g.n(), 0);
    for (int v : bad) {
        if (v < 0 || v >= g.n()) throw ContractViolation("witness_solution: bad vertex out of range");
        is_bad[v] = 1;
    }
    for (int v = 0; v < g.n(); ++v) {
        if (is_bad[v]) continue;
        auto it = good_coloring.find(v);
        if (it == good_coloring.end())
            throw ContractViolation("witness_solution: good vertex uncolored");
        if (it->second < 0 || it->second >= k)
            throw ContractViolation("witness_solution: color id out of range");
    }
    for (auto [u, v] : g.edges())
        if (!is_bad[u] && !is_bad[v] && good_coloring.at(u) == good_coloring.at(v))
            throw ContractViolation("witness_solution: good_coloring is not proper on the good part");

    SdpSolution sol;
    sol.n = g.n();
    sol.dim = 2;
    sol.k = k;
    sol.vectors.assign(static_cast<std::size_t>(g.n()) * 2, 0.0);
    sol.w.assign(g.n(), 0.0);
    const double root3_half = std::sqrt(3.0) / 2.0;
    auto put = [&](int v, double x, double y) {
        sol.vectors[2 * static_cast<std::size_t>(v)] = x;
        sol.vectors[2 * static_cast<std::size_t>(v) + 1] = y;
    };
    for (int v = 0; v < g.n(); ++v) {
        if (is_bad[v]) {
            put(v, 1.0, 0.0);
            sol.w[v] = 1.0;
            continue;
        }
        int c = good_coloring.at(v);
        if (k == 2) {
            put(v, c == 0 ? 1.0 : -1.0, 0.0);
        } else {
            if (c == 0)
                put(v, 1.0, 0.0);
            else
                put(v, -0.5, c == 1 ? root3_half : -root3_half);
        }
    }
    sol.edges = g.edges();
    sol.z.reserve(sol.edges.size());
    for (auto [u, v] : sol.edges) sol.z.push_back(is_bad[u] || is_bad[v] ? 1.0 : 0.0);
    for (double x : sol.w) sol.objective += x;
    sol.residuals = check_feasibility(g, sol);
    return sol;
}

inline SdpSolution solve_partial_coloring_sdp(const Graph& g, const SolverConfig& cfg) {
    cfg.validate();
    if (g.n() == 0) throw ContractViolation("solver: empty graph");
    const int n = g.n();
    const int dim = cfg.resolve_dim(n);
    const int k = cfg.k;
    const double inv = 1.0 / (k - 1);
    const double scale = static_cast<double>(k) / (k - 1);
    const auto edges = g.edges();
    const std::size_t m = edges.size();

    std::vector<double> V(static_cast<std::size_t>(n) * dim);
    std::vector<double> w(n, 0.0);
    {
        auto eng = rng::engine(cfg.seed, "sdp-init");
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int i = 0; i < n; ++i) {
            double* row = V.data() + static_cast<std::size_t>(i) * dim;
            double nrm2 = 0;
            for (int t = 0; t < dim; ++t) {
                row[t] = gauss(eng);
                nrm2 += row[t] * row[t];
            }
            double inv_nrm = 1.0 / std::sqrt(nrm2);
            for (int t = 0; t < dim; ++t) row[t] *= inv_nrm;
        }
    }

    // Adam state over (V, w)
    const std::size_t np = V.size() + w.size();
    std::vector<double> gradV(V.size()), gradw(n), m1(np, 0.0), m2(np, 0.0);
    const double b1 = 0.9, b2 = 0.999, eps_adam = 1e-9;
    long long step_count = 0;

    auto edge_residual = [&]() {
        double worst = 0;
        for (auto [i, j] : edges) {
            double ip = dot(V.data() + static_cast<std::size_t>(i) * dim,
                            V.data() + static_cast<std::size_t>(j) * dim, dim);
            double z = closed_form_z(ip, w[i] + w[j], k);
            worst = std::max(worst, ip + inv - scale * z);
        }
        return worst;
    };

    // Phase 1 shapes the vectors against the unslackened edge constraints
    // with w pinned at 0; only then does phase 2 unpin w and escalate the
    // penalty, so w absorbs exactly the edges the vectors cannot satisfy.
    const int phase1_rounds = std::max(1, (2 * cfg.max_rounds) / 5);
    double penalty = cfg.penalty0;
    int rounds_used = 0;
    for (int round = 0; round < cfg.max_rounds; ++round) {
        rounds_used = round + 1;
        const bool w_free = round >= phase1_rounds;
        const double round_lr = cfg.lr * std::pow(0.85, round);
        const double P = w_free ? penalty : 1.0;
        for (int it = 0; it < cfg.iters_per_round; ++it) {
            std::fill(gradV.begin(), gradV.end(), 0.0);
            std::fill(gradw.begin(), gradw.end(), 1.0);  // objective term
            for (auto [i, j] : edges) {
                const double* vi = V.data() + static_cast<std::size_t>(i) * dim;
                const double* vj = V.data() + static_cast<std::size_t>(j) * dim;
                double ip = dot(vi, vj, dim);
                double w_sum = w_free ? w[i] + w[j] : 0.0;
                double viol = ip + inv - scale * std::min(w_sum, 1.0);
                if (viol <= 0) continue;
                double coeff = 2.0 * P * viol;
                double* gi = gradV.data() + static_cast<std::size_t>(i) * dim;
                double* gj = gradV.data() + static_cast<std::size_t>(j) * dim;
                for (int t = 0; t < dim; ++t) {
                    gi[t] += coeff * vj[t];
                    gj[t] += coeff * vi[t];
                }
                if (w_sum < 1.0) {
                    gradw[i] -= coeff * scale;
                    gradw[j] -= coeff * scale;
                }
            }
            ++step_count;
            double bc1 = 1.0 - std::pow(b1, static_cast<double>(step_count));
            double bc2 = 1.0 - std::pow(b2, static_cast<double>(step_count));
            auto adam_step = [&](double* x, const double* gr, std::size_t off, std::size_t cnt) {
                for (std::size_t p = 0; p < cnt; ++p) {
                    double g1 = gr[p];
                    m1[off + p] = b1 * m1[off + p] + (1 - b1) * g1;
                    m2[off + p] = b2 * m2[off + p] + (1 - b2) * g1 * g1;
                    double mh = m1[off + p] / bc1, vh = m2[off + p] / bc2;
                    x[p] -= round_lr * mh / (std::sqrt(vh) + eps_adam);
                }
            };
            adam_step(V.data(), gradV.data(), 0, V.size());
            if (w_free) adam_step(w.data(), gradw.data(), V.size(), w.size());
            for (int i = 0; i < n; ++i) {
                double* row = V.data() + static_cast<std::size_t>(i) * dim;
                double nrm = std::sqrt(dot(row, row, dim));
                if (nrm < 1e-12) {
                    row[0] = 1.0;
                    for (int t = 1; t < dim; ++t) row[t] = 0.0;
                } else {
                    for (int t = 0; t < dim; ++t) row[t] /= nrm;
                }
                if (w_free) w[i] = std::min(1.0, std::max(0.0, w[i]));
            }
        }
        if (w_free) {
            if (edge_residual() <= 0.25 * cfg.feas_tol) break;
            penalty *= cfg.penalty_growth;
        }
    }

    // Exact lift: raise w so every edge constraint holds. Each deficient
    // edge is repaired by raising one endpoint by the full deficit --
    // preferring the endpoint with more deficient edges, so residual slack
    // concentrated on a few vertices is paid for once, not per neighbor.
    // One lexicographic pass suffices since w only increases.
    {
        std::vector<double> req(m);
        std::vector<int> deficient_deg(n, 0);
        for (std::size_t e = 0; e < m; ++e) {
            auto [i, j] = edges[e];
            double ip = dot(V.data() + static_cast<std::size_t>(i) * dim,
                            V.data() + static_cast<std::size_t>(j) * dim, dim);
            req[e] = (ip + inv) / scale;  // z needed; <= 1 since ip <= 1
            if (req[e] > w[i] + w[j]) {
                ++deficient_deg[i];
                ++deficient_deg[j];
            }
        }
        for (std::size_t e = 0; e < m; ++e) {
            auto [i, j] = edges[e];
            double deficit = req[e] - (w[i] + w[j]);
            if (deficit <= 0) continue;
            int pick;
            if (deficient_deg[i] != deficient_deg[j])
                pick = deficient_deg[i] > deficient_deg[j] ? i : j;
            else if (w[i] != w[j])
                pick = w[i] > w[j] ? i : j;
            else
                pick = i;
            w[pick] = std::min(1.0, w[pick] + deficit);
        }
    }

    SdpSolution sol;
    sol.n = n;
    sol.dim = dim;
    sol.k = k;
    sol.vectors = std::move(V);
    sol.w = std::move(w);
    sol.edges = edges;
    sol.z.reserve(m);
    for (auto [i, j] : edges) {
        double ip = dot(sol.vec(i), sol.vec(j), dim);
        sol.z.push_back(closed_form_z(ip, sol.w[i] + sol.w[j], k));
    }
    sol.objective = 0;
    for (double x : sol.w) sol.objective += x;
    sol.rounds_used = rounds_used;
    sol.residuals = check_feasibility(g, sol);
    if (!sol.residuals.pass(cfg.feas_tol))
        throw SolverStallError(sol.residuals.max_violation(), cfg.feas_tol);
    return sol;
}

// Neighborhood projection: for each neighbor j of center i,
// return the unit vector along v_j's component orthogonal to v_i.
inline std::vector<double> project_neighborhood(const std::vector<double>& vectors, int dim,
                                                int center, const std::vector<int>& neighborhood) {
    const double* vc = vectors.data() + static_cast<std::size_t>(center) * dim;
    std::vector<double> out(neighborhood.size() * static_cast<std::size_t>(dim));
    for (std::size_t a = 0; a < neighborhood.size(); ++a) {
        const double* vj = vectors.data() + static_cast<std::size_t>(neighborhood[a]) * dim;
        double ip = dot(vj, vc, dim);
        double* o = out.data() + a * dim;
        double nrm2 = 0;
        for (int t = 0; t < dim; ++t) {
            o[t] = vj[t] - ip * vc[t];
            nrm2 += o[t] * o[t];
        }
        if (nrm2 < 1e-18)
            throw ContractViolation("project_neighborhood: degenerate projection (v_j parallel to v_i)");
        double inv_nrm = 1.0 / std::sqrt(nrm2);
        for (int t = 0; t < dim; ++t) o[t] *= inv_nrm;
    }
    return out;
}

}  // namespace pcolor::sdp
