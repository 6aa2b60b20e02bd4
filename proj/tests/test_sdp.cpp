#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcolor/sdp.hpp"

using namespace pcolor;

namespace {

Graph k_n(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph cycle_n(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("witness_solution: K3 exact") {
    auto g = k_n(3);
    std::map<int, int> col{{0, 0}, {1, 1}, {2, 2}};
    auto sol = sdp::witness_solution(g, col, {}, 3);
    REQUIRE(sol.objective == 0.0);
    REQUIRE(sol.residuals.max_violation() <= 1e-12);
}

TEST_CASE("witness_solution: K4 with one bad vertex") {
    auto g = k_n(4);
    std::map<int, int> col{{0, 0}, {1, 1}, {2, 2}};
    auto sol = sdp::witness_solution(g, col, {3}, 3);
    REQUIRE(sol.objective == 1.0);
    REQUIRE(sol.residuals.max_violation() <= 1e-12);
}

TEST_CASE("witness_solution: C5 with one bad vertex, k=2") {
    auto g = cycle_n(5);
    // path 0-1-2-3 is 2-colorable, vertex 4 bad
    std::map<int, int> col{{0, 0}, {1, 1}, {2, 0}, {3, 1}};
    auto sol = sdp::witness_solution(g, col, {4}, 2);
    REQUIRE(sol.objective == 1.0);
    REQUIRE(sol.residuals.max_violation() <= 1e-12);
}

TEST_CASE("witness_solution rejects improper colorings") {
    auto g = k_n(3);
    std::map<int, int> bad_col{{0, 0}, {1, 0}, {2, 2}};
    REQUIRE_THROWS_AS(sdp::witness_solution(g, bad_col, {}, 3), ContractViolation);
}

TEST_CASE("check_feasibility flags a poked w") {
    auto g = k_n(4);
    std::map<int, int> col{{0, 0}, {1, 1}, {2, 2}};
    auto sol = sdp::witness_solution(g, col, {3}, 3);
    sol.w[3] -= 0.5;  // z on edges into 3 still 1 > w sums
    auto r = sdp::check_feasibility(g, sol);
    REQUIRE(r.z_link > 0.4);
}

TEST_CASE("solver: edgeless graph has objective 0") {
    auto g = Graph::from_edges(5, {});
    sdp::SolverConfig cfg;
    cfg.seed = 3;
    auto sol = sdp::solve_partial_coloring_sdp(g, cfg);
    REQUIRE(sol.objective == 0.0);
    REQUIRE(sol.residuals.pass(cfg.feas_tol));
}

TEST_CASE("solver: K3 with k=3 reaches near-zero objective") {
    auto g = k_n(3);
    sdp::SolverConfig cfg;
    cfg.seed = 5;
    auto sol = sdp::solve_partial_coloring_sdp(g, cfg);
    REQUIRE(sol.residuals.pass(cfg.feas_tol));
    REQUIRE(sol.objective <= cfg.feas_tol * g.n() + 1e-6);
}

TEST_CASE("solver: K4 with k=3 stays below the witness objective") {
    auto g = k_n(4);
    std::map<int, int> col{{0, 0}, {1, 1}, {2, 2}};
    auto witness = sdp::witness_solution(g, col, {3}, 3);
    sdp::SolverConfig cfg;
    cfg.seed = 11;
    auto sol = sdp::solve_partial_coloring_sdp(g, cfg);
    REQUIRE(sol.residuals.pass(cfg.feas_tol));
    REQUIRE(sol.objective <= witness.objective + 0.1);
}

TEST_CASE("solver: bipartite graph with k=2 reaches near-zero objective") {
    std::vector<std::pair<int, int>> e;
    std::mt19937_64 eng(21);
    for (int i = 0; i < 8; ++i)
        for (int j = 8; j < 16; ++j)
            if (eng() % 3 == 0) e.emplace_back(i, j);
    auto g = Graph::from_edges(16, e);
    sdp::SolverConfig cfg;
    cfg.k = 2;
    cfg.seed = 23;
    auto sol = sdp::solve_partial_coloring_sdp(g, cfg);
    REQUIRE(sol.residuals.pass(cfg.feas_tol));
    REQUIRE(sol.objective <= 0.05);
}

TEST_CASE("solver determinism: identical config and seed, identical bits") {
    auto g = k_n(6);
    sdp::SolverConfig cfg;
    cfg.seed = 99;
    cfg.max_rounds = 4;
    cfg.iters_per_round = 80;
    cfg.feas_tol = 1e-2;
    auto a = sdp::solve_partial_coloring_sdp(g, cfg);
    auto b = sdp::solve_partial_coloring_sdp(g, cfg);
    REQUIRE(a.vectors == b.vectors);
    REQUIRE(a.w == b.w);
    REQUIRE(a.z == b.z);
    REQUIRE(a.objective == b.objective);
}

TEST_CASE("solver rejects bad configs") {
    auto g = k_n(3);
    sdp::SolverConfig cfg;
    cfg.k = 4;
    REQUIRE_THROWS_AS(sdp::solve_partial_coloring_sdp(g, cfg), ParamError);
    cfg.k = 3;
    cfg.feas_tol = 0;
    REQUIRE_THROWS_AS(sdp::solve_partial_coloring_sdp(g, cfg), ParamError);
    cfg.feas_tol = 1e-4;
    cfg.dim = 2;
    REQUIRE_THROWS_AS(sdp::solve_partial_coloring_sdp(g, cfg), ParamError);
}

TEST_CASE("projection property on a solved K4") {
    auto g = k_n(4);
    sdp::SolverConfig cfg;
    cfg.seed = 31;
    auto sol = sdp::solve_partial_coloring_sdp(g, cfg);
    double gamma = std::max(0.0, sdp::measured_edge_slack(g, sol.vectors, sol.dim, 3));
    REQUIRE(gamma < 0.2);
    std::vector<int> nb{1, 2, 3};
    auto proj = sdp::project_neighborhood(sol.vectors, sol.dim, 0, nb);
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b2 = a + 1; b2 < nb.size(); ++b2) {
            if (!g.has_edge(nb[a], nb[b2])) continue;
            double ip = sdp::dot(proj.data() + a * sol.dim, proj.data() + b2 * sol.dim, sol.dim);
            REQUIRE(ip <= -1.0 + 4 * gamma + 1e-9);
        }
}

TEST_CASE("witness round-trips through check_feasibility exactly") {
    auto g = cycle_n(7);
    std::map<int, int> col;
    for (int v = 0; v < 6; ++v) col[v] = v % 2;
    auto sol = sdp::witness_solution(g, col, {6}, 2);
    auto r = sdp::check_feasibility(g, sol);
    REQUIRE(r.max_violation() <= 1e-12);
    REQUIRE(sol.objective == 1.0);
}
