#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "pcolor/coloring.hpp"
#include "pcolor/oracle.hpp"

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

Graph petersen() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
        e.emplace_back(i, 5 + i);
    }
    return Graph::from_edges(10, e);
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u(eng) < p) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("exact_chromatic_number basics") {
    REQUIRE(oracle::exact_chromatic_number(k_n(3)) == 3);
    REQUIRE(oracle::exact_chromatic_number(cycle_n(5)) == 3);
    REQUIRE(oracle::exact_chromatic_number(Graph::from_edges(4, {})) == 1);
}

TEST_CASE("Petersen chromatic number is 3, with exhibited coloring") {
    auto g = petersen();
    REQUIRE(oracle::exact_chromatic_number(g) == 3);
    auto col = oracle::find_k_coloring(g, 3);
    REQUIRE(col.has_value());
    PartialColoring pc;
    for (int v = 0; v < g.n(); ++v) pc.colors[v] = (*col)[v];
    pc.recount();
    REQUIRE(is_proper(g, pc));
    REQUIRE_FALSE(oracle::find_k_coloring(g, 2).has_value());
}

TEST_CASE("oracle guards fire") {
    auto big = Graph::from_edges(17, {});
    REQUIRE_THROWS_AS(oracle::exact_chromatic_number(big), OracleGuardError);
    REQUIRE_THROWS_AS(oracle::max_induced_k_colorable(Graph::from_edges(15, {}), 2),
                      OracleGuardError);
    REQUIRE_THROWS_AS(oracle::max_disjoint_odd_cycles(Graph::from_edges(13, {}), 3),
                      OracleGuardError);
    REQUIRE_THROWS_AS(oracle::max_independent_set(Graph::from_edges(21, {})), OracleGuardError);
}

TEST_CASE("max_induced_k_colorable") {
    auto r = oracle::max_induced_k_colorable(k_n(4), 3);
    REQUIRE(r.num == 3);
    REQUIRE(r.den == 4);

    auto bip = Graph::from_edges(6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}});
    auto rb = oracle::max_induced_k_colorable(bip, 2);
    REQUIRE(rb.num == 6);

    auto rc = oracle::max_induced_k_colorable(cycle_n(5), 2);
    REQUIRE(rc.num == 4);
    REQUIRE(rc.den == 5);
}

TEST_CASE("max_induced witness is k-colorable") {
    for (std::uint64_t s = 0; s < 8; ++s) {
        auto g = random_graph(9, 0.45, 100 + s);
        for (int k = 1; k <= 3; ++k) {
            auto r = oracle::max_induced_k_colorable(g, k);
            auto [sub, ids] = induced_subgraph(g, r.witness);
            REQUIRE(oracle::exact_chromatic_number(sub) <= k);
        }
    }
}

TEST_CASE("max_disjoint_odd_cycles") {
    // two disjoint triangles
    auto g2 = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    REQUIRE(oracle::max_disjoint_odd_cycles(g2, 3) == 2);
    REQUIRE(oracle::max_disjoint_odd_cycles(cycle_n(4), 5) == 0);
    REQUIRE(oracle::max_disjoint_odd_cycles(k_n(5), 3) == 1);
}

TEST_CASE("max_independent_set") {
    REQUIRE(oracle::max_independent_set(k_n(3)).size() == 1);
    REQUIRE(oracle::max_independent_set(cycle_n(5)).size() == 2);
    REQUIRE(oracle::max_independent_set(petersen()).size() == 4);
}

TEST_CASE("chromatic number bounded by max degree + 1") {
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto g = random_graph(3 + static_cast<int>(s % 8), 0.4, 7000 + s);
        REQUIRE(oracle::exact_chromatic_number(g) <= g.max_degree() + 1);
    }
}

TEST_CASE("shortest odd cycle length oracle") {
    REQUIRE(oracle::shortest_odd_cycle_length(petersen()) == 5);
    REQUIRE(oracle::shortest_odd_cycle_length(cycle_n(4)) == 0);
    REQUIRE(oracle::shortest_odd_cycle_length(k_n(4)) == 3);
}

TEST_CASE("matching and cover oracles agree with Koenig on bipartite graphs") {
    for (std::uint64_t s = 0; s < 12; ++s) {
        // random bipartite on <= 10 vertices
        std::mt19937_64 eng(4000 + s);
        int a = 2 + static_cast<int>(eng() % 4), b = 2 + static_cast<int>(eng() % 4);
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j)
                if (eng() % 2 == 0) e.emplace_back(i, a + j);
        auto g = Graph::from_edges(a + b, e);
        REQUIRE(oracle::max_matching_size(g) == oracle::min_vertex_cover_size(g));
    }
}
