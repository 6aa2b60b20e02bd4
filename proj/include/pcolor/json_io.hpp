#pragma once

// JSON schemas for the wire formats: PartialColoring, SdpSolution, planted
// ground truth sidecars, and pipeline/recovery result reports. All object
// keys are emitted through std::map, so serialization is deterministic.

#include <string>

#include <json.hpp>

#include "pcolor/coloring.hpp"
#include "pcolor/rounding.hpp"
#include "pcolor/sdp.hpp"
#include "pcolor/semirandom.hpp"

namespace pcolor::io {

using nlohmann::json;

inline json to_json(const PartialColoring& pc) {
    json colors = json::object();
    for (auto& [v, c] : pc.colors) colors[std::to_string(v)] = c;
    json j;
    j["colors"] = std::move(colors);
    j["discarded"] = std::vector<int>(pc.discarded.begin(), pc.discarded.end());
    j["num_colors"] = pc.num_colors;
    return j;
}

inline PartialColoring coloring_from_json(const json& j) {
    PartialColoring pc;
    for (auto& [key, val] : j.at("colors").items()) pc.colors[std::stoi(key)] = val.get<int>();
    for (int v : j.at("discarded").get<std::vector<int>>()) pc.discarded.insert(v);
    pc.num_colors = j.at("num_colors").get<int>();
    return pc;
}

inline json to_json(const sdp::ResidualReport& r) {
    return json{{"edge_ip", r.edge_ip}, {"z_link", r.z_link}, {"box", r.box}, {"norm", r.norm}};
}

inline json to_json(const sdp::SdpSolution& sol) {
    json vectors = json::array();
    for (int i = 0; i < sol.n; ++i) {
        json row = json::array();
        for (int t = 0; t < sol.dim; ++t) row.push_back(sol.vectors[static_cast<std::size_t>(i) * sol.dim + t]);
        vectors.push_back(std::move(row));
    }
    json w = json::object(), z = json::object();
    for (int i = 0; i < sol.n; ++i) w[std::to_string(i)] = sol.w[i];
    for (std::size_t e = 0; e < sol.edges.size(); ++e)
        z[std::to_string(sol.edges[e].first) + "," + std::to_string(sol.edges[e].second)] = sol.z[e];
    json j;
    j["schema"] = 1;
    j["k"] = sol.k;
    j["dim"] = sol.dim;
    j["vectors"] = std::move(vectors);
    j["w"] = std::move(w);
    j["z"] = std::move(z);
    j["objective"] = sol.objective;
    j["residuals"] = to_json(sol.residuals);
    return j;
}

inline json truth_to_json(const semirandom::PlantedInstance& inst) {
    json pcol = json::object();
    for (auto& [v, c] : inst.planted_coloring) pcol[std::to_string(v)] = c;
    json j;
    j["schema"] = 1;
    j["good"] = inst.good;
    j["bad"] = inst.bad;
    j["planted_coloring"] = std::move(pcol);
    j["p"] = inst.p;
    j["eps"] = inst.eps;
    j["k"] = inst.k;
    j["seed"] = inst.seed;
    j["adversary"] = inst.adversary.describe();
    return j;
}

struct Truth {
    std::vector<int> good, bad;
    std::map<int, int> planted_coloring;
    double p = 0, eps = 0;
    int k = 3;
    std::uint64_t seed = 0;
};

inline Truth truth_from_json(const json& j) {
    Truth t;
    t.good = j.at("good").get<std::vector<int>>();
    t.bad = j.at("bad").get<std::vector<int>>();
    for (auto& [key, val] : j.at("planted_coloring").items())
        t.planted_coloring[std::stoi(key)] = val.get<int>();
    t.p = j.at("p").get<double>();
    t.eps = j.at("eps").get<double>();
    if (j.contains("k")) t.k = j.at("k").get<int>();
    if (j.contains("seed")) t.seed = j.at("seed").get<std::uint64_t>();
    return t;
}

inline json to_json(const rounding::PipelineResult& res, int k) {
    json j;
    j["schema"] = 1;
    j["k"] = k;
    j["S"] = res.S;
    j["coloring"] = to_json(res.coloring);
    j["num_colors"] = res.num_colors;
    j["stage_stats"] = {
        {"sdp_objective", res.sdp_objective},
        {"residuals", to_json(res.sdp_residuals)},
        {"sdp_rounds", res.sdp_rounds},
        {"gamma_prime", res.gamma_prime},
        {"delta", res.delta},
        {"degree_passes", res.degree_passes},
        {"degree_colors", res.degree_colors},
        {"residual_size", res.residual_size},
        {"residual_max_degree", res.residual_max_degree},
        {"rounding_iterations", res.rounding_iterations},
        {"weak_rounding_iterations", res.weak_rounding_iterations},
        {"oddfree_colors", res.oddfree_colors},
    };
    return j;
}

inline json to_json(const semirandom::P3cResult& res) {
    json j;
    j["schema"] = 1;
    j["algorithm"] = "p3c-random";
    j["branch"] = std::string(1, res.branch);
    j["S"] = res.S;
    j["removed"] = res.removed;
    j["threshold"] = res.threshold;
    j["ell"] = res.ell;
    j["colorer_colors"] = res.colorer_colors;
    j["coloring"] = to_json(res.coloring);
    return j;
}

inline json to_json(const semirandom::P2cResult& res) {
    json j;
    j["schema"] = 1;
    j["algorithm"] = "p2c-random";
    j["result_kind"] = res.bipartite_branch ? "bipartite" : "independent-set";
    j["S"] = res.S;
    j["remainder"] = res.remainder;
    j["threshold"] = res.threshold;
    if (res.bipartite_branch) j["bipartition"] = res.bipartition_sides;
    j["cover"] = res.cover;
    return j;
}

}  // namespace pcolor::io
