#pragma once

// PartialColoring: a color assignment on part of the vertex set plus the
// discarded remainder S. Properness is a checked property, not an invariant.

#include <map>
#include <set>
#include <vector>

#include "pcolor/errors.hpp"
#include "pcolor/graph.hpp"

namespace pcolor {

struct PartialColoring {
    std::map<int, int> colors;  // vertex -> color id (non-negative)
    std::set<int> discarded;    // S
    int num_colors = 0;         // distinct color ids used

    void recount() {
        std::set<int> used;
        for (auto& [v, c] : colors) used.insert(c);
        num_colors = static_cast<int>(used.size());
    }

    // Full coloring on `ids` from a dense per-vertex array, colors offset.
    static PartialColoring from_dense(const std::vector<int>& ids, const std::vector<int>& dense,
                                      int offset = 0) {
        PartialColoring pc;
        for (std::size_t i = 0; i < ids.size(); ++i) pc.colors[ids[i]] = dense[i] + offset;
        pc.recount();
        return pc;
    }
};

// True iff no edge of g has both endpoints colored the same; edges touching
// discarded vertices are ignored. The colors/discarded domains must
// partition V(g).
inline bool is_proper(const Graph& g, const PartialColoring& pc) {
    for (auto& [v, c] : pc.colors) {
        if (v < 0 || v >= g.n()) throw ContractViolation("is_proper: colored vertex outside V");
        if (c < 0) throw ContractViolation("is_proper: negative color id");
        if (pc.discarded.count(v)) throw ContractViolation("is_proper: vertex both colored and discarded");
    }
    for (int v : pc.discarded)
        if (v < 0 || v >= g.n()) throw ContractViolation("is_proper: discarded vertex outside V");
    if (pc.colors.size() + pc.discarded.size() != static_cast<std::size_t>(g.n()))
        throw ContractViolation("is_proper: colors and discarded do not partition V");
    for (auto& [u, cu] : pc.colors) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            auto it = pc.colors.find(v);
            if (it != pc.colors.end() && it->second == cu) return false;
        }
    }
    return true;
}

}  // namespace pcolor
