#ifndef GRAPES_REDUCTIONS_HPP
#define GRAPES_REDUCTIONS_HPP

#include <optional>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

// One homotopy-preserving vertex removal: `removed` was at distance two
// from `leaf`.
struct ScremoStep {
    Label leaf;
    Label removed;

    bool operator==(const ScremoStep&) const = default;
};

struct ScremoResult {
    Graph reduced;
    std::vector<ScremoStep> steps;
};

// Repeatedly removes a non-leaf vertex at distance exactly two from a
// leaf, scanning (leaf, vertex) pairs in lexicographic order. Terminates
// when every component is an isolated vertex, an edge, or a star.
inline ScremoResult reduce_scremo(const Graph& forest) {
    if (!is_forest(forest)) throw input_error("reduce_scremo requires a forest");
    ScremoResult res{forest, {}};
    for (;;) {
        std::optional<ScremoStep> step;
        for (const auto& b : res.reduced.vertices()) {
            if (!res.reduced.is_leaf(b)) continue;
            const Label& mid = *res.reduced.neighbors(b).begin();
            for (const auto& a : res.reduced.neighbors(mid)) {
                if (a == b || res.reduced.is_leaf(a)) continue;
                step = ScremoStep{b, a}; // least (leaf, vertex) pair wins
                break;
            }
            if (step) break;
        }
        if (!step) return res;
        res.reduced = res.reduced.without_vertex(step->removed);
        res.steps.push_back(*step);
    }
}

// One collapse step for the dominance complex: b is a leaf whose only
// neighbor is hub, other is another neighbor of hub; the edge {hub, other}
// is deleted.
struct DoscremoStep {
    Label hub;   // a
    Label leaf;  // b
    Label other; // c

    bool operator==(const DoscremoStep&) const = default;
};

struct DoscremoResult {
    Graph reduced;   // only isolated vertices and edges
    int edge_count;  // r
    std::vector<DoscremoStep> steps;
};

// Repeatedly picks the least triple (a, b, c) with b a leaf attached to a
// and c another neighbor of a, deleting edge {a, c}. With reverse_ties the
// greatest triple is picked instead; the edge count of the result must not
// depend on that choice.
inline DoscremoResult reduce_doscremo(const Graph& forest, bool reverse_ties = false) {
    if (!is_forest(forest)) throw input_error("reduce_doscremo requires a forest");
    DoscremoResult res{forest, 0, {}};
    for (;;) {
        std::optional<DoscremoStep> pick;
        auto better = [&](const DoscremoStep& s, const DoscremoStep& t) {
            auto key = [](const DoscremoStep& x) { return std::tie(x.hub, x.leaf, x.other); };
            return reverse_ties ? key(s) > key(t) : key(s) < key(t);
        };
        for (const auto& a : res.reduced.vertices()) {
            if (res.reduced.degree(a) < 2) continue;
            for (const auto& b : res.reduced.neighbors(a)) {
                if (!res.reduced.is_leaf(b)) continue;
                for (const auto& c : res.reduced.neighbors(a)) {
                    if (c == b) continue;
                    DoscremoStep s{a, b, c};
                    if (!pick || better(s, *pick)) pick = s;
                }
            }
        }
        if (!pick) break;
        res.reduced = res.reduced.without_edge(pick->hub, pick->other);
        res.steps.push_back(*pick);
    }
    res.edge_count = static_cast<int>(res.reduced.edge_count());
    return res;
}

} // namespace grapes

#endif
