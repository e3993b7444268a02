#ifndef GRAPES_MULTIDIGRAPH_HPP
#define GRAPES_MULTIDIGRAPH_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

// One directed edge of a multidigraph. Parallel arcs between the same
// ordered pair are told apart by a dense index 0..k-1.
struct Arc {
    Label src;
    Label dst;
    int index = 0;

    bool operator==(const Arc&) const = default;
    auto operator<=>(const Arc&) const = default;
};

// Canonical name of an arc when it becomes a simplicial vertex.
inline Label arc_label(const Arc& a) {
    return a.src + ">" + a.dst + "#" + std::to_string(a.index);
}

// Directed multigraph. Loops are representable; the oriented-forest
// constructor ignores them.
class Multidigraph {
public:
    Multidigraph() = default;

    void add_vertex(const Label& v) {
        if (v.empty()) throw input_error("empty vertex label");
        if (!vertices_.insert(v).second) throw input_error("duplicate vertex '" + v + "'");
    }

    // Appends one arc src->dst; repeated calls create parallel arcs with
    // increasing indices.
    Arc add_arc(const Label& src, const Label& dst) {
        if (!vertices_.count(src)) throw input_error("unknown vertex '" + src + "'");
        if (!vertices_.count(dst)) throw input_error("unknown vertex '" + dst + "'");
        int next = 0;
        for (const auto& a : arcs_)
            if (a.src == src && a.dst == dst) next = std::max(next, a.index + 1);
        Arc a{src, dst, next};
        arcs_.insert(a);
        return a;
    }

    bool has_vertex(const Label& v) const { return vertices_.count(v) != 0; }

    bool has_arc(const Label& src, const Label& dst) const {
        return std::any_of(arcs_.begin(), arcs_.end(),
                           [&](const Arc& a) { return a.src == src && a.dst == dst; });
    }

    const std::set<Label>& vertices() const { return vertices_; }
    const std::set<Arc>& arcs() const { return arcs_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }

    bool operator==(const Multidigraph& other) const {
        return vertices_ == other.vertices_ && arcs_ == other.arcs_;
    }

private:
    std::set<Label> vertices_;
    std::set<Arc> arcs_;
};

// Forgets orientation and multiplicity; loops are discarded.
inline Graph underlying_graph(const Multidigraph& m) {
    Graph g;
    for (const auto& v : m.vertices()) g.add_vertex(v);
    for (const auto& a : m.arcs())
        if (a.src != a.dst && !g.has_edge(a.src, a.dst)) g.add_edge(a.src, a.dst);
    return g;
}

// Contraction along an arc z->u: delete every arc with target u, then merge
// z into u (the merged vertex keeps label u). Arcs that become loops are
// deleted; parallel arcs created by the merge are re-indexed 0..k-1 ordered
// by their original (src, dst, index) triple.
inline Multidigraph contract_arc(const Multidigraph& m, const Label& z, const Label& u) {
    if (!m.has_arc(z, u)) throw input_error("no arc " + z + ">" + u + " to contract");

    Multidigraph out;
    for (const auto& v : m.vertices())
        if (v != z) out.add_vertex(v);

    // Survivors keep their original triples as sort keys so the new dense
    // indices are deterministic.
    std::vector<std::pair<Arc, std::pair<Label, Label>>> survivors;
    for (const auto& a : m.arcs()) {
        if (a.dst == u) continue;
        Label s = a.src == z ? u : a.src;
        Label d = a.dst == z ? u : a.dst;
        if (s == d) continue; // merge produced a loop
        survivors.push_back({a, {s, d}});
    }
    std::sort(survivors.begin(), survivors.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [orig, sd] : survivors) {
        (void)orig;
        out.add_arc(sd.first, sd.second);
    }
    return out;
}

} // namespace grapes

#endif
