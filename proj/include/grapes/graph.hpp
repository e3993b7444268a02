#ifndef GRAPES_GRAPH_HPP
#define GRAPES_GRAPH_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace grapes {

// Vertex labels are plain strings ordered lexicographically; every
// "choose a vertex" step in the library breaks ties by this order.
using Label = std::string;

// Labels accepted by the file parsers. Labels generated internally for
// edge- and arc-ground complexes ("{u,v}", "u>v#0") use a wider alphabet.
inline bool valid_label(const Label& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

using VertexPair = std::pair<Label, Label>;

inline VertexPair ordered_pair(const Label& u, const Label& v) {
    return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

// Canonical name of an undirected edge when it becomes a simplicial vertex.
inline Label edge_label(const Label& u, const Label& v) {
    auto [a, b] = ordered_pair(u, v);
    return "{" + a + "," + b + "}";
}

// Finite simple undirected graph: no loops, no parallel edges.
class Graph {
public:
    Graph() = default;

    void add_vertex(const Label& v) {
        if (v.empty()) throw input_error("empty vertex label");
        if (!vertices_.insert(v).second) throw input_error("duplicate vertex '" + v + "'");
    }

    void add_edge(const Label& u, const Label& v) {
        if (u == v) throw input_error("loop edge at '" + u + "'");
        if (!has_vertex(u)) throw input_error("unknown vertex '" + u + "'");
        if (!has_vertex(v)) throw input_error("unknown vertex '" + v + "'");
        if (!edges_.insert(ordered_pair(u, v)).second)
            throw input_error("duplicate edge {" + u + "," + v + "}");
        adj_[u].insert(v);
        adj_[v].insert(u);
    }

    bool has_vertex(const Label& v) const { return vertices_.count(v) != 0; }
    bool has_edge(const Label& u, const Label& v) const { return edges_.count(ordered_pair(u, v)) != 0; }

    const std::set<Label>& vertices() const { return vertices_; }
    const std::set<VertexPair>& edges() const { return edges_; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::set<Label>& neighbors(const Label& v) const {
        if (!has_vertex(v)) throw input_error("unknown vertex '" + v + "'");
        static const std::set<Label> none;
        auto it = adj_.find(v);
        return it == adj_.end() ? none : it->second;
    }

    std::size_t degree(const Label& v) const { return neighbors(v).size(); }
    bool is_leaf(const Label& v) const { return degree(v) == 1; }
    bool is_isolated(const Label& v) const { return degree(v) == 0; }

    Graph without_vertex(const Label& v) const {
        if (!has_vertex(v)) throw input_error("unknown vertex '" + v + "'");
        Graph g;
        for (const auto& w : vertices_)
            if (w != v) g.add_vertex(w);
        for (const auto& [a, b] : edges_)
            if (a != v && b != v) g.add_edge(a, b);
        return g;
    }

    Graph without_vertices(const std::set<Label>& drop) const {
        Graph g;
        for (const auto& w : vertices_)
            if (!drop.count(w)) g.add_vertex(w);
        for (const auto& [a, b] : edges_)
            if (!drop.count(a) && !drop.count(b)) g.add_edge(a, b);
        return g;
    }

    Graph without_edge(const Label& u, const Label& v) const {
        if (!has_edge(u, v)) throw input_error("unknown edge {" + u + "," + v + "}");
        Graph g;
        for (const auto& w : vertices_) g.add_vertex(w);
        auto dropped = ordered_pair(u, v);
        for (const auto& e : edges_)
            if (e != dropped) g.add_edge(e.first, e.second);
        return g;
    }

    bool operator==(const Graph& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    std::set<Label> vertices_;
    std::set<VertexPair> edges_;
    std::map<Label, std::set<Label>> adj_;
};

// N[S]: S together with every vertex adjacent to a member of S.
inline std::set<Label> closed_neighborhood(const Graph& g, const std::set<Label>& s) {
    std::set<Label> out;
    for (const auto& v : s) {
        if (!g.has_vertex(v)) throw input_error("unknown vertex '" + v + "'");
        out.insert(v);
        const auto& nb = g.neighbors(v);
        out.insert(nb.begin(), nb.end());
    }
    return out;
}

inline std::set<Label> closed_neighborhood(const Graph& g, const Label& v) {
    return closed_neighborhood(g, std::set<Label>{v});
}

inline std::size_t connected_component_count(const Graph& g) {
    std::set<Label> seen;
    std::size_t components = 0;
    for (const auto& root : g.vertices()) {
        if (seen.count(root)) continue;
        ++components;
        std::vector<Label> stack{root};
        seen.insert(root);
        while (!stack.empty()) {
            Label v = stack.back();
            stack.pop_back();
            for (const auto& w : g.neighbors(v))
                if (seen.insert(w).second) stack.push_back(w);
        }
    }
    return components;
}

inline bool is_forest(const Graph& g) {
    // A graph is acyclic iff |E| = |V| - #components.
    return g.edge_count() + connected_component_count(g) == g.vertex_count();
}

// Vertices belonging to exactly one edge. Isolated vertices are not leaves.
inline std::set<Label> leaves(const Graph& g) {
    std::set<Label> out;
    for (const auto& v : g.vertices())
        if (g.is_leaf(v)) out.insert(v);
    return out;
}

// Graph on the edges of g; two edges are adjacent iff they share an endpoint.
inline Graph line_dual(const Graph& g) {
    Graph d;
    std::vector<VertexPair> es(g.edges().begin(), g.edges().end());
    for (const auto& [u, v] : es) d.add_vertex(edge_label(u, v));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto& a = es[i];
            const auto& b = es[j];
            bool meet = a.first == b.first || a.first == b.second ||
                        a.second == b.first || a.second == b.second;
            if (meet) d.add_edge(edge_label(a.first, a.second), edge_label(b.first, b.second));
        }
    return d;
}

} // namespace grapes

#endif
