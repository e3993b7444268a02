#ifndef GRAPES_TESTS_FIXTURES_HPP
#define GRAPES_TESTS_FIXTURES_HPP

#include <random>
#include <string>
#include <vector>

#include <grapes/grapes.hpp>

namespace fixtures {

using namespace grapes;

inline Label padded(const std::string& prefix, int i) {
    return prefix + (i < 10 ? "0" : "") + std::to_string(i);
}

inline Graph path(const std::vector<Label>& verts) {
    Graph g;
    for (const auto& v : verts) g.add_vertex(v);
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) g.add_edge(verts[i], verts[i + 1]);
    return g;
}

inline Graph star(const Label& center, const std::vector<Label>& tips) {
    Graph g;
    g.add_vertex(center);
    for (const auto& t : tips) {
        g.add_vertex(t);
        g.add_edge(center, t);
    }
    return g;
}

// The tree whose matching complex is a circle plus an isolated point:
// edges {a,c},{b,c},{c,d},{d,e},{d,f}.
inline Graph matching_example_tree() {
    Graph g;
    for (auto v : {"a", "b", "c", "d", "e", "f"}) g.add_vertex(v);
    g.add_edge("a", "c");
    g.add_edge("b", "c");
    g.add_edge("c", "d");
    g.add_edge("d", "e");
    g.add_edge("d", "f");
    return g;
}

// The directed tree with OF homotopic to S^2 v S^1:
// arcs a->c, b->c, c<->d, d<->e, f->e, g->e.
inline Multidigraph of_example_tree() {
    Multidigraph m;
    for (auto v : {"a", "b", "c", "d", "e", "f", "g"}) m.add_vertex(v);
    m.add_arc("a", "c");
    m.add_arc("b", "c");
    m.add_arc("c", "d");
    m.add_arc("d", "c");
    m.add_arc("d", "e");
    m.add_arc("e", "d");
    m.add_arc("f", "e");
    m.add_arc("g", "e");
    return m;
}

// The five-interval family whose order complex is a circle plus a point.
inline IntervalSet interval_example() {
    IntervalSet x;
    x.add("i02", Rational(0, 1), Rational(2, 1));
    x.add("i06", Rational(0, 1), Rational(6, 1));
    x.add("i13", Rational(1, 1), Rational(3, 1));
    x.add("i47", Rational(4, 1), Rational(7, 1));
    x.add("i58", Rational(5, 1), Rational(8, 1));
    return x;
}

// Random forest on n vertices: each new vertex attaches to an earlier one
// with probability `attach`, otherwise starts a new component.
inline Graph random_forest(std::mt19937& rng, int n, double attach = 0.85) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(padded("v", i));
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 1; i < n; ++i)
        if (coin(rng) < attach) {
            std::uniform_int_distribution<int> pick(0, i - 1);
            g.add_edge(padded("v", i), padded("v", pick(rng)));
        }
    return g;
}

// Random multidiforest with at most max_arcs arcs; parallel arcs and
// two-cycles both occur.
inline Multidigraph random_multidiforest(std::mt19937& rng, int max_arcs) {
    std::uniform_int_distribution<int> nverts(1, 6);
    int n = nverts(rng);
    Graph skeleton = random_forest(rng, n, 0.9);
    Multidigraph m;
    for (const auto& v : skeleton.vertices()) m.add_vertex(v);
    std::uniform_int_distribution<int> style(0, 4);
    int arcs = 0;
    for (const auto& [u, v] : skeleton.edges()) {
        if (arcs >= max_arcs) break;
        switch (style(rng)) {
            case 0: m.add_arc(u, v); arcs += 1; break;
            case 1: m.add_arc(v, u); arcs += 1; break;
            case 2:
                m.add_arc(u, v);
                if (arcs + 1 < max_arcs) { m.add_arc(v, u); ++arcs; }
                arcs += 1;
                break;
            case 3:
                m.add_arc(u, v);
                if (arcs + 1 < max_arcs) { m.add_arc(u, v); ++arcs; } // parallel pair
                arcs += 1;
                break;
            default:
                m.add_arc(v, u);
                if (arcs + 1 < max_arcs) { m.add_arc(v, u); ++arcs; }
                arcs += 1;
                break;
        }
    }
    return m;
}

// Random family of closed intervals with exact rational endpoints.
inline IntervalSet random_intervals(std::mt19937& rng, int max_count) {
    std::uniform_int_distribution<int> count(0, max_count);
    std::uniform_int_distribution<int> num(0, 24);
    std::uniform_int_distribution<int> len(0, 12);
    std::uniform_int_distribution<int> den_pick(0, 2);
    const int dens[3] = {1, 2, 4};
    IntervalSet x;
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        int d = dens[den_pick(rng)];
        Rational lo(num(rng), d);
        Rational hi(num(rng) + len(rng), d);
        if (hi < lo) std::swap(lo, hi);
        x.add(padded("i", i), lo, hi);
    }
    return x;
}

} // namespace fixtures

#endif
