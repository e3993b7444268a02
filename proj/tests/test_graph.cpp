#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace grapes;

TEST_CASE("closed neighborhood") {
    Graph p3 = fixtures::path({"a", "b", "c"});
    CHECK(closed_neighborhood(p3, std::set<Label>{"b"}) == std::set<Label>{"a", "b", "c"});
    CHECK(closed_neighborhood(p3, std::set<Label>{}) == std::set<Label>{});

    Graph tree = fixtures::matching_example_tree();
    CHECK(closed_neighborhood(tree, std::set<Label>{"c"}) == std::set<Label>{"a", "b", "c", "d"});

    CHECK_THROWS_AS(closed_neighborhood(p3, std::set<Label>{"zz"}), input_error);
}

TEST_CASE("closed neighborhood is monotone") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph f = fixtures::random_forest(rng, 1 + trial % 10);
        std::vector<Label> verts(f.vertices().begin(), f.vertices().end());
        std::set<Label> s, t;
        for (std::size_t i = 0; i < verts.size(); ++i) {
            if (i % 3 == 0) s.insert(verts[i]);
            if (i % 3 != 2) t.insert(verts[i]); // s ⊆ t
        }
        auto ns = closed_neighborhood(f, s);
        auto nt = closed_neighborhood(f, t);
        CHECK(std::includes(nt.begin(), nt.end(), ns.begin(), ns.end()));
        CHECK(std::includes(ns.begin(), ns.end(), s.begin(), s.end()));
    }
}

TEST_CASE("is_forest") {
    CHECK(is_forest(fixtures::path({"a", "b", "c"})));
    Graph tri = fixtures::path({"a", "b", "c"});
    tri.add_edge("a", "c");
    CHECK(!is_forest(tri));
    CHECK(is_forest(fixtures::matching_example_tree()));
}

TEST_CASE("leaves") {
    CHECK(leaves(fixtures::path({"a", "b", "c"})) == std::set<Label>{"a", "c"});
    Graph single;
    single.add_vertex("a");
    CHECK(leaves(single).empty());
    CHECK(leaves(fixtures::matching_example_tree()) == std::set<Label>{"a", "b", "e", "f"});
}

TEST_CASE("invariants oracle on small graphs") {
    Graph edge = fixtures::path({"a", "b"});
    CHECK(graph_invariants(edge) == GraphInvariants{1, 1, 1, 1, 1});

    Graph p4 = fixtures::path({"a", "b", "c", "d"});
    CHECK(graph_invariants(p4) == GraphInvariants{2, 2, 2, 2, 1});

    auto inv = graph_invariants(fixtures::matching_example_tree());
    CHECK(inv.alpha0 == 2);
    CHECK(inv.beta1 == 2);
}

TEST_CASE("invariants oracle rejects big graphs") {
    Graph g;
    for (int i = 0; i < 21; ++i) g.add_vertex(fixtures::padded("v", i));
    CHECK_THROWS_AS(graph_invariants(g), resource_error);
}

TEST_CASE("forest fast paths agree with the oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        Graph f = fixtures::random_forest(rng, 1 + trial % 14);
        auto inv = graph_invariants(f);
        CHECK(forest_alpha0(f) == inv.alpha0);
        CHECK(forest_beta1(f) == inv.beta1);
        CHECK(forest_gamma(f) == inv.gamma);
        // Koenig on a bipartite graph
        CHECK(inv.alpha0 == inv.beta1);
        // kappa = |V| - |E| on forests
        CHECK(inv.kappa == static_cast<int>(f.vertex_count() - f.edge_count()));
    }
}

TEST_CASE("forest fast paths reject cycles") {
    Graph tri = fixtures::path({"a", "b", "c"});
    tri.add_edge("a", "c");
    CHECK_THROWS_AS(forest_alpha0(tri), input_error);
    CHECK_THROWS_AS(forest_beta1(tri), input_error);
    CHECK_THROWS_AS(forest_gamma(tri), input_error);
}

TEST_CASE("line dual") {
    Graph p3 = fixtures::path({"a", "b", "c"});
    Graph d = line_dual(p3);
    CHECK(d.vertices() == std::set<Label>{"{a,b}", "{b,c}"});
    CHECK(d.has_edge("{a,b}", "{b,c}"));
    CHECK(d.edge_count() == 1);

    Graph single = fixtures::path({"a", "b"});
    Graph ds = line_dual(single);
    CHECK(ds.vertex_count() == 1);
    CHECK(ds.edge_count() == 0);

    Graph tree = fixtures::matching_example_tree();
    Graph dt = line_dual(tree);
    CHECK(dt.vertex_count() == 5);
    // two triangles sharing {c,d}
    CHECK(dt.edge_count() == 6);
    for (auto [x, y] : {std::pair{"{a,c}", "{b,c}"}, {"{a,c}", "{c,d}"}, {"{b,c}", "{c,d}"},
                        {"{c,d}", "{d,e}"}, {"{c,d}", "{d,f}"}, {"{d,e}", "{d,f}"}})
        CHECK(dt.has_edge(x, y));
}

TEST_CASE("underlying graph of a multidigraph") {
    Multidigraph m;
    m.add_vertex("c");
    m.add_vertex("d");
    m.add_arc("c", "d");
    m.add_arc("d", "c");
    Graph u = underlying_graph(m);
    CHECK(u.edges() == std::set<VertexPair>{{"c", "d"}});

    Graph of_u = underlying_graph(fixtures::of_example_tree());
    CHECK(of_u.vertex_count() == 7);
    CHECK(of_u.edge_count() == 6);
    CHECK(is_forest(of_u));

    Multidigraph loop;
    loop.add_vertex("u");
    loop.add_arc("u", "u");
    Graph ul = underlying_graph(loop);
    CHECK(ul.vertex_count() == 1);
    CHECK(ul.edge_count() == 0);
}

TEST_CASE("contract_arc") {
    // the z->u, z->x, u->x triangle contracts to two parallel arcs u->x
    Multidigraph g;
    for (auto v : {"u", "x", "z"}) g.add_vertex(v);
    g.add_arc("z", "u");
    g.add_arc("z", "x");
    g.add_arc("u", "x");
    Multidigraph c = contract_arc(g, "z", "u");
    CHECK(c.vertices() == std::set<Label>{"u", "x"});
    CHECK(c.arcs() == std::set<Arc>{{"u", "x", 0}, {"u", "x", 1}});

    // single arc z->u collapses to one vertex
    Multidigraph single;
    single.add_vertex("z");
    single.add_vertex("u");
    single.add_arc("z", "u");
    Multidigraph cs = contract_arc(single, "z", "u");
    CHECK(cs.vertices() == std::set<Label>{"u"});
    CHECK(cs.arcs().empty());

    // a two-cycle becomes a loop, which is dropped
    Multidigraph two;
    two.add_vertex("z");
    two.add_vertex("u");
    two.add_arc("z", "u");
    two.add_arc("u", "z");
    Multidigraph ct = contract_arc(two, "z", "u");
    CHECK(ct.vertices() == std::set<Label>{"u"});
    CHECK(ct.arcs().empty());

    CHECK_THROWS_AS(contract_arc(two, "u", "x"), input_error);
}

TEST_CASE("contract_arc structural properties") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        Multidigraph m = fixtures::random_multidiforest(rng, 8);
        std::vector<Arc> arcs(m.arcs().begin(), m.arcs().end());
        for (const auto& a : arcs) {
            Multidigraph c = contract_arc(m, a.src, a.dst);
            CHECK(c.vertex_count() == m.vertex_count() - 1);
            std::map<std::pair<Label, Label>, std::vector<int>> groups;
            for (const auto& b : c.arcs()) {
                CHECK(b.src != b.dst); // never a loop
                groups[{b.src, b.dst}].push_back(b.index);
            }
            for (auto& [_, idx] : groups) {
                std::sort(idx.begin(), idx.end());
                for (std::size_t i = 0; i < idx.size(); ++i)
                    CHECK(idx[i] == static_cast<int>(i)); // dense indices
            }
        }
    }
}

TEST_CASE("interval overlap graph") {
    IntervalSet x = fixtures::interval_example();
    Graph g = interval_overlap_graph(x);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 6);
    for (auto [a, b] : {std::pair{"i02", "i06"}, {"i02", "i13"}, {"i06", "i13"},
                        {"i06", "i47"}, {"i06", "i58"}, {"i47", "i58"}})
        CHECK(g.has_edge(a, b));

    IntervalSet disjoint;
    disjoint.add("a", Rational(0, 1), Rational(1, 1));
    disjoint.add("b", Rational(2, 1), Rational(3, 1));
    CHECK(interval_overlap_graph(disjoint).edge_count() == 0);

    // closed intervals touching at one point do intersect
    IntervalSet touch;
    touch.add("a", Rational(0, 1), Rational(1, 1));
    touch.add("b", Rational(1, 1), Rational(2, 1));
    CHECK(interval_overlap_graph(touch).has_edge("a", "b"));
}

TEST_CASE("interval overlap graph ignores insertion order") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        IntervalSet x = fixtures::random_intervals(rng, 8);
        IntervalSet reversed;
        auto ivs = x.intervals();
        for (auto it = ivs.rbegin(); it != ivs.rend(); ++it)
            reversed.add(it->name, it->lo, it->hi);
        CHECK(interval_overlap_graph(x) == interval_overlap_graph(reversed));
    }
}

TEST_CASE("rational parsing is exact") {
    CHECK(Rational::parse("0.5") == Rational(1, 2));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse("4") == Rational(4, 1));
    CHECK(Rational::parse("0.1") < Rational::parse("0.3"));
    CHECK_THROWS_AS(Rational::parse("1.2.3"), input_error);
    CHECK_THROWS_AS(Rational::parse(""), input_error);
    CHECK_THROWS_AS(Rational::parse("x"), input_error);
}

TEST_CASE("graph construction rejects bad input") {
    Graph g;
    g.add_vertex("a");
    CHECK_THROWS_AS(g.add_vertex("a"), input_error);
    CHECK_THROWS_AS(g.add_edge("a", "a"), input_error);
    CHECK_THROWS_AS(g.add_edge("a", "zz"), input_error);
    g.add_vertex("b");
    g.add_edge("a", "b");
    CHECK_THROWS_AS(g.add_edge("b", "a"), input_error);
}
