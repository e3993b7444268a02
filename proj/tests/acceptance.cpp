// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"

using namespace grapes;
using Clock = std::chrono::steady_clock;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream why;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            why << what;
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Graph> random_forests(int count) {
    std::mt19937 rng(20250801);
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) out.push_back(fixtures::random_forest(rng, 1 + i % 12));
    return out;
}

bool has_isolated_vertex(const Graph& g) {
    for (const auto& v : g.vertices())
        if (g.is_isolated(v)) return true;
    return false;
}

// ---- criteria -------------------------------------------------------

void criterion_1(Check& c) {
    auto start = Clock::now();
    auto inst = make_instance(ComplexKind::OrientedForest, fixtures::of_example_tree());
    auto res = homotopy_type(inst.complex, inst.family);
    c.expect(res.certified(), "OF(F) not certified");
    if (res.certified()) {
        c.expect(res.type->str() == "S^2 v S^1", "OF(F) gave " + res.type->str());
        c.expect(verify(inst.complex, *res.type), "OF(F) failed homology verification");
    }

    Multidigraph f2;
    for (auto v : {"d", "e", "f", "g"}) f2.add_vertex(v);
    f2.add_arc("d", "e");
    f2.add_arc("e", "d");
    f2.add_arc("f", "e");
    f2.add_arc("g", "e");
    auto of2 = oriented_forest_complex(f2);
    c.expect(of2.facets() == std::vector<Face>{Face{"d>e#0"},
                                               Face{"e>d#0", "f>e#0"},
                                               Face{"e>d#0", "g>e#0"}},
             "OF(F2) facets differ from the expected list");
    auto r2 = homotopy_type(of2, Strategy::Family(ComplexKind::OrientedForest,
                                                  ArcContext::from(f2)));
    c.expect(r2.certified() && *r2.type == HomotopyType::sphere(0), "OF(F2) is not S^0");
    c.expect(verify(of2, HomotopyType::sphere(0)), "OF(F2) failed verification");

    Multidigraph f3;
    for (auto v : {"c", "d", "e", "f", "g"}) f3.add_vertex(v);
    f3.add_arc("c", "d");
    f3.add_arc("d", "e");
    f3.add_arc("e", "d");
    f3.add_arc("f", "e");
    f3.add_arc("g", "e");
    auto of3 = oriented_forest_complex(f3);
    c.expect(of3.facets() == std::vector<Face>{Face{"c>d#0", "d>e#0"},
                                               Face{"c>d#0", "f>e#0"},
                                               Face{"c>d#0", "g>e#0"},
                                               Face{"e>d#0", "f>e#0"},
                                               Face{"e>d#0", "g>e#0"}},
             "OF(F3) facets differ from the expected list");
    auto r3 = homotopy_type(of3, Strategy::Family(ComplexKind::OrientedForest,
                                                  ArcContext::from(f3)));
    c.expect(r3.certified() && *r3.type == HomotopyType::sphere(1), "OF(F3) is not S^1");
    c.expect(verify(of3, HomotopyType::sphere(1)), "OF(F3) failed verification");

    c.expect(seconds_since(start) < 1.0, "criterion 1 exceeded 1s");
}

void criterion_2(Check& c) {
    auto start = Clock::now();
    auto inst = make_instance(ComplexKind::Matching, fixtures::matching_example_tree());
    auto res = homotopy_type(inst.complex, inst.family);
    c.expect(res.certified() && res.type->str() == "S^1 v S^0",
             "M(F) is not S^1 v S^0");
    c.expect(inst.complex.facets() == std::vector<Face>{Face{"{a,c}", "{d,e}"},
                                                        Face{"{a,c}", "{d,f}"},
                                                        Face{"{b,c}", "{d,e}"},
                                                        Face{"{b,c}", "{d,f}"},
                                                        Face{"{c,d}"}},
             "M(F) facets differ from the expected list");
    c.expect(verify(inst.complex, *res.type), "M(F) failed verification");
    c.expect(seconds_since(start) < 1.0, "criterion 2 exceeded 1s");
}

void criterion_3(Check& c) {
    auto start = Clock::now();
    auto inst = make_instance(ComplexKind::IntervalOrder, fixtures::interval_example());
    auto res = homotopy_type(inst.complex, inst.family);
    c.expect(res.certified() && res.type->str() == "S^1 v S^0",
             "O(X) is not S^1 v S^0");
    c.expect(verify(inst.complex, *res.type), "O(X) failed verification");
    c.expect(seconds_since(start) < 1.0, "criterion 3 exceeded 1s");
}

const std::vector<ComplexKind> kGraphKinds = {
    ComplexKind::Independence, ComplexKind::Dominance, ComplexKind::Matching,
    ComplexKind::EdgeCover, ComplexKind::EdgeDominance};

void criterion_4(Check& c) {
    auto start = Clock::now();
    auto forests = random_forests(200);
    for (std::size_t i = 0; i < forests.size() && c.ok; ++i) {
        for (auto kind : kGraphKinds) {
            auto inst = make_instance(kind, forests[i]);
            auto fam = homotopy_type(inst.complex, inst.family);
            auto exh = homotopy_type(inst.complex, Strategy::Exhaustive());
            c.expect(fam.certified(), "family strategy failed on forest " + std::to_string(i) +
                                          " kind " + kind_to_string(kind));
            c.expect(exh.certified(), "exhaustive strategy failed on forest " +
                                          std::to_string(i) + " kind " + kind_to_string(kind));
            if (!fam.certified() || !exh.certified()) return;
            c.expect(*fam.type == *exh.type,
                     "strategies disagree on forest " + std::to_string(i) + " kind " +
                         kind_to_string(kind));
            c.expect(verify(inst.complex, *fam.type),
                     "verification failed on forest " + std::to_string(i) + " kind " +
                         kind_to_string(kind));
        }
    }
    c.expect(seconds_since(start) < 30.0, "criterion 4 exceeded 30s");
}

void criterion_5(Check& c) {
    auto forests = random_forests(200);
    for (std::size_t i = 0; i < forests.size() && c.ok; ++i) {
        const Graph& f = forests[i];
        auto inv = graph_invariants(f);
        long long edges = static_cast<long long>(f.edge_count());
        long long verts = static_cast<long long>(f.vertex_count());
        std::string tag = " on forest " + std::to_string(i);

        auto ind = homotopy_type(make_instance(ComplexKind::Independence, f).complex,
                                 Strategy::Family(ComplexKind::Independence, f));
        if (!ind.type->is_contractible()) {
            c.expect(ind.type->sphere_dims().size() == 1, "Ind is a multi-sphere wedge" + tag);
            c.expect(inv.i_dom == inv.gamma, "i != gamma with Ind non-contractible" + tag);
            c.expect(ind.type->sphere_dims()[0] == inv.i_dom - 1, "Ind dimension formula" + tag);
        }

        auto dom = homotopy_type(make_instance(ComplexKind::Dominance, f).complex,
                                 Strategy::Family(ComplexKind::Dominance, f));
        c.expect(!dom.type->is_contractible() && dom.type->sphere_dims().size() == 1,
                 "Dom is not a single sphere" + tag);
        c.expect(inv.alpha0 == inv.beta1, "alpha0 != beta1" + tag);
        c.expect(dom.type->sphere_dims()[0] == inv.alpha0 - 1, "Dom dimension formula" + tag);

        if (!has_isolated_vertex(f)) {
            auto ec = homotopy_type(make_instance(ComplexKind::EdgeCover, f).complex,
                                    Strategy::Family(ComplexKind::EdgeCover, f));
            c.expect(ec.type->is_contractible() == ind.type->is_contractible(),
                     "EC and Ind disagree about contractibility" + tag);
            if (!ec.type->is_contractible()) {
                c.expect(ec.type->sphere_dims().size() == 1, "EC is a multi-sphere wedge" + tag);
                c.expect(ec.type->sphere_dims()[0] == edges - verts + inv.i_dom - 1,
                         "EC dimension formula" + tag);
            }
        }

        auto ed = homotopy_type(make_instance(ComplexKind::EdgeDominance, f).complex,
                                Strategy::Family(ComplexKind::EdgeDominance, f));
        c.expect(!ed.type->is_contractible() && ed.type->sphere_dims().size() == 1,
                 "ED is not a single sphere" + tag);
        c.expect(ed.type->sphere_dims()[0] == edges - inv.alpha0 - 1, "ED dimension formula" + tag);
    }
}

void criterion_6(Check& c) {
    auto forests = random_forests(200);
    for (std::size_t i = 0; i < forests.size() && c.ok; ++i) {
        const Graph& f = forests[i];
        std::string tag = " on forest " + std::to_string(i);
        auto inv = graph_invariants(f);
        auto res = reduce_doscremo(f);
        c.expect(res.edge_count == inv.alpha0 && res.edge_count == inv.beta1,
                 "r != alpha0 = beta1" + tag);

        auto rev = reduce_doscremo(f, /*reverse_ties=*/true);
        c.expect(rev.edge_count == res.edge_count, "r depends on tie-breaking" + tag);

        // Dom(F') is exactly a cross-polytope boundary on the edges of F'
        std::vector<Label> pairing;
        for (const auto& [u, v] : res.reduced.edges()) {
            pairing.push_back(u);
            pairing.push_back(v);
        }
        auto cross = cross_polytope_boundary(res.edge_count, pairing);
        c.expect(dominance_complex(res.reduced).facets() == cross.facets(),
                 "Dom(F') is not the cross-polytope boundary" + tag);

        auto profile = reduced_homology(dominance_complex(f));
        std::map<int, long long> expected{{res.edge_count - 1, 1}};
        c.expect(profile.reduced_betti == expected && !profile.torsion_present(),
                 "Dom(F) homology is not a single sphere of dimension r-1" + tag);
    }
}

void criterion_7(Check& c) {
    auto forests = random_forests(200);
    for (std::size_t i = 0; i < forests.size() && c.ok; ++i) {
        const Graph& f = forests[i];
        auto inv = graph_invariants(f);
        std::string tag = " on forest " + std::to_string(i);
        c.expect(inv.alpha0 == inv.beta1, "alpha0 != beta1" + tag);
        c.expect(forest_alpha0(f) == inv.alpha0, "forest alpha0 disagrees with the oracle" + tag);
        c.expect(forest_beta1(f) == inv.beta1, "forest beta1 disagrees with the oracle" + tag);
    }
}

void criterion_8(Check& c) {
    std::mt19937 rng(20250802);
    int parallels_seen = 0;
    for (int i = 0; i < 100 && c.ok; ++i) {
        Multidigraph m = fixtures::random_multidiforest(rng, 8);
        std::string tag = " on multidiforest " + std::to_string(i);
        auto inst = make_instance(ComplexKind::OrientedForest, m);
        auto fam = homotopy_type(inst.complex, inst.family);
        c.expect(fam.certified(), "OF not certified" + tag);
        if (!fam.certified()) return;
        c.expect(verify(inst.complex, *fam.type), "OF verification failed" + tag);

        std::map<std::pair<Label, Label>, std::vector<Arc>> groups;
        for (const auto& a : m.arcs())
            if (a.src != a.dst) groups[{a.src, a.dst}].push_back(a);
        for (const auto& [_, group] : groups)
            for (std::size_t s = 0; s < group.size(); ++s)
                for (std::size_t t = 0; t < group.size(); ++t) {
                    if (s == t) continue;
                    ++parallels_seen;
                    c.expect(dominates(inst.complex, arc_label(group[s]), arc_label(group[t])),
                             "parallel arcs do not dominate mutually" + tag);
                }
    }
    c.expect(parallels_seen > 0, "no parallel arcs were generated");
}

void criterion_9(Check& c) {
    std::mt19937 rng(20250803);
    for (int i = 0; i < 100 && c.ok; ++i) {
        IntervalSet x = fixtures::random_intervals(rng, 8);
        std::string tag = " on interval set " + std::to_string(i);
        auto inst = make_instance(ComplexKind::IntervalOrder, x);
        auto res = homotopy_type(inst.complex, inst.family);
        c.expect(res.certified(), "O(X) not certified" + tag);
        if (!res.certified()) return;
        c.expect(verify(inst.complex, *res.type), "O(X) verification failed" + tag);
        c.expect(inst.complex.facets() ==
                     independence_complex(interval_overlap_graph(x)).facets(),
                 "O(X) != Ind of the overlap graph" + tag);
    }
}

void criterion_10(Check& c) {
    auto void_res = homotopy_type(SimplicialComplex::void_complex({}), Strategy::Exhaustive());
    c.expect(void_res.certified() && void_res.type->is_contractible(),
             "the empty complex is not contractible");

    auto s_res = homotopy_type(SimplicialComplex::sphere_minus_one(), Strategy::Exhaustive());
    c.expect(s_res.certified() && s_res.type->str() == "S^-1", "{∅} does not print as S^-1");

    // EC of a graph with an isolated vertex: the empty complex
    Graph iso;
    for (auto v : {"a", "b", "c"}) iso.add_vertex(v);
    iso.add_edge("b", "c");
    auto ec = make_instance(ComplexKind::EdgeCover, iso);
    c.expect(ec.complex.is_void(), "EC with an isolated vertex is not the empty complex");
    auto ec_res = homotopy_type(ec.complex, ec.family);
    c.expect(ec_res.certified() && ec_res.type->is_contractible(),
             "EC with an isolated vertex is not contractible");

    // ED of a disjoint union of edges and isolated vertices: {∅}
    Graph un;
    for (auto v : {"a", "b", "c", "d", "e"}) un.add_vertex(v);
    un.add_edge("a", "b");
    un.add_edge("c", "d");
    auto ed = make_instance(ComplexKind::EdgeDominance, un);
    c.expect(ed.complex.is_sphere_minus_one(), "ED of edges+vertices is not {∅}");
    auto ed_res = homotopy_type(ed.complex, ed.family);
    c.expect(ed_res.certified() && ed_res.type->str() == "S^-1",
             "ED of edges+vertices does not report S^-1");
}

} // namespace

int main() {
    struct Entry {
        int id;
        std::string name;
        std::function<void(Check&)> run;
    };
    std::vector<Entry> criteria = {
        {1, "oriented-forest example: S^2 v S^1 with its two subcomplexes", criterion_1},
        {2, "matching-complex example: S^1 v S^0 with the expected facets", criterion_2},
        {3, "interval-order example: S^1 v S^0", criterion_3},
        {4, "random forests: both strategies certify, agree and verify", criterion_4},
        {5, "sphere dimensions follow the graph invariants", criterion_5},
        {6, "doscremo cross-polytope collapse and r = alpha0 = beta1", criterion_6},
        {7, "Koenig: alpha0 = beta1, fast forest computations agree", criterion_7},
        {8, "random multidiforests: certified, verified, parallel domination", criterion_8},
        {9, "random interval families: certified, verified, constructor identity", criterion_9},
        {10, "degenerate conventions for ∅ and {∅}", criterion_10},
    };

    int failures = 0;
    for (auto& entry : criteria) {
        Check check;
        auto start = Clock::now();
        try {
            entry.run(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        double dt = seconds_since(start);
        std::ostringstream line;
        line << "criterion " << entry.id << ": " << (check.ok ? "PASS" : "FAIL") << " — "
             << entry.name << " (" << std::fixed << std::setprecision(2) << dt << "s)";
        if (!check.ok) line << " [" << check.why.str() << "]";
        std::cout << line.str() << std::endl;
        if (!check.ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
