#ifndef GRAPES_ENGINE_HPP
#define GRAPES_ENGINE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "complexes.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "homotopy_type.hpp"
#include "intervals.hpp"
#include "multidigraph.hpp"
#include "simplicial.hpp"

namespace grapes {

// a dominates b iff some cone with apex b sits between (Δ:a) and (Δ,a);
// equivalently A_b(Δ:a) ⊆ (Δ,a). The facet-level test below is exactly
// that: every facet of the link stays a face after adding b.
inline bool dominates(const SimplicialComplex& dx, const Label& a, const Label& b) {
    if (a == b) throw input_error("dominates: the two vertices must differ");
    if (!dx.in_ground(a) || !dx.in_ground(b))
        throw input_error("dominates: labels must lie in the ground set");
    if (!contains_face(dx, Face{b}))
        throw input_error("dominates: '" + b + "' is not a vertex of the complex");
    SimplicialComplex lk = link(dx, Face{a});
    for (const auto& m : lk.facets())
        if (!contains_face(dx, m.with(b))) return false;
    return true;
}

// ---------------------------------------------------------------------
// Family strategies. Each recursion node carries the combinatorial object
// the current complex came from, so the per-family pair choices can be read
// off the graph instead of searched for on the complex.

// Multidigraph with persistent arc names across contractions: entries keep
// the arc label they had in the original graph while sources and targets
// follow the vertex merges. The entry list always equals the vertex set of
// the current link complex.
struct ArcContext {
    struct Entry {
        Label name; // simplicial vertex label of this arc
        Label src;
        Label dst;

        bool operator==(const Entry&) const = default;
    };

    std::vector<Entry> arcs; // sorted by name; loops are never stored

    static ArcContext from(const Multidigraph& m) {
        ArcContext ctx;
        for (const auto& a : m.arcs())
            if (a.src != a.dst) ctx.arcs.push_back({arc_label(a), a.src, a.dst});
        std::sort(ctx.arcs.begin(), ctx.arcs.end(),
                  [](const Entry& x, const Entry& y) { return x.name < y.name; });
        return ctx;
    }

    ArcContext without(const Label& name) const {
        ArcContext out;
        for (const auto& e : arcs)
            if (e.name != name) out.arcs.push_back(e);
        return out;
    }

    // Contract along an arc z->u: drop arcs targeting u, rename z to u,
    // drop arcs that became loops.
    ArcContext contracted(const Label& z, const Label& u) const {
        ArcContext out;
        for (const auto& e : arcs) {
            if (e.dst == u) continue;
            Entry n = e;
            if (n.src == z) n.src = u;
            if (n.dst == z) n.dst = u;
            if (n.src == n.dst) continue;
            out.arcs.push_back(n);
        }
        return out;
    }

    bool operator==(const ArcContext&) const = default;
};

// Placeholder context for a branch the family rule guarantees to be a
// cone; asking it for a pair is a bug.
struct TerminalCtx {
    bool operator==(const TerminalCtx&) const = default;
};

using FamilyCtx = std::variant<TerminalCtx, Graph, ArcContext, IntervalSet>;

struct FamilyChoice {
    DominationPair pair;
    FamilyCtx deletion_ctx;
    FamilyCtx link_ctx;
};

namespace detail {

inline const Graph& ctx_graph(const FamilyCtx& ctx, const char* who) {
    if (const Graph* g = std::get_if<Graph>(&ctx)) return *g;
    throw internal_error(std::string(who) + ": family context is not a graph");
}

inline std::optional<FamilyChoice> choose_independence(const FamilyCtx& ctx) {
    const Graph& g = ctx_graph(ctx, "independence");
    // a vertex next to a leaf dominates the leaf: N[b] \ {b} = {a} ⊆ N[a]
    for (const auto& a : g.vertices())
        for (const auto& b : g.neighbors(a))
            if (g.is_leaf(b)) {
                std::set<Label> nbhd = closed_neighborhood(g, a);
                return FamilyChoice{{a, b}, g.without_vertex(a), g.without_vertices(nbhd)};
            }
    return std::nullopt;
}

inline std::optional<FamilyChoice> choose_dominance(const FamilyCtx& ctx) {
    const Graph& g = ctx_graph(ctx, "dominance");
    // same pair as independence; the deletion branch is a cone with apex b
    for (const auto& a : g.vertices())
        for (const auto& b : g.neighbors(a))
            if (g.is_leaf(b))
                return FamilyChoice{{a, b}, TerminalCtx{}, g.without_vertex(a)};
    return std::nullopt;
}

// Least (a, b, c): b a leaf attached to a, c another neighbor of a.
inline std::optional<std::tuple<Label, Label, Label>> leaf_hub_triple(const Graph& g) {
    for (const auto& a : g.vertices()) {
        if (g.degree(a) < 2) continue;
        for (const auto& b : g.neighbors(a)) {
            if (!g.is_leaf(b)) continue;
            for (const auto& c : g.neighbors(a))
                if (c != b) return std::tuple{a, b, c};
            break;
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyChoice> choose_matching(const FamilyCtx& ctx) {
    const Graph& g = ctx_graph(ctx, "matching");
    auto t = leaf_hub_triple(g);
    if (!t) return std::nullopt;
    auto [a, b, c] = *t;
    // {a,c} dominates {a,b}; deletion drops the edge, the link drops both
    // of its endpoints
    return FamilyChoice{{edge_label(a, c), edge_label(a, b)},
                        g.without_edge(a, c),
                        g.without_vertices({a, c})};
}

inline std::optional<FamilyChoice> choose_edge_cover(const FamilyCtx& ctx) {
    const Graph& g = ctx_graph(ctx, "edge_cover");
    // least path x1-x2-x3-x4 with x1 a leaf and x4 not; {x3,x4} then
    // dominates {x2,x3} and the deletion branch is a cone
    for (const auto& x1 : g.vertices()) {
        if (!g.is_leaf(x1)) continue;
        const Label& x2 = *g.neighbors(x1).begin();
        for (const auto& x3 : g.neighbors(x2)) {
            if (x3 == x1) continue;
            for (const auto& x4 : g.neighbors(x3)) {
                if (x4 == x2 || x4 == x1 || g.is_leaf(x4)) continue;
                return FamilyChoice{{edge_label(x3, x4), edge_label(x2, x3)},
                                    TerminalCtx{},
                                    g.without_edge(x3, x4)};
            }
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyChoice> choose_edge_dominance(const FamilyCtx& ctx) {
    const Graph& g = ctx_graph(ctx, "edge_dominance");
    // the link identity (ED(F) : {a,c}) = ED(F - edge {a,c}) is only used
    // for forests; elsewhere the family abstains
    if (!is_forest(g)) return std::nullopt;
    auto t = leaf_hub_triple(g);
    if (!t) return std::nullopt;
    auto [a, b, c] = *t;
    return FamilyChoice{{edge_label(a, c), edge_label(a, b)},
                        TerminalCtx{},
                        g.without_edge(a, c)};
}

inline std::optional<FamilyChoice> choose_oriented_forest(const FamilyCtx& ctx) {
    const ArcContext* actx = std::get_if<ArcContext>(&ctx);
    if (!actx) throw internal_error("oriented_forest: family context is not an arc system");

    // parallel arcs dominate each other; take the least pair
    std::map<std::pair<Label, Label>, std::vector<Label>> by_ends;
    for (const auto& e : actx->arcs) by_ends[{e.src, e.dst}].push_back(e.name);
    for (const auto& e : actx->arcs) {
        const auto& group = by_ends[{e.src, e.dst}];
        if (group.size() >= 2) {
            const Label& a = group[0];
            const Label& b = group[1];
            return FamilyChoice{{a, b}, actx->without(a), actx->contracted(e.src, e.dst)};
        }
    }

    // no parallels: pick a leaf y of the underlying graph with neighbor x
    std::map<Label, std::set<Label>> und;
    for (const auto& e : actx->arcs) {
        und[e.src].insert(e.dst);
        und[e.dst].insert(e.src);
    }
    auto find_arc = [&](const Label& s, const Label& d) -> const ArcContext::Entry* {
        for (const auto& e : actx->arcs)
            if (e.src == s && e.dst == d) return &e;
        return nullptr;
    };
    for (const auto& [y, nbrs] : und) {
        if (nbrs.size() != 1) continue;
        const Label& x = *nbrs.begin();
        const auto* yx = find_arc(y, x);
        const auto* xy = find_arc(x, y);
        if (yx && xy) {
            // y->x dominates x->y
            return FamilyChoice{{yx->name, xy->name}, actx->without(yx->name),
                                actx->contracted(y, x)};
        }
        if (yx && !xy) {
            // another arc z->x dominates y->x
            for (const auto& e : actx->arcs)
                if (e.dst == x && e.src != y)
                    return FamilyChoice{{e.name, yx->name}, actx->without(e.name),
                                        actx->contracted(e.src, x)};
            // unique arc into x and no cycle through it: the complex is a
            // cone, which the engine has already ruled out here
        }
    }
    return std::nullopt;
}

inline std::optional<FamilyChoice> choose_interval_order(const FamilyCtx& ctx) {
    const IntervalSet* x = std::get_if<IntervalSet>(&ctx);
    if (!x) throw internal_error("interval_order: family context is not an interval set");
    if (x->empty()) return std::nullopt;

    // I with the least right endpoint; every interval meeting I contains it
    const Interval* chosen = nullptr;
    for (const auto& iv : x->intervals())
        if (!chosen || iv.hi < chosen->hi) chosen = &iv;
    const Rational& b = chosen->hi;

    // any J != I containing b dominates I; take the least name
    for (const auto& j : x->intervals()) {
        if (j.name == chosen->name) continue;
        if (j.lo <= b && b <= j.hi)
            return FamilyChoice{{j.name, chosen->name}, x->without(j.name),
                                x->without_meeting(j.name)};
    }
    return std::nullopt; // no dominator means a cone, handled earlier
}

} // namespace detail

inline std::optional<FamilyChoice> choose_family_pair(ComplexKind kind, const FamilyCtx& ctx) {
    switch (kind) {
        case ComplexKind::Independence: return detail::choose_independence(ctx);
        case ComplexKind::Dominance: return detail::choose_dominance(ctx);
        case ComplexKind::Matching: return detail::choose_matching(ctx);
        case ComplexKind::EdgeCover: return detail::choose_edge_cover(ctx);
        case ComplexKind::EdgeDominance: return detail::choose_edge_dominance(ctx);
        case ComplexKind::OrientedForest: return detail::choose_oriented_forest(ctx);
        case ComplexKind::IntervalOrder: return detail::choose_interval_order(ctx);
    }
    throw internal_error("unknown kind");
}

// ---------------------------------------------------------------------

struct Strategy {
    bool exhaustive = true;
    ComplexKind kind = ComplexKind::Independence; // family only
    FamilyCtx ctx;                                // family only

    static Strategy Exhaustive() { return Strategy{}; }

    static Strategy Family(ComplexKind kind, FamilyCtx ctx) {
        Strategy s;
        s.exhaustive = false;
        s.kind = kind;
        s.ctx = std::move(ctx);
        return s;
    }
};

namespace detail {

inline std::optional<DominationPair> exhaustive_pair(const SimplicialComplex& dx) {
    std::vector<Label> verts = dx.vertex_list();
    for (const auto& a : verts) {
        SimplicialComplex lk = link(dx, Face{a}); // shared across candidate b's
        for (const auto& b : verts) {
            if (a == b) continue;
            bool ok = true;
            for (const auto& m : lk.facets())
                if (!contains_face(dx, m.with(b))) { ok = false; break; }
            if (ok) return DominationPair{a, b};
        }
    }
    return std::nullopt;
}

// Family choice plus the child contexts; checks that the promised
// domination actually holds.
inline std::optional<FamilyChoice> family_step(const SimplicialComplex& dx, const Strategy& s) {
    if (std::holds_alternative<TerminalCtx>(s.ctx))
        throw internal_error("family strategy recursed into a branch promised to be a cone");
    auto choice = choose_family_pair(s.kind, s.ctx);
    if (!choice) return std::nullopt;
    if (!dominates(dx, choice->pair.dominator, choice->pair.dominated))
        throw internal_error("family strategy chose a non-dominating pair (" +
                             choice->pair.dominator + ", " + choice->pair.dominated + ")");
    return choice;
}

} // namespace detail

// First domination pair under the given strategy: lexicographic scan for
// Exhaustive, the per-family rule otherwise. Requires at least two
// vertices and no cone.
inline std::optional<DominationPair> find_domination_pair(const SimplicialComplex& dx,
                                                          const Strategy& s) {
    if (dx.vertex_list().size() < 2)
        throw input_error("find_domination_pair: complex has fewer than two vertices");
    if (is_cone(dx))
        throw input_error("find_domination_pair: complex is a cone");
    if (s.exhaustive) return detail::exhaustive_pair(dx);
    auto choice = detail::family_step(dx, s);
    if (!choice) return std::nullopt;
    return choice->pair;
}

struct HomotopyResult {
    std::optional<HomotopyType> type; // absent on certification failure
    TracePtr trace;
    std::string failure;

    bool certified() const { return type.has_value(); }
};

// Recursive decomposition: peel base cases, otherwise split at a
// dominating vertex a and combine as (Δ,a) ∨ Σ(Δ:a). Failure to find a
// pair is a first-class result carrying the partial trace.
inline HomotopyResult homotopy_type(const SimplicialComplex& dx, const Strategy& s) {
    if (dx.is_void())
        return {HomotopyType::contractible(), trace_leaf(TraceNode::Kind::Empty), {}};
    if (dx.is_sphere_minus_one())
        return {HomotopyType::wedge({-1}), trace_leaf(TraceNode::Kind::MinusOneSphere), {}};
    if (dx.facets().size() == 1 && dx.facets()[0].size() == 1)
        return {HomotopyType::contractible(),
                trace_leaf(TraceNode::Kind::Point, dx.facets()[0].elements()[0]),
                {}};
    if (auto apex = is_cone(dx))
        return {HomotopyType::contractible(), trace_leaf(TraceNode::Kind::Cone, *apex), {}};

    std::optional<DominationPair> pair;
    Strategy del_strategy = s;
    Strategy link_strategy = s;
    if (s.exhaustive) {
        pair = detail::exhaustive_pair(dx);
    } else if (auto choice = detail::family_step(dx, s)) {
        pair = choice->pair;
        del_strategy = Strategy::Family(s.kind, choice->deletion_ctx);
        link_strategy = Strategy::Family(s.kind, choice->link_ctx);
    }
    if (!pair)
        return {std::nullopt, trace_leaf(TraceNode::Kind::Unresolved),
                "not certified as grape via domination: no pair found on a complex with " +
                    std::to_string(dx.vertex_list().size()) + " vertices"};

    HomotopyResult del_res = homotopy_type(deletion(dx, Face{pair->dominator}), del_strategy);
    HomotopyResult link_res = homotopy_type(link(dx, Face{pair->dominator}), link_strategy);
    TracePtr trace = trace_split(*pair, del_res.trace, link_res.trace);
    if (!del_res.certified()) return {std::nullopt, trace, del_res.failure};
    if (!link_res.certified()) return {std::nullopt, trace, link_res.failure};
    return {wedge_type(*del_res.type, suspend_type(*link_res.type)), trace, {}};
}

// ---------------------------------------------------------------------
// Building a complex together with its family strategy.

struct Instance {
    SimplicialComplex complex;
    Strategy family;
};

inline Instance make_instance(ComplexKind kind, const Graph& g) {
    switch (kind) {
        case ComplexKind::Independence:
            return {independence_complex(g), Strategy::Family(kind, g)};
        case ComplexKind::Dominance:
            return {dominance_complex(g), Strategy::Family(kind, g)};
        case ComplexKind::Matching:
            return {matching_complex(g), Strategy::Family(kind, g)};
        case ComplexKind::EdgeCover:
            return {edge_cover_complex(g), Strategy::Family(kind, g)};
        case ComplexKind::EdgeDominance:
            return {edge_dominance_complex(g), Strategy::Family(kind, g)};
        default:
            throw input_error("this complex kind is not built from an undirected graph");
    }
}

inline Instance make_instance(ComplexKind kind, const Multidigraph& m) {
    if (kind != ComplexKind::OrientedForest)
        throw input_error("only the oriented-forest complex is built from a multidigraph");
    return {oriented_forest_complex(m), Strategy::Family(kind, ArcContext::from(m))};
}

inline Instance make_instance(ComplexKind kind, const IntervalSet& x) {
    if (kind != ComplexKind::IntervalOrder)
        throw input_error("only the interval-order complex is built from intervals");
    return {interval_order_complex(x), Strategy::Family(kind, x)};
}

} // namespace grapes

#endif
