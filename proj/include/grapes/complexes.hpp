#ifndef GRAPES_COMPLEXES_HPP
#define GRAPES_COMPLEXES_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "invariants.hpp"
#include "multidigraph.hpp"
#include "simplicial.hpp"

namespace grapes {

enum class ComplexKind {
    OrientedForest,
    Independence,
    Dominance,
    Matching,
    EdgeCover,
    EdgeDominance,
    IntervalOrder,
};

inline std::optional<ComplexKind> kind_from_string(const std::string& s) {
    if (s == "of") return ComplexKind::OrientedForest;
    if (s == "ind") return ComplexKind::Independence;
    if (s == "dom") return ComplexKind::Dominance;
    if (s == "match") return ComplexKind::Matching;
    if (s == "ec") return ComplexKind::EdgeCover;
    if (s == "ed") return ComplexKind::EdgeDominance;
    if (s == "io") return ComplexKind::IntervalOrder;
    return std::nullopt;
}

inline std::string kind_to_string(ComplexKind k) {
    switch (k) {
        case ComplexKind::OrientedForest: return "of";
        case ComplexKind::Independence: return "ind";
        case ComplexKind::Dominance: return "dom";
        case ComplexKind::Matching: return "match";
        case ComplexKind::EdgeCover: return "ec";
        case ComplexKind::EdgeDominance: return "ed";
        case ComplexKind::IntervalOrder: return "io";
    }
    throw internal_error("unknown kind");
}

namespace detail {

// Ground sets handed to the bitmask machinery stay within one machine word.
inline constexpr std::size_t kGroundCutoff = 64;

// Maximal conflict-free subsets of `items` (conflict is symmetric and
// irreflexive): Bron-Kerbosch with pivoting on the compatibility graph.
inline std::vector<Face> maximal_conflict_free(
    const std::vector<Label>& items,
    const std::function<bool(std::size_t, std::size_t)>& conflict) {
    std::size_t n = items.size();
    if (n > kGroundCutoff)
        throw resource_error("ground set of " + std::to_string(n) + " items is above the cutoff");

    std::vector<std::uint64_t> compat(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j && !conflict(i, j)) compat[i] |= 1ull << j;

    std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<Face> out;

    auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
        if (!p && !x) {
            std::vector<Label> elems;
            for (std::uint64_t m = r; m; m &= m - 1) elems.push_back(items[__builtin_ctzll(m)]);
            out.push_back(Face(std::move(elems)));
            return;
        }
        // pivot with most compatibility inside p
        std::size_t pivot = 0;
        int best = -1;
        for (std::uint64_t m = p | x; m; m &= m - 1) {
            std::size_t u = static_cast<std::size_t>(__builtin_ctzll(m));
            int cnt = __builtin_popcountll(p & compat[u]);
            if (cnt > best) { best = cnt; pivot = u; }
        }
        std::uint64_t cand = p & ~compat[pivot];
        for (std::uint64_t m = cand; m; m &= m - 1) {
            std::size_t v = static_cast<std::size_t>(__builtin_ctzll(m));
            std::uint64_t bit = 1ull << v;
            self(self, r | bit, p & compat[v], x & compat[v]);
            p &= ~bit;
            x |= bit;
        }
    };
    rec(rec, 0, all, 0);
    return out;
}

// Faces of complement-style complexes (dominance, edge cover, edge
// dominance) via full subset enumeration; returns the maximal face masks.
template <typename FacePred>
std::vector<std::uint32_t> maximal_face_masks(std::size_t n, FacePred is_face) {
    if (n > 25) throw resource_error("ground set too large for subset enumeration");
    std::uint32_t total = 1u << n;
    std::vector<bool> face(total, false);
    for (std::uint32_t m = 0; m < total; ++m) face[m] = is_face(m);
    std::vector<std::uint32_t> facets;
    for (std::uint32_t m = 0; m < total; ++m) {
        if (!face[m]) continue;
        bool maximal = true;
        for (std::size_t b = 0; b < n && maximal; ++b)
            if (!(m >> b & 1u) && face[m | (1u << b)]) maximal = false;
        if (maximal) facets.push_back(m);
    }
    return facets;
}

inline std::vector<Face> masks_to_faces(const std::vector<Label>& items,
                                        const std::vector<std::uint32_t>& masks) {
    std::vector<Face> out;
    for (auto m : masks) {
        std::vector<Label> elems;
        for (std::uint32_t w = m; w; w &= w - 1) elems.push_back(items[__builtin_ctz(w)]);
        out.push_back(Face(std::move(elems)));
    }
    return out;
}

} // namespace detail

// Ind(G): faces are the independent vertex sets.
inline SimplicialComplex independence_complex(const Graph& g) {
    std::vector<Label> verts(g.vertices().begin(), g.vertices().end());
    auto facets = detail::maximal_conflict_free(
        verts, [&](std::size_t i, std::size_t j) { return g.has_edge(verts[i], verts[j]); });
    return SimplicialComplex::from_faces(verts, std::move(facets));
}

// Dom(G): σ is a face iff V \ σ is a dominating set.
inline SimplicialComplex dominance_complex(const Graph& g, std::size_t cutoff = kInvariantCutoff) {
    if (g.vertex_count() > cutoff)
        throw resource_error("dominance complex above the brute-force cutoff");
    detail::MaskedGraph mg(g);
    std::size_t n = mg.verts.size();
    auto masks = detail::maximal_face_masks(
        n, [&](std::uint32_t m) { return mg.dominating(mg.full & ~m); });
    return SimplicialComplex::from_faces(mg.verts, detail::masks_to_faces(mg.verts, masks));
}

// Same complex from the other description: the minimal non-faces are the
// minimal closed neighborhoods, so σ is a face iff it contains no N[x].
inline SimplicialComplex dominance_complex_from_nonfaces(const Graph& g,
                                                         std::size_t cutoff = kInvariantCutoff) {
    if (g.vertex_count() > cutoff)
        throw resource_error("dominance complex above the brute-force cutoff");
    detail::MaskedGraph mg(g);
    std::size_t n = mg.verts.size();
    auto masks = detail::maximal_face_masks(n, [&](std::uint32_t m) {
        for (std::size_t x = 0; x < n; ++x)
            if ((mg.closed_nbr[x] & ~m) == 0) return false;
        return true;
    });
    return SimplicialComplex::from_faces(mg.verts, detail::masks_to_faces(mg.verts, masks));
}

// M(G): faces are the matchings, built directly from edge disjointness.
// Equality with Ind(line_dual(G)) is a test invariant, not the definition.
inline SimplicialComplex matching_complex(const Graph& g) {
    std::vector<VertexPair> es(g.edges().begin(), g.edges().end());
    std::vector<Label> names;
    for (const auto& [u, v] : es) names.push_back(edge_label(u, v));
    auto facets = detail::maximal_conflict_free(names, [&](std::size_t i, std::size_t j) {
        const auto& a = es[i];
        const auto& b = es[j];
        return a.first == b.first || a.first == b.second || a.second == b.first ||
               a.second == b.second;
    });
    return SimplicialComplex::from_faces(names, std::move(facets));
}

namespace detail {

struct EdgeGround {
    std::vector<Label> names;                 // sorted edge labels
    std::vector<VertexPair> edges;            // aligned with names
    std::vector<Label> verts;
    std::vector<std::uint32_t> star_of_vertex; // star(v) as an edge mask
    std::vector<std::uint32_t> star_of_edge;   // star(e): edges meeting e, e included

    explicit EdgeGround(const Graph& g) {
        std::map<Label, VertexPair> by_name;
        for (const auto& e : g.edges()) by_name[edge_label(e.first, e.second)] = e;
        for (const auto& [name, e] : by_name) {
            names.push_back(name);
            edges.push_back(e);
        }
        verts.assign(g.vertices().begin(), g.vertices().end());
        std::map<Label, std::size_t> vidx;
        for (std::size_t i = 0; i < verts.size(); ++i) vidx[verts[i]] = i;
        star_of_vertex.assign(verts.size(), 0);
        for (std::size_t j = 0; j < edges.size(); ++j) {
            star_of_vertex[vidx[edges[j].first]] |= 1u << j;
            star_of_vertex[vidx[edges[j].second]] |= 1u << j;
        }
        star_of_edge.assign(edges.size(), 0);
        for (std::size_t j = 0; j < edges.size(); ++j)
            star_of_edge[j] = star_of_vertex[vidx[edges[j].first]] |
                              star_of_vertex[vidx[edges[j].second]];
    }
};

} // namespace detail

// EC(G): σ is a face iff E \ σ is an edge cover. A graph with an isolated
// vertex has no edge cover at all, so EC(G) = ∅ falls out of the defining
// test.
inline SimplicialComplex edge_cover_complex(const Graph& g, std::size_t cutoff = kInvariantCutoff) {
    if (g.edge_count() > cutoff)
        throw resource_error("edge cover complex above the brute-force cutoff");
    detail::EdgeGround eg(g);
    std::size_t n = eg.names.size();
    auto masks = detail::maximal_face_masks(n, [&](std::uint32_t m) {
        std::uint32_t remaining = (n == 32 ? ~0u : (1u << n) - 1) & ~m;
        for (std::size_t v = 0; v < eg.verts.size(); ++v)
            if ((eg.star_of_vertex[v] & remaining) == 0) return false;
        return true;
    });
    return SimplicialComplex::from_faces(eg.names, detail::masks_to_faces(eg.names, masks));
}

// EC(G) again, from its minimal non-faces {star(v)}.
inline SimplicialComplex edge_cover_complex_from_nonfaces(const Graph& g,
                                                          std::size_t cutoff = kInvariantCutoff) {
    if (g.edge_count() > cutoff)
        throw resource_error("edge cover complex above the brute-force cutoff");
    detail::EdgeGround eg(g);
    std::size_t n = eg.names.size();
    auto masks = detail::maximal_face_masks(n, [&](std::uint32_t m) {
        for (std::size_t v = 0; v < eg.verts.size(); ++v)
            if ((eg.star_of_vertex[v] & ~m) == 0) return false;
        return true;
    });
    return SimplicialComplex::from_faces(eg.names, detail::masks_to_faces(eg.names, masks));
}

// ED(G): σ is a face iff E \ σ dominates the line dual.
inline SimplicialComplex edge_dominance_complex(const Graph& g,
                                                std::size_t cutoff = kInvariantCutoff) {
    if (g.edge_count() > cutoff)
        throw resource_error("edge dominance complex above the brute-force cutoff");
    detail::EdgeGround eg(g);
    std::size_t n = eg.names.size();
    auto masks = detail::maximal_face_masks(n, [&](std::uint32_t m) {
        std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
        std::uint32_t covered = 0;
        for (std::uint32_t w = full & ~m; w; w &= w - 1)
            covered |= eg.star_of_edge[__builtin_ctz(w)];
        return covered == full;
    });
    return SimplicialComplex::from_faces(eg.names, detail::masks_to_faces(eg.names, masks));
}

// ED(G) from its minimal non-faces {star(e)}.
inline SimplicialComplex edge_dominance_complex_from_nonfaces(const Graph& g,
                                                              std::size_t cutoff = kInvariantCutoff) {
    if (g.edge_count() > cutoff)
        throw resource_error("edge dominance complex above the brute-force cutoff");
    detail::EdgeGround eg(g);
    std::size_t n = eg.names.size();
    auto masks = detail::maximal_face_masks(n, [&](std::uint32_t m) {
        for (std::size_t e = 0; e < n; ++e)
            if ((eg.star_of_edge[e] & ~m) == 0) return false;
        return true;
    });
    return SimplicialComplex::from_faces(eg.names, detail::masks_to_faces(eg.names, masks));
}

namespace detail {

// Does the arc subset contain an oriented cycle? Targets are distinct, so
// walking target -> source is a functional-graph walk.
inline bool has_oriented_cycle(const std::vector<Arc>& arcs, std::uint32_t mask) {
    std::map<Label, Label> source_of_target;
    for (std::uint32_t w = mask; w; w &= w - 1) {
        const Arc& a = arcs[__builtin_ctz(w)];
        source_of_target[a.dst] = a.src;
    }
    for (const auto& [start, first_src] : source_of_target) {
        Label cur = first_src;
        std::size_t steps = 0;
        while (steps++ <= source_of_target.size()) {
            if (cur == start) return true;
            auto it = source_of_target.find(cur);
            if (it == source_of_target.end()) break;
            cur = it->second;
        }
    }
    return false;
}

inline bool oriented_forest_face(const std::vector<Arc>& arcs, std::uint32_t mask) {
    std::set<Label> targets;
    for (std::uint32_t w = mask; w; w &= w - 1)
        if (!targets.insert(arcs[__builtin_ctz(w)].dst).second) return false;
    return !has_oriented_cycle(arcs, mask);
}

} // namespace detail

// OF(M): ground is the loop-free arcs; faces are the arc subsets with
// pairwise distinct targets and no oriented cycle.
inline SimplicialComplex oriented_forest_complex(const Multidigraph& m) {
    std::vector<Arc> arcs;
    for (const auto& a : m.arcs())
        if (a.src != a.dst) arcs.push_back(a); // loops never matter
    if (arcs.size() > 20)
        throw resource_error("oriented forest complex above the enumeration cutoff");
    std::vector<Label> names;
    for (const auto& a : arcs) names.push_back(arc_label(a));

    std::size_t n = arcs.size();
    std::vector<Face> facets;
    // walk the include/exclude tree, descending only through faces
    auto rec = [&](auto&& self, std::size_t i, std::uint32_t mask) -> void {
        if (i == n) {
            for (std::size_t j = 0; j < n; ++j)
                if (!(mask >> j & 1u) && detail::oriented_forest_face(arcs, mask | (1u << j)))
                    return; // extendable, not maximal
            std::vector<Label> elems;
            for (std::uint32_t w = mask; w; w &= w - 1) elems.push_back(names[__builtin_ctz(w)]);
            facets.push_back(Face(std::move(elems)));
            return;
        }
        std::uint32_t with = mask | (1u << i);
        if (detail::oriented_forest_face(arcs, with)) self(self, i + 1, with);
        self(self, i + 1, mask);
    };
    rec(rec, 0, 0);
    return SimplicialComplex::from_faces(names, std::move(facets));
}

// 𝒪(X): faces are the pairwise-disjoint subfamilies of X.
inline SimplicialComplex interval_order_complex(const IntervalSet& x) {
    std::vector<Label> names;
    for (const auto& iv : x.intervals()) names.push_back(iv.name);
    const auto& ivs = x.intervals();
    auto facets = detail::maximal_conflict_free(names, [&](std::size_t i, std::size_t j) {
        return intervals_intersect(ivs[i], ivs[j]);
    });
    return SimplicialComplex::from_faces(names, std::move(facets));
}

} // namespace grapes

#endif
