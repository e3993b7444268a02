#ifndef GRAPES_SIMPLICIAL_HPP
#define GRAPES_SIMPLICIAL_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

// A face is a finite set of labels, stored sorted. The empty face is a
// legal value and plays a real role: {∅} and ∅ are different complexes.
class Face {
public:
    Face() = default;
    explicit Face(std::vector<Label> elems) : elems_(std::move(elems)) {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    }
    Face(std::initializer_list<Label> elems) : Face(std::vector<Label>(elems)) {}

    static Face single(const Label& x) { return Face{x}; }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    const std::vector<Label>& elements() const { return elems_; }

    bool contains(const Label& x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    bool is_subset_of(const Face& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    bool intersects(const Face& other) const {
        auto a = elems_.begin();
        auto b = other.elems_.begin();
        while (a != elems_.end() && b != other.elems_.end()) {
            if (*a == *b) return true;
            if (*a < *b) ++a; else ++b;
        }
        return false;
    }

    Face union_with(const Face& other) const {
        std::vector<Label> out;
        std::set_union(elems_.begin(), elems_.end(),
                       other.elems_.begin(), other.elems_.end(), std::back_inserter(out));
        Face f;
        f.elems_ = std::move(out);
        return f;
    }

    Face minus(const Face& other) const {
        std::vector<Label> out;
        std::set_difference(elems_.begin(), elems_.end(),
                            other.elems_.begin(), other.elems_.end(), std::back_inserter(out));
        Face f;
        f.elems_ = std::move(out);
        return f;
    }

    Face with(const Label& x) const { return union_with(Face{x}); }

    Face without(const Label& x) const {
        Face f;
        for (const auto& e : elems_)
            if (e != x) f.elems_.push_back(e);
        return f;
    }

    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            if (i) s += ",";
            s += elems_[i];
        }
        return s + "}";
    }

    bool operator==(const Face&) const = default;
    auto operator<=>(const Face&) const = default; // lexicographic on sorted labels

private:
    std::vector<Label> elems_;
};

// Finite abstract simplicial complex, stored by its facets (maximal faces).
// The ground set is explicit and may strictly contain the vertices that
// appear in faces. Degenerate values: no facets at all is the empty complex
// ∅; a single empty facet is {∅}, the (-1)-dimensional sphere.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::vector<Label> ground) {
        SimplicialComplex c;
        c.ground_ = normalize_ground(std::move(ground));
        return c;
    }

    static SimplicialComplex sphere_minus_one(std::vector<Label> ground = {}) {
        SimplicialComplex c;
        c.ground_ = normalize_ground(std::move(ground));
        c.facets_ = {Face{}};
        return c;
    }

    // Builds the complex generated by `faces` (any list, not necessarily
    // maximal or distinct); keeps the inclusion-maximal ones.
    static SimplicialComplex from_faces(std::vector<Label> ground, std::vector<Face> faces) {
        SimplicialComplex c;
        c.ground_ = normalize_ground(std::move(ground));
        for (const auto& f : faces)
            for (const auto& x : f.elements())
                if (!std::binary_search(c.ground_.begin(), c.ground_.end(), x))
                    throw input_error("face " + f.str() + " not inside the ground set");
        c.facets_ = antichain(std::move(faces));
        return c;
    }

    const std::vector<Label>& ground() const { return ground_; }
    const std::vector<Face>& facets() const { return facets_; }

    bool is_void() const { return facets_.empty(); }
    bool is_sphere_minus_one() const { return facets_.size() == 1 && facets_[0].empty(); }

    bool in_ground(const Face& f) const {
        for (const auto& x : f.elements())
            if (!std::binary_search(ground_.begin(), ground_.end(), x)) return false;
        return true;
    }

    bool in_ground(const Label& x) const {
        return std::binary_search(ground_.begin(), ground_.end(), x);
    }

    // Vertices of the complex: labels x with {x} a face.
    std::vector<Label> vertex_list() const {
        std::set<Label> seen;
        for (const auto& f : facets_) seen.insert(f.elements().begin(), f.elements().end());
        return {seen.begin(), seen.end()};
    }

    bool operator==(const SimplicialComplex&) const = default;

    static std::vector<Face> antichain(std::vector<Face> faces) {
        std::sort(faces.begin(), faces.end(),
                  [](const Face& a, const Face& b) { return a.size() > b.size(); });
        std::vector<Face> keep;
        for (const auto& f : faces) {
            bool covered = false;
            for (const auto& k : keep)
                if (f.is_subset_of(k)) { covered = true; break; }
            if (!covered) keep.push_back(f);
        }
        std::sort(keep.begin(), keep.end());
        return keep;
    }

private:
    static std::vector<Label> normalize_ground(std::vector<Label> g) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
        for (const auto& x : g)
            if (x.empty()) throw input_error("empty label in ground set");
        return g;
    }

    std::vector<Label> ground_; // sorted, unique
    std::vector<Face> facets_;  // sorted, pairwise incomparable
};

// σ is a face iff it lies inside some facet. Asking about a face outside
// the ground set is an input error, not "false".
inline bool contains_face(const SimplicialComplex& c, const Face& sigma) {
    if (!c.in_ground(sigma))
        throw input_error("face " + sigma.str() + " not inside the ground set");
    for (const auto& f : c.facets())
        if (sigma.is_subset_of(f)) return true;
    return false;
}

// (Δ : σ) on ground(Δ) \ σ. Faces m with m ∩ σ = ∅ and m ∪ σ ∈ Δ.
inline SimplicialComplex link(const SimplicialComplex& c, const Face& sigma) {
    if (!c.in_ground(sigma))
        throw input_error("link: face " + sigma.str() + " not inside the ground set");
    std::vector<Label> ground;
    for (const auto& x : c.ground())
        if (!sigma.contains(x)) ground.push_back(x);
    std::vector<Face> faces;
    for (const auto& f : c.facets())
        if (sigma.is_subset_of(f)) faces.push_back(f.minus(sigma));
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

// (Δ , σ): faces not containing σ. Deleting a single vertex also removes
// it from the ground set; larger σ leave the ground unchanged.
inline SimplicialComplex deletion(const SimplicialComplex& c, const Face& sigma) {
    if (sigma.empty()) throw input_error("deletion by the empty face");
    if (!c.in_ground(sigma))
        throw input_error("deletion: face " + sigma.str() + " not inside the ground set");
    std::vector<Label> ground;
    for (const auto& x : c.ground())
        if (sigma.size() != 1 || x != sigma.elements()[0]) ground.push_back(x);
    std::vector<Face> faces;
    for (const auto& f : c.facets()) {
        if (!sigma.is_subset_of(f)) {
            faces.push_back(f);
        } else {
            for (const auto& x : sigma.elements()) faces.push_back(f.without(x));
        }
    }
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

// join(Δ1,...,Δk): facets are unions of one facet from each factor.
// Ground sets must be pairwise disjoint.
inline SimplicialComplex join_complexes(const std::vector<SimplicialComplex>& parts) {
    std::vector<Label> ground;
    for (const auto& p : parts)
        for (const auto& x : p.ground()) ground.push_back(x);
    {
        auto sorted = ground;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("join: ground sets are not pairwise disjoint");
    }
    std::vector<Face> acc{Face{}};
    for (const auto& p : parts) {
        std::vector<Face> next;
        for (const auto& a : acc)
            for (const auto& f : p.facets()) next.push_back(a.union_with(f));
        acc = std::move(next); // empty factor (∅) wipes everything out
    }
    return SimplicialComplex::from_faces(std::move(ground), std::move(acc));
}

// A_x(Δ): faces m and m ∪ {x}. When x is fresh this is the cone with
// apex x; x already in the ground is the general form.
inline SimplicialComplex cone(const SimplicialComplex& c, const Label& x) {
    std::vector<Label> ground = c.ground();
    ground.push_back(x);
    std::vector<Face> faces;
    for (const auto& f : c.facets()) faces.push_back(f.with(x));
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

// Σ_{x,y}(Δ): faces m, m ∪ {x}, m ∪ {y}.
inline SimplicialComplex suspension(const SimplicialComplex& c, const Label& x, const Label& y) {
    if (x == y) throw input_error("suspension apexes must differ");
    std::vector<Label> ground = c.ground();
    ground.push_back(x);
    ground.push_back(y);
    std::vector<Face> faces;
    for (const auto& f : c.facets()) {
        faces.push_back(f.with(x));
        faces.push_back(f.with(y));
    }
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

// Least label contained in every facet, if any. ∅ and {∅} are not cones.
inline std::optional<Label> is_cone(const SimplicialComplex& c) {
    if (c.is_void()) return std::nullopt;
    std::vector<Label> common = c.facets().front().elements();
    for (const auto& f : c.facets()) {
        std::vector<Label> next;
        for (const auto& x : common)
            if (f.contains(x)) next.push_back(x);
        common = std::move(next);
        if (common.empty()) return std::nullopt;
    }
    return common.front();
}

// Join of r zero-spheres on the given 2r labels; r = 0 yields {∅}.
inline SimplicialComplex cross_polytope_boundary(std::size_t r, const std::vector<Label>& labels) {
    if (labels.size() != 2 * r)
        throw input_error("cross_polytope_boundary: expected exactly 2r labels");
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw input_error("cross_polytope_boundary: duplicate labels");
    }
    std::vector<SimplicialComplex> spheres;
    for (std::size_t i = 0; i < r; ++i)
        spheres.push_back(SimplicialComplex::from_faces(
            {labels[2 * i], labels[2 * i + 1]},
            {Face{labels[2 * i]}, Face{labels[2 * i + 1]}}));
    return join_complexes(spheres);
}

namespace detail {

template <typename Fn>
void for_each_subset_of_size(const std::vector<Label>& elems, std::size_t k, Fn fn) {
    std::vector<Label> cur;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        if (cur.size() == k) {
            fn(cur);
            return;
        }
        for (std::size_t i = start; i + (k - cur.size()) <= elems.size(); ++i) {
            cur.push_back(elems[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace detail

// All faces of cardinality k+1, sorted and deduplicated across facets.
inline std::vector<Face> enumerate_faces(const SimplicialComplex& c, int k) {
    if (k < -1) throw input_error("enumerate_faces: k must be >= -1");
    if (k == -1) {
        if (c.is_void()) return {};
        return {Face{}};
    }
    std::set<Face> out;
    std::size_t want = static_cast<std::size_t>(k) + 1;
    for (const auto& f : c.facets()) {
        if (f.size() < want) continue;
        detail::for_each_subset_of_size(f.elements(), want, [&](const std::vector<Label>& s) {
            out.insert(Face(s));
        });
    }
    return {out.begin(), out.end()};
}

// Every face of the complex, the empty face included (for nonempty
// complexes). Guarded: enumeration stops past `cutoff` faces.
inline std::set<Face> all_faces(const SimplicialComplex& c, std::size_t cutoff = 1u << 20) {
    std::set<Face> out;
    for (const auto& f : c.facets()) {
        const auto& elems = f.elements();
        for (std::size_t k = 0; k <= elems.size(); ++k) {
            detail::for_each_subset_of_size(elems, k, [&](const std::vector<Label>& s) {
                out.insert(Face(s));
            });
            if (out.size() > cutoff)
                throw resource_error("face enumeration exceeded cutoff of " + std::to_string(cutoff));
        }
    }
    return out;
}

// Removes free pairs (τ, σ) — σ the unique face properly containing τ —
// until none is left. Pair selection is deterministic: the least eligible
// τ in face order, whose unique proper superset is then σ.
inline SimplicialComplex greedy_collapse(const SimplicialComplex& c) {
    std::set<Face> faces = all_faces(c);
    // Leaving out labels never used by faces is fine: supersets are formed
    // from vertices only.
    std::vector<Label> verts = c.vertex_list();

    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tau : faces) {
            if (tau.empty()) continue; // free faces are proper nonempty faces
            // A face whose proper supersets are exactly one face σ: then σ
            // automatically has codimension one and is maximal.
            const Face* sigma = nullptr;
            bool unique = true;
            for (const auto& v : verts) {
                if (tau.contains(v)) continue;
                auto it = faces.find(tau.with(v));
                if (it == faces.end()) continue;
                if (sigma) { unique = false; break; }
                sigma = &*it;
            }
            if (!sigma || !unique) continue;
            Face s = *sigma;
            Face t = tau;
            faces.erase(s);
            faces.erase(t);
            changed = true;
            break;
        }
    }
    std::vector<Face> remaining(faces.begin(), faces.end());
    return SimplicialComplex::from_faces(c.ground(), std::move(remaining));
}

} // namespace grapes

#endif
