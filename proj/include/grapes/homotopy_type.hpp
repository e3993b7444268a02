#ifndef GRAPES_HOMOTOPY_TYPE_HPP
#define GRAPES_HOMOTOPY_TYPE_HPP

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

// Either contractible or a wedge of spheres, encoded as the multiset of
// sphere dimensions. S^-1 = {∅} admits no wedge partners, so a wedge
// containing -1 is exactly {-1}; the empty wedge is spelled Contractible.
class HomotopyType {
public:
    static HomotopyType contractible() { return HomotopyType(); }

    static HomotopyType sphere(int dim) { return wedge({dim}); }

    static HomotopyType wedge(std::vector<int> dims) {
        if (dims.empty()) throw internal_error("empty wedge; use contractible()");
        for (int d : dims)
            if (d < -1) throw internal_error("sphere dimension below -1");
        std::sort(dims.begin(), dims.end(), std::greater<int>());
        if (dims.back() == -1 && dims.size() > 1)
            throw internal_error("S^-1 cannot be wedged with other spheres");
        HomotopyType t;
        t.contractible_ = false;
        t.dims_ = std::move(dims);
        return t;
    }

    bool is_contractible() const { return contractible_; }

    // Sphere dimensions in descending order; empty iff contractible.
    const std::vector<int>& sphere_dims() const { return dims_; }

    std::string str() const {
        if (contractible_) return "contractible";
        std::string s;
        for (std::size_t i = 0; i < dims_.size(); ++i) {
            if (i) s += " v ";
            s += "S^" + std::to_string(dims_[i]);
        }
        return s;
    }

    bool operator==(const HomotopyType&) const = default;

private:
    HomotopyType() = default;

    bool contractible_ = true;
    std::vector<int> dims_;
};

// Suspension shifts every sphere dimension up by one and preserves
// contractibility.
inline HomotopyType suspend_type(const HomotopyType& t) {
    if (t.is_contractible()) return HomotopyType::contractible();
    std::vector<int> dims = t.sphere_dims();
    for (int& d : dims) ++d;
    return HomotopyType::wedge(dims);
}

// One-point union. Contractible is the identity; S^-1 never legitimately
// meets a nontrivial partner, so that case is an internal error.
inline HomotopyType wedge_type(const HomotopyType& a, const HomotopyType& b) {
    if (a.is_contractible()) return b;
    if (b.is_contractible()) return a;
    std::vector<int> dims = a.sphere_dims();
    dims.insert(dims.end(), b.sphere_dims().begin(), b.sphere_dims().end());
    return HomotopyType::wedge(dims); // wedge() rejects a stray S^-1
}

struct DominationPair {
    Label dominator; // a
    Label dominated; // b

    bool operator==(const DominationPair&) const = default;
};

// Certificate tree of the decomposition. Split nodes carry the domination
// pair and the two branches; everything else is a base case.
struct TraceNode {
    enum class Kind { Empty, MinusOneSphere, Point, Cone, Split, Unresolved };

    Kind kind = Kind::Empty;
    Label a; // point / cone apex / split dominator
    Label b; // split dominated
    std::shared_ptr<const TraceNode> deletion_branch;
    std::shared_ptr<const TraceNode> link_branch;
};

using TracePtr = std::shared_ptr<const TraceNode>;

inline TracePtr trace_leaf(TraceNode::Kind kind, const Label& a = {}) {
    auto n = std::make_shared<TraceNode>();
    n->kind = kind;
    n->a = a;
    return n;
}

inline TracePtr trace_split(const DominationPair& p, TracePtr del, TracePtr lnk) {
    auto n = std::make_shared<TraceNode>();
    n->kind = TraceNode::Kind::Split;
    n->a = p.dominator;
    n->b = p.dominated;
    n->deletion_branch = std::move(del);
    n->link_branch = std::move(lnk);
    return n;
}

// One node per line, children indented two spaces, deletion branch first.
inline void serialize_trace(const TracePtr& node, std::string& out, int depth = 0) {
    if (!node) return;
    out.append(static_cast<std::size_t>(depth) * 2, ' ');
    switch (node->kind) {
        case TraceNode::Kind::Empty: out += "empty\n"; break;
        case TraceNode::Kind::MinusOneSphere: out += "sphere(-1)\n"; break;
        case TraceNode::Kind::Point: out += "point " + node->a + "\n"; break;
        case TraceNode::Kind::Cone: out += "cone apex=" + node->a + "\n"; break;
        case TraceNode::Kind::Unresolved: out += "unresolved\n"; break;
        case TraceNode::Kind::Split:
            out += "split a=" + node->a + " b=" + node->b + "\n";
            serialize_trace(node->deletion_branch, out, depth + 1);
            serialize_trace(node->link_branch, out, depth + 1);
            break;
    }
}

inline std::string serialize_trace(const TracePtr& node) {
    std::string out;
    serialize_trace(node, out, 0);
    return out;
}

} // namespace grapes

#endif
