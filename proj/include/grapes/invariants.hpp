#ifndef GRAPES_INVARIANTS_HPP
#define GRAPES_INVARIANTS_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

struct GraphInvariants {
    int gamma;  // domination number
    int i_dom;  // independent domination number
    int alpha0; // vertex covering number
    int beta1;  // matching number
    int kappa;  // connected components

    bool operator==(const GraphInvariants&) const = default;
};

// Brute-force oracles refuse graphs above this many vertices.
inline constexpr std::size_t kInvariantCutoff = 20;

namespace detail {

// Next bitmask with the same popcount (Gosper's hack).
inline std::uint32_t next_combination(std::uint32_t v) {
    std::uint32_t t = v | (v - 1);
    return (t + 1) | (((~t & (t + 1)) - 1) >> (__builtin_ctz(v) + 1));
}

struct MaskedGraph {
    std::vector<Label> verts;               // sorted
    std::vector<std::uint32_t> closed_nbr;  // N[v] as a mask
    std::vector<std::uint32_t> open_nbr;
    std::vector<std::pair<int, int>> edges; // indices into verts
    std::uint32_t full = 0;

    explicit MaskedGraph(const Graph& g) {
        verts.assign(g.vertices().begin(), g.vertices().end());
        std::map<Label, int> idx;
        for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
        closed_nbr.assign(verts.size(), 0);
        open_nbr.assign(verts.size(), 0);
        for (std::size_t i = 0; i < verts.size(); ++i) {
            closed_nbr[i] = 1u << i;
            for (const auto& w : g.neighbors(verts[i])) {
                closed_nbr[i] |= 1u << idx[w];
                open_nbr[i] |= 1u << idx[w];
            }
        }
        for (const auto& [u, v] : g.edges()) edges.push_back({idx[u], idx[v]});
        full = verts.size() == 32 ? ~0u : (1u << verts.size()) - 1;
    }

    bool dominating(std::uint32_t d) const {
        std::uint32_t covered = 0;
        for (std::uint32_t m = d; m; m &= m - 1)
            covered |= closed_nbr[__builtin_ctz(m)];
        return covered == full;
    }

    bool independent(std::uint32_t d) const {
        for (const auto& [a, b] : edges)
            if ((d >> a & 1u) && (d >> b & 1u)) return false;
        return true;
    }

    bool vertex_cover(std::uint32_t c) const {
        for (const auto& [a, b] : edges)
            if (!(c >> a & 1u) && !(c >> b & 1u)) return false;
        return true;
    }
};

// Smallest subset size passing `ok`, enumerating subsets in increasing
// cardinality and stopping at the first hit.
template <typename Pred>
int smallest_subset(std::size_t n, Pred ok) {
    for (std::size_t k = 0; k <= n; ++k) {
        if (k == 0) {
            if (ok(0u)) return 0;
            continue;
        }
        std::uint32_t m = (1u << k) - 1;
        std::uint32_t limit = n == 32 ? ~0u : (1u << n);
        while (m < limit) {
            if (ok(m)) return static_cast<int>(k);
            if (m == 0) break;
            std::uint32_t nx = next_combination(m);
            if (nx <= m || nx >= limit) break;
            m = nx;
        }
    }
    throw internal_error("no feasible subset found");
}

inline int max_matching_rec(const MaskedGraph& mg, std::uint32_t active,
                            std::unordered_map<std::uint32_t, int>& memo) {
    if (active == 0) return 0;
    auto it = memo.find(active);
    if (it != memo.end()) return it->second;
    int v = __builtin_ctz(active);
    std::uint32_t rest = active & ~(1u << v);
    int best = max_matching_rec(mg, rest, memo); // v stays unmatched
    std::uint32_t mates = mg.open_nbr[v] & rest;
    for (std::uint32_t m = mates; m; m &= m - 1) {
        int u = __builtin_ctz(m);
        best = std::max(best, 1 + max_matching_rec(mg, rest & ~(1u << u), memo));
    }
    memo[active] = best;
    return best;
}

} // namespace detail

// Exhaustive-search values of the classical invariants. The subset
// enumeration is the oracle the rest of the library is checked against.
inline GraphInvariants graph_invariants(const Graph& g, std::size_t cutoff = kInvariantCutoff) {
    if (cutoff > 25) cutoff = 25;
    if (g.vertex_count() > cutoff)
        throw resource_error("graph has " + std::to_string(g.vertex_count()) +
                             " vertices, above the brute-force cutoff of " + std::to_string(cutoff));
    detail::MaskedGraph mg(g);
    std::size_t n = mg.verts.size();

    GraphInvariants inv{};
    inv.gamma = detail::smallest_subset(n, [&](std::uint32_t m) { return mg.dominating(m); });
    inv.i_dom = detail::smallest_subset(
        n, [&](std::uint32_t m) { return mg.independent(m) && mg.dominating(m); });
    inv.alpha0 = detail::smallest_subset(n, [&](std::uint32_t m) { return mg.vertex_cover(m); });
    std::unordered_map<std::uint32_t, int> memo;
    inv.beta1 = detail::max_matching_rec(mg, mg.full, memo);
    inv.kappa = static_cast<int>(connected_component_count(g));
    return inv;
}

namespace detail {

struct RootedOrder {
    std::vector<int> order;  // postorder over all components
    std::vector<int> parent; // -1 at roots
};

inline RootedOrder rooted_postorder(const MaskedGraph& mg) {
    std::size_t n = mg.verts.size();
    RootedOrder ro;
    ro.parent.assign(n, -1);
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root]) continue;
        std::vector<int> stack{static_cast<int>(root)};
        std::vector<int> pre;
        seen[root] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            pre.push_back(v);
            for (std::uint32_t m = mg.open_nbr[v]; m; m &= m - 1) {
                int w = __builtin_ctz(m);
                if (!seen[w]) {
                    seen[w] = true;
                    ro.parent[w] = v;
                    stack.push_back(w);
                }
            }
        }
        for (auto it = pre.rbegin(); it != pre.rend(); ++it) ro.order.push_back(*it);
    }
    return ro;
}

} // namespace detail

// Linear-time matching number on forests: greedily match leaves upward.
inline int forest_beta1(const Graph& g) {
    if (!is_forest(g)) throw input_error("forest_beta1 requires a forest");
    detail::MaskedGraph mg(g);
    auto ro = detail::rooted_postorder(mg);
    std::vector<bool> matched(mg.verts.size(), false);
    int count = 0;
    for (int v : ro.order) {
        int p = ro.parent[v];
        if (p >= 0 && !matched[v] && !matched[p]) {
            matched[v] = matched[p] = true;
            ++count;
        }
    }
    return count;
}

// Linear-time vertex cover on forests: a leaf's neighbor enters the cover.
inline int forest_alpha0(const Graph& g) {
    if (!is_forest(g)) throw input_error("forest_alpha0 requires a forest");
    detail::MaskedGraph mg(g);
    auto ro = detail::rooted_postorder(mg);
    std::vector<bool> in_cover(mg.verts.size(), false);
    int count = 0;
    for (int v : ro.order) {
        int p = ro.parent[v];
        if (p >= 0 && !in_cover[v] && !in_cover[p]) {
            in_cover[p] = true;
            ++count;
        }
    }
    return count;
}

// Linear-time domination number on forests (three-state tree DP:
// v in the set / v dominated by a child / v left for its parent).
inline int forest_gamma(const Graph& g) {
    if (!is_forest(g)) throw input_error("forest_gamma requires a forest");
    detail::MaskedGraph mg(g);
    auto ro = detail::rooted_postorder(mg);
    std::size_t n = mg.verts.size();
    const int inf = std::numeric_limits<int>::max() / 4;

    std::vector<int> dp_in(n, 0), dp_dom(n, 0), dp_und(n, 0);
    std::vector<int> sum_any(n, 0), sum_cov(n, 0), best_pen(n, inf);

    for (int v : ro.order) { // children always precede parents
        dp_in[v] = 1 + sum_any[v];
        dp_und[v] = sum_cov[v];
        dp_dom[v] = best_pen[v] == inf ? inf : sum_cov[v] + best_pen[v];
        int p = ro.parent[v];
        if (p >= 0) {
            int cov = std::min(dp_in[v], dp_dom[v]);
            sum_any[p] += std::min(cov, dp_und[v]);
            sum_cov[p] += cov;
            best_pen[p] = std::min(best_pen[p], dp_in[v] - cov);
        }
    }
    int total = 0;
    for (std::size_t v = 0; v < n; ++v)
        if (ro.parent[v] < 0) total += std::min(dp_in[v], dp_dom[v]);
    return total;
}

} // namespace grapes

#endif
