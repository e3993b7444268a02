#ifndef GRAPES_INTERVALS_HPP
#define GRAPES_INTERVALS_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"

namespace grapes {

// Exact rational endpoint. Overlap at a shared endpoint must be decided
// exactly, so decimal input is parsed into num/den instead of a double.
struct Rational {
    long long num = 0;
    long long den = 1; // always > 0, gcd(num, den) == 1

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) {
        if (den == 0) throw input_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }

    static Rational parse(const std::string& text) {
        // [+-]?digits[.digits]?
        std::size_t i = 0;
        bool neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            neg = text[i] == '-';
            ++i;
        }
        long long whole = 0, frac = 0, scale = 1;
        bool any = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            whole = whole * 10 + (text[i] - '0');
            ++i;
            any = true;
        }
        if (i < text.size() && text[i] == '.') {
            ++i;
            bool fany = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                frac = frac * 10 + (text[i] - '0');
                scale *= 10;
                ++i;
                fany = true;
            }
            if (!fany) throw input_error("bad rational '" + text + "'");
            any = true;
        }
        if (!any || i != text.size()) throw input_error("bad rational '" + text + "'");
        long long num = whole * scale + frac;
        return Rational(neg ? -num : num, scale);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
    }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }

    std::string str() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }
};

struct Interval {
    Label name;
    Rational lo;
    Rational hi;
};

inline bool intervals_intersect(const Interval& a, const Interval& b) {
    return a.lo <= b.hi && b.lo <= a.hi;
}

// Finite list of named closed bounded intervals; names are unique.
class IntervalSet {
public:
    IntervalSet() = default;

    void add(const Label& name, const Rational& lo, const Rational& hi) {
        if (name.empty()) throw input_error("empty interval name");
        if (hi < lo) throw input_error("interval '" + name + "' has hi < lo");
        for (const auto& iv : intervals_)
            if (iv.name == name) throw input_error("duplicate interval '" + name + "'");
        intervals_.push_back({name, lo, hi});
        std::sort(intervals_.begin(), intervals_.end(),
                  [](const Interval& a, const Interval& b) { return a.name < b.name; });
    }

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }

    const Interval& get(const Label& name) const {
        for (const auto& iv : intervals_)
            if (iv.name == name) return iv;
        throw input_error("unknown interval '" + name + "'");
    }

    IntervalSet without(const Label& name) const {
        IntervalSet out;
        bool found = false;
        for (const auto& iv : intervals_) {
            if (iv.name == name) { found = true; continue; }
            out.add(iv.name, iv.lo, iv.hi);
        }
        if (!found) throw input_error("unknown interval '" + name + "'");
        return out;
    }

    // Drops every interval meeting the named one, itself included.
    IntervalSet without_meeting(const Label& name) const {
        const Interval& j = get(name);
        IntervalSet out;
        for (const auto& iv : intervals_)
            if (!intervals_intersect(iv, j)) out.add(iv.name, iv.lo, iv.hi);
        return out;
    }

private:
    std::vector<Interval> intervals_;
};

// O(X): vertices are the interval names, edges join intersecting intervals.
inline Graph interval_overlap_graph(const IntervalSet& x) {
    Graph g;
    const auto& ivs = x.intervals();
    for (const auto& iv : ivs) g.add_vertex(iv.name);
    for (std::size_t i = 0; i < ivs.size(); ++i)
        for (std::size_t j = i + 1; j < ivs.size(); ++j)
            if (intervals_intersect(ivs[i], ivs[j])) g.add_edge(ivs[i].name, ivs[j].name);
    return g;
}

} // namespace grapes

#endif
