#ifndef GRAPES_IO_HPP
#define GRAPES_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "intervals.hpp"
#include "multidigraph.hpp"
#include "simplicial.hpp"

namespace grapes {

namespace detail {

// Strips comments ('#' to end of line) and splits on whitespace.
inline std::vector<std::string> tokenize_line(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tokens;
    std::string tok;
    while (ss >> tok) tokens.push_back(tok);
    return tokens;
}

inline void check_label(const std::string& tok) {
    if (!valid_label(tok))
        throw input_error("bad label '" + tok + "' (allowed: [A-Za-z0-9_]+)");
}

} // namespace detail

// Undirected graph file: `v <name>` and `e <name> <name>` lines.
inline Graph parse_graph(std::istream& in) {
    Graph g;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = detail::tokenize_line(line);
        if (tok.empty()) continue;
        if (tok[0] == "v" && tok.size() == 2) {
            detail::check_label(tok[1]);
            g.add_vertex(tok[1]);
        } else if (tok[0] == "e" && tok.size() == 3) {
            detail::check_label(tok[1]);
            detail::check_label(tok[2]);
            g.add_edge(tok[1], tok[2]);
        } else {
            throw input_error("bad graph line: '" + line + "'");
        }
    }
    return g;
}

inline void write_graph(std::ostream& out, const Graph& g) {
    for (const auto& v : g.vertices()) out << "v " << v << "\n";
    for (const auto& [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
}

// Multidigraph file: `v <name>` and `a <src> <dst>` lines; repeated `a`
// lines create parallel arcs indexed in file order.
inline Multidigraph parse_multidigraph(std::istream& in) {
    Multidigraph m;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = detail::tokenize_line(line);
        if (tok.empty()) continue;
        if (tok[0] == "v" && tok.size() == 2) {
            detail::check_label(tok[1]);
            m.add_vertex(tok[1]);
        } else if (tok[0] == "a" && tok.size() == 3) {
            detail::check_label(tok[1]);
            detail::check_label(tok[2]);
            m.add_arc(tok[1], tok[2]);
        } else {
            throw input_error("bad multidigraph line: '" + line + "'");
        }
    }
    return m;
}

// Interval file: `i <name> <lo> <hi>` lines with decimal endpoints.
inline IntervalSet parse_intervals(std::istream& in) {
    IntervalSet x;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = detail::tokenize_line(line);
        if (tok.empty()) continue;
        if (tok[0] == "i" && tok.size() == 4) {
            detail::check_label(tok[1]);
            x.add(tok[1], Rational::parse(tok[2]), Rational::parse(tok[3]));
        } else {
            throw input_error("bad interval line: '" + line + "'");
        }
    }
    return x;
}

// Facet file: optional `X: <label...>` header naming the ground set, then
// one `F: <label...>` line per facet. A bare `F:` is the empty face, so a
// file with just `F:` encodes {∅}; a header with no `F:` lines encodes ∅.
inline SimplicialComplex parse_facets(std::istream& in) {
    std::vector<Label> ground;
    std::vector<Face> faces;
    bool saw_header = false;
    std::string line;
    while (std::getline(in, line)) {
        auto tok = detail::tokenize_line(line);
        if (tok.empty()) continue;
        if (tok[0] == "X:") {
            if (saw_header) throw input_error("duplicate X: header");
            saw_header = true;
            for (std::size_t i = 1; i < tok.size(); ++i) ground.push_back(tok[i]);
        } else if (tok[0] == "F:") {
            std::vector<Label> elems(tok.begin() + 1, tok.end());
            for (const auto& x : elems) ground.push_back(x);
            faces.push_back(Face(std::move(elems)));
        } else {
            throw input_error("bad facet line: '" + line + "'");
        }
    }
    return SimplicialComplex::from_faces(std::move(ground), std::move(faces));
}

inline void write_facets(std::ostream& out, const SimplicialComplex& c) {
    out << "X:";
    for (const auto& x : c.ground()) out << " " << x;
    out << "\n";
    for (const auto& f : c.facets()) {
        out << "F:";
        for (const auto& x : f.elements()) out << " " << x;
        out << "\n";
    }
}

} // namespace grapes

#endif
