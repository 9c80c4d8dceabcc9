#pragma once

// Text formats for trees.
//
// Edge list: first data line holds n, every further data line one "u v" pair.
// Blank lines and lines starting with '#' are ignored, so a file written by
// write_edge_list with trailing "# ..." annotations reads back unchanged.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "sombor/error.hpp"
#include "sombor/tree.hpp"

namespace sombor {

inline Tree read_edge_list(std::istream& in) {
    std::string line;
    std::int64_t n = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream fields(line);
        auto malformed = [&] {
            return Error(ErrorKind::invalid_argument, "malformed edge list at line " + std::to_string(line_no) +
                                                          ": '" + line + "'");
        };
        if (n < 0) {
            if (!(fields >> n) || n < 1) throw malformed();
        } else {
            std::int64_t u = 0, v = 0;
            if (!(fields >> u >> v)) throw malformed();
            if (u < 0 || v < 0 || u >= n || v >= n) {
                throw Error(ErrorKind::validation, "label out of range at line " + std::to_string(line_no));
            }
            edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
        }
        std::string rest;
        if (fields >> rest) throw malformed();
    }
    if (n < 0) throw Error(ErrorKind::invalid_argument, "edge list is empty");
    return Tree::validate(n, edges);
}

inline Tree parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return read_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
    out << t.vertex_count() << '\n';
    for (const Edge& e : t.edges()) out << e.u << ' ' << e.v << '\n';
}

/// Undirected DOT graph; vertices are annotated with their degree.
inline void write_dot(std::ostream& out, const Tree& t, const std::string& name = "tree") {
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < t.vertex_count(); ++v) {
        out << "  " << v << " [label=\"" << v << " (d=" << t.degree(v) << ")\"];\n";
    }
    for (const Edge& e : t.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
}

}  // namespace sombor
