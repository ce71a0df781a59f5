#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "mpoly/errors.hpp"
#include "mpoly/graph.hpp"

// Edge-list text format. ASCII, whitespace separated, one record per line:
//   u v      an edge
//   u        declares vertex u (for isolated vertices)
//   # ...    comment to end of line
// Duplicate edges and self-loops are rejected.

namespace mpoly {

inline Graph parse_edge_list(std::istream& in) {
    GraphBuilder builder;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        auto fail = [&](const std::string& what) {
            throw ParseError("edge list line " + std::to_string(lineno) + ": " + what);
        };
        long u, v;
        if (!(fields >> u)) {
            fields.clear();
            std::string junk;
            if (fields >> junk) fail("bad token '" + junk + "'");
            continue;  // blank or comment-only line
        }
        if (u < 0) fail("negative vertex id");
        if (fields >> v) {
            if (v < 0) fail("negative vertex id");
            std::string extra;
            if (fields >> extra) fail("trailing token '" + extra + "'");
            try {
                builder.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
            } catch (const InvalidParameter& e) {
                fail(e.what());
            }
        } else {
            fields.clear();
            std::string extra;
            if (fields >> extra) fail("bad token '" + extra + "'");
            builder.add_vertex(static_cast<VertexId>(u));
        }
    }
    return builder.build();
}

inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    for (VertexId v : g.vertices())
        if (g.degree(v) == 0) out << v << '\n';
}

}  // namespace mpoly
