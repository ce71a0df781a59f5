#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/mpoly.hpp"

namespace mpoly {

using VertexId = int;
using Edge = std::pair<VertexId, VertexId>;  // normalized first < second

/// m_{i,j} table: edge count per unordered endpoint-degree pair, i <= j.
using EdgeTypeCounts = std::map<std::pair<int, int>, long>;

/// Simple undirected graph, immutable once built. Vertex ids are arbitrary
/// nonnegative integers, not required contiguous.
class Graph {
public:
    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    int degree(VertexId v) const {
        auto it = degrees_.find(v);
        if (it == degrees_.end())
            throw UnknownVertex("degree: vertex " + std::to_string(v) + " not in graph");
        return it->second;
    }

    bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }

    /// {degree -> number of vertices of that degree}, degree 0 included.
    std::map<int, long> degree_histogram() const {
        std::map<int, long> hist;
        for (VertexId v : vertices_) ++hist[degrees_.at(v)];
        return hist;
    }

    EdgeTypeCounts edge_type_counts() const {
        EdgeTypeCounts counts;
        for (const auto& [u, v] : edges_) {
            int a = degrees_.at(u), b = degrees_.at(v);
            if (a > b) std::swap(a, b);
            ++counts[{a, b}];
        }
        return counts;
    }

    MPoly m_polynomial() const {
        std::vector<MPoly::Term> terms;
        for (const auto& [type, count] : edge_type_counts())
            terms.push_back({type.first, type.second, Rational(count)});
        return MPoly::from_terms(terms);
    }

    bool is_connected() const {
        if (vertices_.empty()) return true;
        std::set<VertexId> seen;
        std::vector<VertexId> stack{*vertices_.begin()};
        seen.insert(stack.back());
        std::multimap<VertexId, VertexId> adj;
        for (const auto& [u, v] : edges_) {
            adj.emplace(u, v);
            adj.emplace(v, u);
        }
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            auto [lo, hi] = adj.equal_range(v);
            for (auto it = lo; it != hi; ++it)
                if (seen.insert(it->second).second) stack.push_back(it->second);
        }
        return seen.size() == vertices_.size();
    }

private:
    friend class GraphBuilder;
    std::set<VertexId> vertices_;
    std::set<Edge> edges_;
    std::map<VertexId, int> degrees_;
};

class GraphBuilder {
public:
    GraphBuilder& add_vertex(VertexId v) {
        if (v < 0) throw InvalidParameter("add_vertex: negative vertex id");
        vertices_.insert(v);
        return *this;
    }

    /// Endpoints are declared implicitly. Self-loops and duplicate edges
    /// are rejected.
    GraphBuilder& add_edge(VertexId u, VertexId v) {
        if (u == v)
            throw InvalidParameter("add_edge: self-loop at vertex " + std::to_string(u));
        add_vertex(u);
        add_vertex(v);
        if (u > v) std::swap(u, v);
        if (!edges_.insert({u, v}).second)
            throw InvalidParameter("add_edge: duplicate edge " + std::to_string(u) +
                                   " " + std::to_string(v));
        return *this;
    }

    bool has_edge(VertexId u, VertexId v) const {
        if (u > v) std::swap(u, v);
        return edges_.count({u, v}) > 0;
    }

    Graph build() const {
        Graph g;
        g.vertices_ = vertices_;
        g.edges_ = edges_;
        for (VertexId v : vertices_) g.degrees_[v] = 0;
        for (const auto& [u, v] : edges_) {
            ++g.degrees_[u];
            ++g.degrees_[v];
        }
        return g;
    }

private:
    std::set<VertexId> vertices_;
    std::set<Edge> edges_;
};

}  // namespace mpoly
