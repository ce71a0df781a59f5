#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/graph.hpp"
#include "mpoly/mpoly.hpp"

// Generators for the recursive cactus families D_n, C_n, E_n and the
// octagon lattice G(p,q), together with their closed-form M-polynomials.
// The generated graphs and the closed forms are computed by entirely
// separate routes, so each can serve as an oracle for the other.

namespace mpoly {

struct RootedGraph {
    Graph graph;
    VertexId root;  // the attaching vertex
};

enum class Family { D, C, E };

inline Family family_from_string(const std::string& s) {
    if (s == "D" || s == "d") return Family::D;
    if (s == "C" || s == "c") return Family::C;
    if (s == "E" || s == "e") return Family::E;
    throw InvalidParameter("unknown family '" + s + "' (expected D, C or E)");
}

namespace detail {

// Builds D_n into the builder, vertices numbered in preorder starting at
// *next_id. Returns the id of the attaching vertex.
inline VertexId build_bethe_d(GraphBuilder& b, int n, VertexId& next_id) {
    VertexId root = next_id++;
    if (n == 1) {
        VertexId a = next_id++, m = next_id++, c = next_id++;
        b.add_edge(root, a).add_edge(a, m).add_edge(m, c).add_edge(c, root);
        return root;
    }
    // Fresh square: the new root plus three attaching vertices of D_{n-1}
    // copies, identified with the square's remaining corners.
    VertexId a = build_bethe_d(b, n - 1, next_id);
    VertexId m = build_bethe_d(b, n - 1, next_id);
    VertexId c = build_bethe_d(b, n - 1, next_id);
    b.add_edge(root, a).add_edge(a, m).add_edge(m, c).add_edge(c, root);
    return root;
}

}  // namespace detail

inline RootedGraph bethe_d(int n) {
    if (n < 1) throw InvalidParameter("bethe_d: n must be >= 1");
    GraphBuilder b;
    VertexId next_id = 0;
    VertexId root = detail::build_bethe_d(b, n, next_id);
    return {b.build(), root};
}

inline Graph bethe_c(int n) {
    if (n < 1) throw InvalidParameter("bethe_c: n must be >= 1");
    GraphBuilder b;
    VertexId next_id = 0;
    std::vector<VertexId> corners;
    for (int k = 0; k < 4; ++k) {
        if (n == 1)
            corners.push_back(next_id++);
        else
            corners.push_back(detail::build_bethe_d(b, n - 1, next_id));
    }
    for (int k = 0; k < 4; ++k) b.add_edge(corners[k], corners[(k + 1) % 4]);
    return b.build();
}

inline Graph bethe_e(int n) {
    if (n < 1) throw InvalidParameter("bethe_e: n must be >= 1");
    GraphBuilder b;
    VertexId next_id = 0;
    VertexId center, left, right;
    if (n == 1) {
        center = next_id++;
        left = next_id++;
        right = next_id++;
    } else {
        center = detail::build_bethe_d(b, n - 1, next_id);
        left = detail::build_bethe_d(b, n - 1, next_id);
        right = detail::build_bethe_d(b, n - 1, next_id);
    }
    b.add_edge(left, center).add_edge(center, right);
    return b.build();
}

/// The family's closed-form M-polynomial, computed arithmetically without
/// building any graph.
inline MPoly closed_form_mpoly(Family family, int n) {
    if (n < 1) throw InvalidParameter("closed_form_mpoly: n must be >= 1");
    const Rational p3 = rational_pow(Rational(3), n >= 2 ? n - 2 : 0);  // 3^{n-2}
    switch (family) {
        case Family::D:
            if (n == 1) return MPoly::from_terms({{2, 2, Rational(4)}});
            // 2*3^{n-1} x2y2 + (2*3^{n-1}+2) x2y4 + (2*3^{n-1}-4) x4y4
            return MPoly::from_terms({{2, 2, 6 * p3},
                                      {2, 4, 6 * p3 + 2},
                                      {4, 4, 6 * p3 - 4}});
        case Family::C:
            if (n == 1) return MPoly::from_terms({{2, 2, Rational(4)}});
            return MPoly::from_terms({{2, 2, 8 * p3},
                                      {2, 4, 8 * p3},
                                      {4, 4, 8 * p3 - 4}});
        case Family::E:
            if (n == 1) return MPoly::from_terms({{1, 2, Rational(2)}});
            if (n == 2)
                return MPoly::from_terms({{2, 2, Rational(6)},
                                          {2, 3, Rational(4)},
                                          {2, 4, Rational(2)},
                                          {3, 4, Rational(2)}});
            return MPoly::from_terms({{2, 2, 6 * p3},
                                      {2, 4, 6 * p3},
                                      {3, 4, Rational(6)},
                                      {4, 4, 6 * p3 - 10}});
    }
    throw InvalidParameter("closed_form_mpoly: bad family");
}

struct LatticeParams {
    int p;  // rows of octagons
    int q;  // columns of octagons
};

struct FaceCounts {
    long octagons;
    long hexagons;
    long pentagons;
    long total;  // inner faces plus the outer face
};

inline FaceCounts face_counts(const LatticeParams& params) {
    const long p = params.p, q = params.q;
    if (p < 1 || q < 1) throw InvalidParameter("face_counts: need p, q >= 1");
    FaceCounts fc;
    fc.octagons = p * q;
    fc.hexagons = 2 * q * (p + 1);
    fc.pentagons = 2 * p * (q - 1);
    fc.total = fc.octagons + fc.hexagons + fc.pentagons + 1;
    return fc;
}

namespace detail {

// Lattice vertices live on a half-integer grid; coordinates are doubled so
// that they stay integral. Ids are assigned in first-touch order along the
// construction paths, which is deterministic.
class CoordGraph {
public:
    VertexId vertex(int x2, int y2) {
        auto [it, inserted] = ids_.try_emplace({x2, y2}, next_);
        if (inserted) ++next_;
        return it->second;
    }

    void path(const std::vector<std::pair<int, int>>& pts) {
        for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
            VertexId u = vertex(pts[k].first, pts[k].second);
            VertexId v = vertex(pts[k + 1].first, pts[k + 1].second);
            if (!builder_.has_edge(u, v)) builder_.add_edge(u, v);
        }
    }

    Graph build() const { return builder_.build(); }

private:
    std::map<std::pair<int, int>, VertexId> ids_;
    VertexId next_ = 0;
    GraphBuilder builder_;
};

}  // namespace detail

/// p x q octagon lattice with hexagonal boundary faces and pentagonal
/// inter-column faces. Columns are 4 units wide, octagon rows 4 units tall;
/// all coordinates below are doubled to keep them integral.
inline Graph lattice(const LatticeParams& params) {
    const int p = params.p, q = params.q;
    if (p < 1 || q < 1) throw InvalidParameter("lattice: need p, q >= 1");
    detail::CoordGraph cg;
    using Pt = std::pair<int, int>;

    // Vertical zigzag chains bounding each column of octagons.
    for (int c = 0; c < q; ++c) {
        const int X = 8 * c;
        std::vector<Pt> left{{X + 2, 0}};
        std::vector<Pt> right{{X + 2, 0}};
        for (int r = 0; r < p; ++r) {
            const int Y = 8 * r;
            left.insert(left.end(), {{X, Y + 1}, {X, Y + 3}, {X + 2, Y + 4},
                                     {X + 1, Y + 6}, {X + 2, Y + 8}});
            right.insert(right.end(), {{X + 4, Y + 1}, {X + 4, Y + 3}, {X + 6, Y + 4},
                                       {X + 7, Y + 6}, {X + 6, Y + 8}});
        }
        const int Y = 8 * p;
        left.insert(left.end(), {{X, Y + 1}, {X, Y + 3}, {X + 2, Y + 4}});
        right.insert(right.end(), {{X + 4, Y + 1}, {X + 4, Y + 3}, {X + 2, Y + 4}});
        cg.path(left);
        cg.path(right);
    }

    // Horizontal zigzag rows: each of the p+1 hexagon bands has a lower and
    // an upper one, alternating between even and odd x.
    for (int b = 0; b <= p; ++b) {
        const int Y = 8 * b;
        std::vector<Pt> lower, upper;
        for (int k = 0; k <= 4 * q; ++k) {
            lower.push_back({2 * k, k % 2 == 0 ? Y + 1 : Y});
            upper.push_back({2 * k, k % 2 == 0 ? Y + 3 : Y + 4});
        }
        cg.path(lower);
        cg.path(upper);
    }

    // Short horizontal edges closing the pentagons between adjacent columns.
    for (int r = 0; r < p; ++r)
        for (int g = 1; g < q; ++g)
            cg.path({{8 * g - 1, 8 * r + 6}, {8 * g + 1, 8 * r + 6}});

    // Short vertical edges closing the hexagons on the right boundary.
    for (int b = 0; b <= p; ++b)
        cg.path({{8 * q, 8 * b + 1}, {8 * q, 8 * b + 3}});

    return cg.build();
}

/// Closed-form M-polynomial of the lattice.
inline MPoly lattice_mpoly(const LatticeParams& params) {
    const long p = params.p, q = params.q;
    if (p < 1 || q < 1) throw InvalidParameter("lattice_mpoly: need p, q >= 1");
    return MPoly::from_terms({{2, 2, Rational(2 * p + 6)},
                              {2, 3, Rational(8 * p + 8 * q - 4)},
                              {3, 3, Rational(15 * p * q - 10 * p + 2 * q - 1)}});
}

}  // namespace mpoly
