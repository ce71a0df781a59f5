#pragma once

#include <algorithm>
#include <array>
#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/rational.hpp"

// Degree bookkeeping for chemical graphs (maximum degree 4): the linear
// relations between vertex counts n_i, edge-type counts m_{i,j}, vertex and
// edge totals, optionally extended with Euler's face-count formula for
// plane graphs. Known values pin variables; the rest is solved by exact
// Gaussian elimination.

namespace mpoly {

inline const std::array<std::string, 17>& gutman_variables() {
    static const std::array<std::string, 17> names = {
        "n",   "m",   "f",   "n1",  "n2",  "n3",  "n4",  "m11", "m12",
        "m13", "m14", "m22", "m23", "m24", "m33", "m34", "m44"};
    return names;
}

inline bool is_gutman_variable(const std::string& name) {
    const auto& vars = gutman_variables();
    return std::find(vars.begin(), vars.end(), name) != vars.end();
}

struct GutmanSystem {
    std::map<std::string, Rational> knowns;
    bool use_euler = false;
};

struct LinearEquation {
    std::string label;
    std::map<std::string, Rational> coeffs;  // LHS over variable names
    Rational rhs;                            // constant right-hand side
};

inline void validate(const GutmanSystem& sys) {
    for (const auto& [name, value] : sys.knowns) {
        if (!is_gutman_variable(name))
            throw InvalidParameter("unknown variable '" + name + "'");
        if (value < 0)
            throw InvalidParameter("known value for '" + name + "' is negative");
    }
}

/// The degree/edge-type relations, the definitional edge sum, and (when
/// enabled) Euler's formula, as equations over the 17 variable names.
inline std::vector<LinearEquation> build_equations(const GutmanSystem& sys) {
    validate(sys);
    std::vector<LinearEquation> eqs;
    eqs.push_back({"vertex_sum",
                   {{"n1", 1}, {"n2", 1}, {"n3", 1}, {"n4", 1}, {"n", -1}},
                   0});
    eqs.push_back({"degree1",
                   {{"m12", 1}, {"m13", 1}, {"m14", 1}, {"n1", -1}},
                   0});
    eqs.push_back({"degree2",
                   {{"m12", 1}, {"m22", 2}, {"m23", 1}, {"m24", 1}, {"n2", -2}},
                   0});
    eqs.push_back({"degree3",
                   {{"m13", 1}, {"m23", 1}, {"m33", 2}, {"m34", 1}, {"n3", -3}},
                   0});
    eqs.push_back({"degree4",
                   {{"m14", 1}, {"m24", 1}, {"m34", 1}, {"m44", 2}, {"n4", -4}},
                   0});
    eqs.push_back({"handshake",
                   {{"n1", 1}, {"n2", 2}, {"n3", 3}, {"n4", 4}, {"m", -2}},
                   0});
    LinearEquation edge_sum{"edge_sum", {{"m", -1}}, 0};
    LinearEquation euler{"euler", {{"f", -1}}, -2};
    for (const auto& name : gutman_variables()) {
        if (name.size() == 3 && name[0] == 'm') {
            edge_sum.coeffs[name] = 1;
            euler.coeffs[name] = 1;
        }
        if (name.size() == 2 && name[0] == 'n') euler.coeffs[name] = -1;
    }
    eqs.push_back(edge_sum);
    if (sys.use_euler) eqs.push_back(euler);
    return eqs;
}

struct Solution {
    enum class Status { unique, underdetermined, inconsistent } status;
    std::map<std::string, Rational> values;  // knowns plus solved unknowns
    std::vector<std::string> free_variables;
    std::string note;  // reason detail for non-unique outcomes
};

namespace detail {

// Reduced row echelon form in place; returns pivot column per row. Only
// the first `pivot_cols` columns are eligible as pivots, so an augmented
// right-hand-side column is never pivoted on.
inline std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows,
                                     std::size_t pivot_cols = SIZE_MAX) {
    std::vector<std::size_t> pivots;
    if (rows.empty()) return pivots;
    const std::size_t width = rows[0].size();
    const std::size_t cols = std::min(pivot_cols, width);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        const Rational inv = Rational(1) / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0) continue;
            const Rational factor = rows[k][c];
            for (std::size_t c2 = 0; c2 < width; ++c2)
                rows[k][c2] -= factor * rows[r][c2];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace detail

inline Solution solve(const GutmanSystem& sys) {
    const auto eqs = build_equations(sys);

    std::vector<std::string> unknowns;
    for (const auto& name : gutman_variables())
        if (!sys.knowns.count(name)) unknowns.push_back(name);
    // With Euler disabled, f is unconstrained; leaving it among the
    // unknowns would make every system underdetermined.
    if (!sys.use_euler)
        std::erase(unknowns, std::string("f"));

    std::map<std::string, std::size_t> column;
    for (std::size_t k = 0; k < unknowns.size(); ++k) column[unknowns[k]] = k;

    // Augmented matrix: unknown columns | rhs.
    std::vector<std::vector<Rational>> rows;
    for (const auto& eq : eqs) {
        std::vector<Rational> row(unknowns.size() + 1, Rational(0));
        Rational rhs = eq.rhs;
        for (const auto& [name, coeff] : eq.coeffs) {
            auto it = sys.knowns.find(name);
            if (it != sys.knowns.end())
                rhs -= coeff * it->second;
            else
                row[column.at(name)] = coeff;
        }
        row.back() = rhs;
        rows.push_back(std::move(row));
    }

    const auto pivots = detail::rref(rows, unknowns.size());

    Solution sol;
    sol.values = sys.knowns;
    for (std::size_t k = pivots.size(); k < rows.size(); ++k) {
        // rref leaves zero coefficient rows at the bottom
        if (rows[k].back() != 0) {
            sol.status = Solution::Status::inconsistent;
            sol.note = "equations are contradictory";
            return sol;
        }
    }
    if (pivots.size() < unknowns.size()) {
        sol.status = Solution::Status::underdetermined;
        std::vector<bool> pivotal(unknowns.size(), false);
        for (std::size_t c : pivots)
            if (c < unknowns.size()) pivotal[c] = true;
        for (std::size_t k = 0; k < unknowns.size(); ++k)
            if (!pivotal[k]) sol.free_variables.push_back(unknowns[k]);
        sol.note = "not enough known values to pin every variable";
        return sol;
    }

    for (std::size_t r = 0; r < pivots.size(); ++r)
        sol.values[unknowns[pivots[r]]] = rows[r].back();

    // Post-checks: the algebra may be consistent while the solution cannot
    // describe any graph.
    for (const auto& name : unknowns) {
        const Rational& v = sol.values.at(name);
        if (v < 0) {
            sol.status = Solution::Status::inconsistent;
            sol.note = "unique algebraic solution has " + name + " = " +
                       to_string(v) + " < 0";
            return sol;
        }
        if (!is_integer(v)) {
            sol.status = Solution::Status::inconsistent;
            sol.note = "unique algebraic solution has non-integer " + name +
                       " = " + to_string(v);
            return sol;
        }
    }
    sol.status = Solution::Status::unique;
    return sol;
}

struct IndependenceReport {
    int rank_degree_relations;  // rank of the five degree/vertex relations
    bool handshake_dependent;   // handshake lies in their row span
    bool euler_independent;     // Euler's relation does not
};

/// Rank facts about the relations, computed in the connected chemical-graph
/// setting (m eliminated through the edge sum, m11 = 0).
inline IndependenceReport verify_independence() {
    const std::vector<std::string> vars = {"n",   "f",   "n1",  "n2",  "n3",
                                           "n4",  "m12", "m13", "m14", "m22",
                                           "m23", "m24", "m33", "m34", "m44"};
    std::map<std::string, std::size_t> column;
    for (std::size_t k = 0; k < vars.size(); ++k) column[vars[k]] = k;

    auto row_of = [&](const std::map<std::string, Rational>& coeffs) {
        std::vector<Rational> row(vars.size(), Rational(0));
        for (const auto& [name, c] : coeffs) row[column.at(name)] = c;
        return row;
    };

    std::vector<std::vector<Rational>> base = {
        row_of({{"n1", 1}, {"n2", 1}, {"n3", 1}, {"n4", 1}, {"n", -1}}),
        row_of({{"m12", 1}, {"m13", 1}, {"m14", 1}, {"n1", -1}}),
        row_of({{"m12", 1}, {"m22", 2}, {"m23", 1}, {"m24", 1}, {"n2", -2}}),
        row_of({{"m13", 1}, {"m23", 1}, {"m33", 2}, {"m34", 1}, {"n3", -3}}),
        row_of({{"m14", 1}, {"m24", 1}, {"m34", 1}, {"m44", 2}, {"n4", -4}}),
    };
    // Handshake with 2m rewritten through the edge sum.
    auto handshake = row_of({{"n1", 1},  {"n2", 2},  {"n3", 3},  {"n4", 4},
                             {"m12", -2}, {"m13", -2}, {"m14", -2}, {"m22", -2},
                             {"m23", -2}, {"m24", -2}, {"m33", -2}, {"m34", -2},
                             {"m44", -2}});
    auto euler = row_of({{"m12", 1}, {"m13", 1}, {"m14", 1}, {"m22", 1},
                         {"m23", 1}, {"m24", 1}, {"m33", 1}, {"m34", 1},
                         {"m44", 1}, {"n1", -1}, {"n2", -1}, {"n3", -1},
                         {"n4", -1}, {"f", -1}});

    auto rank_of = [](std::vector<std::vector<Rational>> rows) {
        return static_cast<int>(detail::rref(rows).size());
    };

    IndependenceReport report;
    report.rank_degree_relations = rank_of(base);

    auto with_handshake = base;
    with_handshake.push_back(handshake);
    report.handshake_dependent =
        rank_of(with_handshake) == report.rank_degree_relations;

    auto with_euler = with_handshake;
    with_euler.push_back(euler);
    report.euler_independent = rank_of(with_euler) == rank_of(with_handshake) + 1;
    return report;
}

/// Text format: `variable = value` lines, an `euler on|off` directive,
/// `#` comments.
inline GutmanSystem parse_gutman_system(std::istream& in) {
    GutmanSystem sys;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        auto fail = [&](const std::string& what) {
            throw ParseError("system line " + std::to_string(lineno) + ": " + what);
        };
        if (first == "euler") {
            std::string mode;
            if (!(fields >> mode) || (mode != "on" && mode != "off"))
                fail("expected 'euler on' or 'euler off'");
            sys.use_euler = mode == "on";
        } else {
            std::string eq, value;
            if (!(fields >> eq >> value) || eq != "=")
                fail("expected '<variable> = <value>'");
            if (!is_gutman_variable(first)) fail("unknown variable '" + first + "'");
            if (sys.knowns.count(first)) fail("duplicate variable '" + first + "'");
            try {
                sys.knowns[first] = parse_rational(value);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            if (sys.knowns[first] < 0) fail("negative value for '" + first + "'");
        }
        std::string extra;
        if (fields >> extra) fail("trailing token '" + extra + "'");
    }
    return sys;
}

inline GutmanSystem parse_gutman_system(const std::string& text) {
    std::istringstream in(text);
    return parse_gutman_system(in);
}

}  // namespace mpoly
