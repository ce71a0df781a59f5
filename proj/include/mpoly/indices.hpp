#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/generators.hpp"
#include "mpoly/graph.hpp"
#include "mpoly/mpoly.hpp"
#include "mpoly/operators.hpp"

// Bond-incident-degree index registry. Each index carries both its
// edge-weight function f(i,j) and its operator pipeline, so every value can
// be computed two independent ways: directly as sum m_{i,j} f(i,j), or by
// running the pipeline over the M-polynomial and evaluating at x = y = 1.

namespace mpoly {

enum class OpStep { Dx, Dy, Sx, Sy, J, Q };

struct PipelineStep {
    OpStep op;
    int alpha = 0;  // used by Q only
};

/// One summand of a pipeline: coeff * (composition of steps, applied
/// front to back, i.e. steps[0] runs first).
struct PipelineTerm {
    Rational coeff;
    std::vector<PipelineStep> steps;
};

struct IndexDef {
    std::string name;
    std::function<Rational(int, int)> weight;  // f(i,j); throws UndefinedWeight
    std::vector<PipelineTerm> pipeline;
};

struct IndexValue {
    Rational value;
    std::string index;
    enum class Source { direct, via_operators } source;
};

inline MPoly apply_pipeline_term(const PipelineTerm& term, const MPoly& m) {
    MPoly p = m;
    for (const auto& step : term.steps) {
        switch (step.op) {
            case OpStep::Dx: p = op_dx(p); break;
            case OpStep::Dy: p = op_dy(p); break;
            case OpStep::Sx: p = op_sx(p); break;
            case OpStep::Sy: p = op_sy(p); break;
            case OpStep::J: p = op_j(p); break;
            case OpStep::Q: p = op_q(p, step.alpha); break;
        }
    }
    return scale(p, term.coeff);
}

inline IndexValue compute_via_operators(const MPoly& m, const IndexDef& idx) {
    MPoly acc;
    for (const auto& term : idx.pipeline) acc = add(acc, apply_pipeline_term(term, m));
    return {acc.eval(1, 1), idx.name, IndexValue::Source::via_operators};
}

inline IndexValue compute_direct(const EdgeTypeCounts& counts, const IndexDef& idx) {
    Rational total(0);
    for (const auto& [type, count] : counts)
        total += Rational(count) * idx.weight(type.first, type.second);
    return {total, idx.name, IndexValue::Source::direct};
}

inline IndexValue compute_direct(const MPoly& m, const IndexDef& idx) {
    Rational total(0);
    for (const auto& [key, c] : m.terms()) total += c * idx.weight(key.first, key.second);
    return {total, idx.name, IndexValue::Source::direct};
}

namespace detail {

inline std::vector<PipelineStep> repeat(OpStep op, int times) {
    return std::vector<PipelineStep>(static_cast<std::size_t>(times), PipelineStep{op, 0});
}

inline std::vector<PipelineStep> concat(std::vector<PipelineStep> a,
                                        const std::vector<PipelineStep>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace detail

/// The nine registry indices; the two general Randic entries use the given
/// alpha (alpha >= 1).
inline std::vector<IndexDef> registry(int alpha = 1) {
    if (alpha < 1) throw InvalidAlpha("registry: alpha must be >= 1");
    using detail::concat;
    using detail::repeat;
    std::vector<IndexDef> defs;

    defs.push_back({"zagreb1",
                    [](int i, int j) { return Rational(i + j); },
                    {{Rational(1), {{OpStep::Dx}}}, {Rational(1), {{OpStep::Dy}}}}});

    defs.push_back({"zagreb2",
                    [](int i, int j) { return Rational(i) * j; },
                    {{Rational(1), {{OpStep::Dy}, {OpStep::Dx}}}}});

    defs.push_back({"modified_zagreb2",
                    [](int i, int j) { return Rational(1) / (Rational(i) * j); },
                    {{Rational(1), {{OpStep::Sy}, {OpStep::Sx}}}}});

    defs.push_back({"randic_general",
                    [alpha](int i, int j) {
                        return rational_pow(Rational(i) * j, alpha);
                    },
                    {{Rational(1), concat(repeat(OpStep::Dy, alpha), repeat(OpStep::Dx, alpha))}}});

    defs.push_back({"randic_inverse_general",
                    [alpha](int i, int j) {
                        return rational_pow(Rational(i) * j, -alpha);
                    },
                    {{Rational(1), concat(repeat(OpStep::Sy, alpha), repeat(OpStep::Sx, alpha))}}});

    defs.push_back({"symmetric_division",
                    [](int i, int j) {
                        return (Rational(i) * i + Rational(j) * j) / (Rational(i) * j);
                    },
                    {{Rational(1), {{OpStep::Sy}, {OpStep::Dx}}},
                     {Rational(1), {{OpStep::Sx}, {OpStep::Dy}}}}});

    defs.push_back({"harmonic",
                    [](int i, int j) { return Rational(2) / (i + j); },
                    {{Rational(2), {{OpStep::J}, {OpStep::Sx}}}}});

    defs.push_back({"inverse_sum",
                    [](int i, int j) { return Rational(i) * j / (i + j); },
                    {{Rational(1),
                      {{OpStep::Dy}, {OpStep::Dx}, {OpStep::J}, {OpStep::Sx}}}}});

    // f(1,1) = (1/0)^3 is genuinely undefined; see compute_direct.
    defs.push_back({"augmented_zagreb",
                    [](int i, int j) {
                        if (i + j == 2)
                            throw UndefinedWeight(
                                "augmented_zagreb: f(1,1) is undefined");
                        return rational_pow(Rational(i) * j / (i + j - 2), 3);
                    },
                    {{Rational(1),
                      concat(concat(repeat(OpStep::Dy, 3), repeat(OpStep::Dx, 3)),
                             {{OpStep::J}, {OpStep::Q, -2},
                              {OpStep::Sx}, {OpStep::Sx}, {OpStep::Sx}})}}});

    return defs;
}

inline IndexDef find_index(const std::string& name, int alpha = 1) {
    for (auto& def : registry(alpha))
        if (def.name == name) return def;
    throw UnsupportedIndex("unknown index '" + name + "'");
}

/// Names of the six indices with closed forms for the cactus families.
inline const std::vector<std::string>& closed_form_indices() {
    static const std::vector<std::string> names = {
        "zagreb1", "zagreb2", "modified_zagreb2",
        "symmetric_division", "harmonic", "inverse_sum"};
    return names;
}

/// Closed-form index value for family D_n / C_n / E_n, n >= 2. The E_n
/// forms are derived from the n >= 3 polynomial shape; for E_2 compare
/// against a directly computed value before trusting them.
inline Rational closed_form(Family family, const std::string& index, int n) {
    if (n < 2) throw OutOfRange("closed_form: defined for n >= 2");
    const Rational p1 = rational_pow(Rational(3), n - 1);
    const Rational p2 = rational_pow(Rational(3), n - 2);
    const Rational p3 = rational_pow(Rational(3), n - 3);
    switch (family) {
        case Family::D:
            if (index == "zagreb1") return 12 * p1 * 3 - 20;  // 4*3^{n+1} - 20
            if (index == "zagreb2") return 56 * p1 - 48;
            if (index == "modified_zagreb2") return Rational(7, 8) * p1;
            if (index == "symmetric_division") return 13 * p1 - 3;
            if (index == "harmonic") return Rational(13, 2) * p2 - Rational(1, 3);
            if (index == "inverse_sum") return 26 * p2 - Rational(16, 3);
            break;
        case Family::C:
            if (index == "zagreb1") return 16 * p1 * 3 - 32;  // 16*3^n - 32
            if (index == "zagreb2") return 224 * p2 - 64;
            if (index == "modified_zagreb2") return Rational(7, 2) * p2 - Rational(1, 4);
            if (index == "symmetric_division") return 52 * p2 - 8;
            if (index == "harmonic") return 26 * p3 - 1;
            if (index == "inverse_sum") return 104 * p3 - 8;
            break;
        case Family::E:
            if (index == "zagreb1") return 12 * p1 * 3 - 38;  // 4*3^{n+1} - 38
            if (index == "zagreb2") return 56 * p1 - 88;
            if (index == "modified_zagreb2") return Rational(7, 8) * p1 - Rational(1, 8);
            if (index == "symmetric_division") return 13 * p1 - Rational(15, 2);
            if (index == "harmonic") return Rational(13, 2) * p2 - Rational(11, 14);
            if (index == "inverse_sum") return 26 * p2 - Rational(68, 7);
            break;
    }
    throw UnsupportedIndex("closed_form: no closed form for index '" + index + "'");
}

}  // namespace mpoly
