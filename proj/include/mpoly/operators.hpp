#pragma once

#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/mpoly.hpp"

// The operator calculus on M-polynomials: D_x, D_y (degree-weighting
// derivatives x d/dx, y d/dy), S_x, S_y (exponent-dividing integrals),
// J (diagonal substitution y -> x) and Q_alpha (x-exponent shift).
// All pure; all results canonical.

namespace mpoly {

inline MPoly op_dx(const MPoly& p) {
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms())
        out.push_back({key.first, key.second, c * key.first});
    return MPoly::from_terms(out);
}

inline MPoly op_dy(const MPoly& p) {
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms())
        out.push_back({key.first, key.second, c * key.second});
    return MPoly::from_terms(out);
}

// S_x integrates f(t,y)/t from 0 to x; an x-exponent-0 term makes the
// integral diverge, which is a hard error rather than a dropped term.
inline MPoly op_sx(const MPoly& p) {
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms()) {
        if (key.first == 0)
            throw DivergentIntegral("op_sx: term with x-exponent 0");
        out.push_back({key.first, key.second, c / key.first});
    }
    return MPoly::from_terms(out);
}

inline MPoly op_sy(const MPoly& p) {
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms()) {
        if (key.second == 0)
            throw DivergentIntegral("op_sy: term with y-exponent 0");
        out.push_back({key.first, key.second, c / key.second});
    }
    return MPoly::from_terms(out);
}

/// J: substitute y = x; colliding exponents are summed.
inline MPoly op_j(const MPoly& p) {
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms())
        out.push_back({key.first + key.second, 0, c});
    return MPoly::from_terms(out);
}

/// Q_alpha: multiply by x^alpha, alpha != 0.
inline MPoly op_q(const MPoly& p, int alpha) {
    if (alpha == 0) throw InvalidAlpha("op_q: alpha must be nonzero");
    std::vector<MPoly::Term> out;
    for (const auto& [key, c] : p.terms()) {
        if (key.first + alpha < 0)
            throw ExponentError("op_q: shift yields negative exponent");
        out.push_back({key.first + alpha, key.second, c});
    }
    return MPoly::from_terms(out);
}

}  // namespace mpoly
