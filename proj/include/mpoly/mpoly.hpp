#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mpoly/errors.hpp"
#include "mpoly/rational.hpp"

namespace mpoly {

/// Sparse bivariate polynomial over exact rationals, keyed by
/// (x-exponent, y-exponent). Canonical: no zero coefficient is ever stored,
/// so equality of term maps is equality of polynomials. Immutable after
/// construction; safe to share across threads.
class MPoly {
public:
    using Exponents = std::pair<int, int>;
    using TermMap = std::map<Exponents, Rational>;

    struct Term {
        int i;
        int j;
        Rational coeff;
    };

    MPoly() = default;

    static MPoly from_terms(const std::vector<Term>& terms) {
        TermMap acc;
        for (const auto& t : terms) {
            if (t.i < 0 || t.j < 0)
                throw ExponentError("from_terms: negative exponent");
            acc[{t.i, t.j}] += t.coeff;
        }
        return MPoly(std::move(acc));
    }

    static MPoly monomial(int i, int j, Rational coeff = Rational(1)) {
        return from_terms({{i, j, std::move(coeff)}});
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(int i, int j) const {
        auto it = terms_.find({i, j});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    friend MPoly add(const MPoly& a, const MPoly& b) {
        TermMap acc = a.terms_;
        for (const auto& [key, c] : b.terms_) acc[key] += c;
        return MPoly(std::move(acc));
    }

    friend MPoly scale(const MPoly& a, const Rational& c) {
        TermMap acc;
        if (c != 0)
            for (const auto& [key, v] : a.terms_) acc[key] = v * c;
        return MPoly(std::move(acc));
    }

    Rational eval(const Rational& x0, const Rational& y0) const {
        Rational total(0);
        for (const auto& [key, c] : terms_)
            total += c * rational_pow(x0, key.first) * rational_pow(y0, key.second);
        return total;
    }

    bool operator==(const MPoly& other) const = default;

    /// Canonical rendering: terms sorted by (i, then j) ascending,
    /// e.g. `6 x^2 y^2 + 8 x^2 y^4`.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (const auto& [key, c] : terms_) {
            Rational shown = c;
            if (first) {
                if (shown < 0) {
                    out << "- ";
                    shown = -shown;
                }
            } else {
                out << (shown < 0 ? " - " : " + ");
                if (shown < 0) shown = -shown;
            }
            first = false;
            const auto& [i, j] = key;
            bool has_vars = i > 0 || j > 0;
            if (shown != 1 || !has_vars) {
                out << to_string(shown);
                if (has_vars) out << ' ';
            }
            if (i > 0) {
                out << "x";
                if (i != 1) out << "^" << i;
                if (j > 0) out << ' ';
            }
            if (j > 0) {
                out << "y";
                if (j != 1) out << "^" << j;
            }
        }
        return out.str();
    }

private:
    explicit MPoly(TermMap terms) : terms_(std::move(terms)) { prune(); }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }

    TermMap terms_;
};

}  // namespace mpoly
