#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mpoly/mpoly.hpp"
#include "mpoly/operators.hpp"
#include "test_util.hpp"

using namespace mpoly;

TEST_CASE("from_terms builds canonical polynomials") {
    auto p = MPoly::from_terms({{2, 2, Rational(4)}});
    CHECK(p.coeff(2, 2) == 4);
    CHECK(p.term_count() == 1);
    CHECK(p.str() == "4 x^2 y^2");

    CHECK(MPoly::from_terms({}).is_zero());
    CHECK(MPoly::from_terms({{1, 1, Rational(2)}, {1, 1, Rational(-2)}}).is_zero());

    CHECK_THROWS_AS(MPoly::from_terms({{-1, 0, Rational(1)}}), ExponentError);
}

TEST_CASE("add and scale are exact and canonical") {
    auto x2y2 = MPoly::monomial(2, 2);
    CHECK(add(x2y2, x2y2) == MPoly::monomial(2, 2, Rational(2)));
    CHECK(scale(MPoly::monomial(2, 2, Rational(4)), Rational(0)).is_zero());
    auto p = MPoly::from_terms({{2, 2, Rational(2)}, {2, 4, Rational(1)}});
    CHECK(add(p, MPoly::monomial(2, 4, Rational(-1))) ==
          MPoly::monomial(2, 2, Rational(2)));
}

TEST_CASE("D_x and D_y weight terms by their exponents") {
    CHECK(op_dx(MPoly::monomial(2, 2, Rational(4))) ==
          MPoly::monomial(2, 2, Rational(8)));
    CHECK(op_dx(MPoly::monomial(0, 5, Rational(3))).is_zero());

    // Second Zagreb of the 4-cycle through the calculus: D_y D_x (4x^2y^2)
    // evaluated at (1,1) must equal the brute-force sum of d_u d_v.
    auto m_c4 = testutil::cycle_graph(4).m_polynomial();
    auto dxdy = op_dy(op_dx(m_c4));
    CHECK(dxdy == MPoly::monomial(2, 2, Rational(16)));
    Rational brute(0);
    auto c4 = testutil::cycle_graph(4);
    for (const auto& [u, v] : c4.edges()) brute += Rational(c4.degree(u)) * c4.degree(v);
    CHECK(dxdy.eval(1, 1) == brute);
}

TEST_CASE("S_x divides by the exponent and rejects divergent terms") {
    CHECK(op_sx(MPoly::monomial(2, 2, Rational(4))) ==
          MPoly::monomial(2, 2, Rational(2)));
    CHECK_THROWS_AS(op_sx(MPoly::monomial(0, 2, Rational(3))), DivergentIntegral);
    CHECK_THROWS_AS(op_sy(MPoly::monomial(2, 0, Rational(3))), DivergentIntegral);

    // M(D_3) = 18x2y2 + 20x2y4 + 14x4y4
    auto m_d3 = MPoly::from_terms(
        {{2, 2, Rational(18)}, {2, 4, Rational(20)}, {4, 4, Rational(14)}});
    auto expected = MPoly::from_terms(
        {{2, 2, Rational(9)}, {2, 4, Rational(10)}, {4, 4, Rational(7, 2)}});
    CHECK(op_sx(m_d3) == expected);
}

TEST_CASE("J substitutes y = x and merges collisions") {
    CHECK(op_j(MPoly::monomial(2, 2, Rational(4))) == MPoly::monomial(4, 0, Rational(4)));
    CHECK(op_j(MPoly::from_terms({{1, 3, Rational(1)}, {3, 1, Rational(1)}})) ==
          MPoly::monomial(4, 0, Rational(2)));

    auto m_d2 = MPoly::from_terms(
        {{2, 2, Rational(6)}, {2, 4, Rational(8)}, {4, 4, Rational(2)}});
    auto expected = MPoly::from_terms(
        {{4, 0, Rational(6)}, {6, 0, Rational(8)}, {8, 0, Rational(2)}});
    CHECK(op_j(m_d2) == expected);
}

TEST_CASE("Q_alpha shifts the x exponent") {
    CHECK(op_q(MPoly::monomial(8, 0, Rational(2)), -2) ==
          MPoly::monomial(6, 0, Rational(2)));
    CHECK_THROWS_AS(op_q(MPoly::monomial(1, 0), -2), ExponentError);
    CHECK_THROWS_AS(op_q(MPoly::monomial(1, 0), 0), InvalidAlpha);
}

TEST_CASE("eval is exact") {
    CHECK(MPoly::monomial(2, 2, Rational(4)).eval(1, 1) == 4);
    CHECK(MPoly{}.eval(Rational(3, 7), Rational(-5)) == 0);
    auto j_d2 = MPoly::from_terms(
        {{4, 0, Rational(6)}, {6, 0, Rational(8)}, {8, 0, Rational(2)}});
    CHECK(j_d2.eval(1, 1) == 16);  // |E(D_2)|
    CHECK(MPoly::monomial(2, 1, Rational(3)).eval(Rational(1, 2), Rational(4)) == 3);
}

TEST_CASE("operator properties on random polynomials") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = testutil::random_poly(rng, /*allow_zero_x_exponent=*/false);
        CHECK(op_sx(op_dx(p)) == p);
        CHECK(op_dx(op_sx(p)) == p);
        CHECK(op_dy(op_dx(p)) == op_dx(op_dy(p)));

        // eval at (1,1) is the coefficient sum
        Rational sum(0);
        for (const auto& [key, c] : p.terms()) sum += c;
        CHECK(p.eval(1, 1) == sum);

        // canonical outputs
        auto dx = op_dx(p);
        auto diag = op_j(p);
        for (const auto& [key, c] : dx.terms()) CHECK(c != 0);
        for (const auto& [key, c] : diag.terms()) CHECK(c != 0);
    }
}

TEST_CASE("rendering") {
    CHECK(MPoly{}.str() == "0");
    auto p = MPoly::from_terms(
        {{2, 4, Rational(8)}, {2, 2, Rational(4)}, {4, 4, Rational(7, 2)}});
    CHECK(p.str() == "4 x^2 y^2 + 8 x^2 y^4 + 7/2 x^4 y^4");
    CHECK(MPoly::monomial(1, 2, Rational(2)).str() == "2 x y^2");
    CHECK(MPoly::monomial(0, 0, Rational(-3)).str() == "- 3");
}
