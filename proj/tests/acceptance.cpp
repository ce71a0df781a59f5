// Acceptance suite: one pass/fail line per criterion, all checks exact
// (tolerance zero). Exit status is nonzero if any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "mpoly/generators.hpp"
#include "mpoly/gutman.hpp"
#include "mpoly/indices.hpp"
#include "mpoly/operators.hpp"
#include "test_util.hpp"

using namespace mpoly;

namespace {

int failures = 0;
bool current_ok = true;
std::string current_detail;

void expect(bool ok, const std::string& what) {
    if (!ok && current_ok) {
        current_ok = false;
        current_detail = what;
    }
}

void criterion(int number, const std::string& title,
               const std::function<void()>& body) {
    current_ok = true;
    current_detail.clear();
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    if (!current_ok) ++failures;
    std::cout << (current_ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << title;
    if (!current_ok) std::cout << "  [" << current_detail << "]";
    std::cout << "\n";
}

Graph generate(Family family, int n) {
    switch (family) {
        case Family::D: return bethe_d(n).graph;
        case Family::C: return bethe_c(n);
        case Family::E: return bethe_e(n);
    }
    throw InvalidParameter("bad family");
}

}  // namespace

int main() {
    criterion(1, "family M-polynomials equal the closed forms (n <= 6)", [] {
        for (Family fam : {Family::D, Family::C, Family::E})
            for (int n = 1; n <= 6; ++n)
                expect(generate(fam, n).m_polynomial() == closed_form_mpoly(fam, n),
                       "mismatch at n=" + std::to_string(n));
        expect(bethe_d(6).graph.edge_count() == 1456, "|E(D_6)| != 1456");
    });

    criterion(2, "closed-form index table reproduced on generated graphs", [] {
        for (const auto& name : closed_form_indices()) {
            auto idx = find_index(name);
            for (int n = 2; n <= 6; ++n) {
                expect(compute_direct(bethe_d(n).graph.m_polynomial(), idx).value ==
                           closed_form(Family::D, name, n),
                       "D_" + std::to_string(n) + " " + name);
                expect(compute_direct(bethe_c(n).m_polynomial(), idx).value ==
                           closed_form(Family::C, name, n),
                       "C_" + std::to_string(n) + " " + name);
                if (n >= 3)
                    expect(compute_direct(bethe_e(n).m_polynomial(), idx).value ==
                               closed_form(Family::E, name, n),
                           "E_" + std::to_string(n) + " " + name);
            }
            // E_2: record computed vs formula without asserting equality
            auto e2 = compute_direct(bethe_e(2).m_polynomial(), idx).value;
            std::cout << "      E_2 " << name << ": computed " << to_string(e2)
                      << ", formula " << to_string(closed_form(Family::E, name, 2))
                      << "\n";
        }
        expect(compute_direct(bethe_d(2).graph.m_polynomial(),
                              find_index("zagreb1")).value == 88,
               "zagreb1(D_2) != 88");
        expect(compute_direct(bethe_d(3).graph.m_polynomial(),
                              find_index("modified_zagreb2")).value ==
                   Rational(63, 8),
               "modified_zagreb2(D_3) != 63/8");
        expect(compute_direct(bethe_c(3).m_polynomial(),
                              find_index("inverse_sum")).value == 96,
               "inverse_sum(C_3) != 96");
    });

    criterion(3, "symmetric-division pipeline on D_n (2 <= n <= 6)", [] {
        auto sdi = find_index("symmetric_division");
        Rational pow3(3);  // 3^{n-1}
        for (int n = 2; n <= 6; ++n) {
            expect(compute_via_operators(bethe_d(n).graph.m_polynomial(), sdi).value ==
                       13 * pow3 - 3,
                   "value mismatch at n=" + std::to_string(n));
            pow3 *= 3;
        }
        auto sx = op_sx(bethe_d(3).graph.m_polynomial());
        auto expected = MPoly::from_terms(
            {{2, 2, Rational(9)}, {2, 4, Rational(10)}, {4, 4, Rational(7, 2)}});
        expect(sx == expected, "S_x(M(D_3)) mismatch");
    });

    criterion(4, "lattice edge/vertex/face counts (p,q <= 6)", [] {
        for (int p = 1; p <= 6; ++p)
            for (int q = 1; q <= 6; ++q) {
                auto g = lattice({p, q});
                auto counts = g.edge_type_counts();
                auto hist = g.degree_histogram();
                auto tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
                expect(counts.at({2, 2}) == 2 * p + 6, "m22 " + tag);
                expect(counts.at({2, 3}) == 8 * p + 8 * q - 4, "m23 " + tag);
                expect(counts.at({3, 3}) == 15 * p * q - 10 * p + 2 * q - 1,
                       "m33 " + tag);
                expect(hist.at(2) == 6 * p + 4 * q + 4, "n2 " + tag);
                expect(hist.at(3) == 10 * p * q - 4 * p + 4 * q - 2, "n3 " + tag);
                expect(static_cast<long>(g.edge_count()) -
                               static_cast<long>(g.vertex_count()) ==
                           face_counts({p, q}).total - 2,
                       "Euler " + tag);
            }
    });

    criterion(5, "extended bookkeeping solver and rank facts", [] {
        for (int p = 1; p <= 6; ++p)
            for (int q = 1; q <= 6; ++q) {
                GutmanSystem sys;
                sys.use_euler = true;
                sys.knowns["m22"] = Rational(2 * p + 6);
                sys.knowns["n2"] = Rational(6 * p + 4 * q + 4);
                sys.knowns["f"] = Rational(face_counts({p, q}).total);
                for (const auto* z :
                     {"n1", "n4", "m11", "m12", "m13", "m14", "m24", "m34", "m44"})
                    sys.knowns[z] = 0;
                auto sol = solve(sys);
                auto tag = "(" + std::to_string(p) + "," + std::to_string(q) + ")";
                expect(sol.status == Solution::Status::unique, "not unique " + tag);
                if (sol.status != Solution::Status::unique) continue;
                expect(sol.values.at("m23") == 8 * p + 8 * q - 4, "m23 " + tag);
                expect(sol.values.at("n3") == 10 * p * q - 4 * p + 4 * q - 2,
                       "n3 " + tag);
                expect(sol.values.at("m33") == 15 * p * q - 10 * p + 2 * q - 1,
                       "m33 " + tag);
            }
        auto report = verify_independence();
        expect(report.rank_degree_relations == 5, "rank != 5");
        expect(report.handshake_dependent, "handshake not dependent");
        expect(report.euler_independent, "Euler not independent");
    });

    criterion(6, "direct and operator routes agree on 200 random graphs", [] {
        std::vector<Graph> corpus;
        std::mt19937 rng(1357911);
        for (int trial = 0; trial < 200; ++trial)
            corpus.push_back(testutil::random_cycle_with_chords(rng, 40));
        for (int n = 1; n <= 6; ++n) {
            corpus.push_back(bethe_d(n).graph);
            corpus.push_back(bethe_c(n));
            corpus.push_back(bethe_e(n));
        }
        for (const auto& g : corpus) {
            auto m = g.m_polynomial();
            for (const auto& idx : registry(2)) {
                if (idx.name == "augmented_zagreb" && m.coeff(1, 1) != 0) continue;
                expect(compute_direct(g.edge_type_counts(), idx).value ==
                           compute_via_operators(m, idx).value,
                       idx.name + " disagreement");
            }
        }
    });

    criterion(7, "operator calculus properties", [] {
        std::mt19937 rng(8675309);
        for (int trial = 0; trial < 500; ++trial) {
            auto poly = testutil::random_poly(rng, /*allow_zero_x_exponent=*/false);
            expect(op_sx(op_dx(poly)) == poly, "S_x D_x != id");
        }
        for (const auto& idx : registry(2))
            for (int i = 1; i <= 8; ++i)
                for (int j = 1; j <= 8; ++j) {
                    if (idx.name == "augmented_zagreb" && i == 1 && j == 1) continue;
                    expect(compute_via_operators(MPoly::monomial(i, j), idx).value ==
                               idx.weight(i, j),
                           idx.name + " at (" + std::to_string(i) + "," +
                               std::to_string(j) + ")");
                }
    });

    criterion(8, "k-regular graphs give |E| x^k y^k", [] {
        for (int n : {3, 4, 5, 6, 10})
            expect(testutil::cycle_graph(n).m_polynomial() ==
                       MPoly::monomial(2, 2, Rational(n)),
                   "cycle C_" + std::to_string(n));
        expect(testutil::complete_graph(3).m_polynomial() ==
                   MPoly::monomial(2, 2, Rational(3)),
               "K_3");
        expect(testutil::complete_graph(4).m_polynomial() ==
                   MPoly::monomial(3, 3, Rational(6)),
               "K_4");
        expect(testutil::hypercube_q3().m_polynomial() ==
                   MPoly::monomial(3, 3, Rational(12)),
               "Q_3");
    });

    if (failures > 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 8 criteria passed\n";
    return 0;
}
