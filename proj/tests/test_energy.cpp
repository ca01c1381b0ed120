#include <catch2/catch_amalgamated.hpp>

#include "hatom/energy.hpp"
#include "hatom/errors.hpp"
#include "hatom/trig_poly.hpp"
#include "hatom/wavefunction.hpp"

using hatom::Rational;
using hatom::TrigPoly;

TEST_CASE("golden chain for the 3d m=2 state") {
    const auto state = hatom::build_state(3, 2, 2);

    // normalization of the radial factor
    CHECK(state.radial.c2 == Rational(8, 98415)); // 8/(5*3^9)

    // the shared radial prefactor of both angular terms
    CHECK(hatom::ri_term(state) == Rational(-2, 135));

    // intrinsic kinetic energy
    CHECK(hatom::ke_radial(state) == Rational(1, 45)); // 3/15 of E_3

    // polar bracket: n2 x integral of Theta d/dtheta(sin theta Theta') dtheta = -1
    const TrigPoly theta = state.polar.trig_poly();
    const TrigPoly bracket = theta * theta.derivative().times_sin().derivative();
    CHECK(state.polar.n2 * bracket.integrate(false) == Rational(-1));
    CHECK(hatom::ke_polar(state) == Rational(2, 135)); // 2/15 of E_3

    // azimuthal bracket: n2 x integral of sin^{2|m|-2} Q^2 sin dtheta x (-m^2) = -5
    const auto q = state.polar.polynomial();
    const TrigPoly reduced = TrigPoly::from_cos_poly(q * q, 2 * std::abs(state.m) - 2);
    CHECK(state.polar.n2 * reduced.integrate(true) * Rational(-4) == Rational(-5));
    CHECK(hatom::ke_azimuthal(state) == Rational(2, 27)); // 10/15 of E_3

    CHECK(hatom::potential_energy(state) == Rational(-2, 9));

    const auto b = hatom::decompose(state);
    CHECK(b.totalKE == Rational(1, 9));
    CHECK(b.total == Rational(-1, 9));
}

TEST_CASE("all fourteen published rows") {
    struct Row {
        const char* label;
        Rational keR, keTheta, kePhi;
    };
    // values in units of E1; dynamic, KE, V, total are implied by the checks below
    const Row rows[] = {
        {"1,0,0", {1, 1}, {0, 1}, {0, 1}},
        {"2,0,0", {1, 4}, {0, 1}, {0, 1}},
        {"3,0,0", {1, 9}, {0, 1}, {0, 1}},
        {"2,1,0", {1, 12}, {1, 6}, {0, 1}},
        {"2,1,±1", {1, 12}, {1, 24}, {1, 8}},
        {"3,1,0", {5, 81}, {4, 81}, {0, 1}},
        {"3,1,±1", {5, 81}, {1, 81}, {1, 27}},
        {"3,2,0", {1, 45}, {4, 45}, {0, 1}},
        {"3,2,±1", {1, 45}, {7, 135}, {1, 27}},
        {"3,2,±2", {1, 45}, {2, 135}, {2, 27}},
        {"7,3,0", {25, 2401}, {24, 2401}, {0, 1}},
        {"7,3,±1", {25, 2401}, {17, 2401}, {1, 343}},
        {"7,3,±2", {25, 2401}, {10, 2401}, {2, 343}},
        {"7,3,±3", {25, 2401}, {3, 2401}, {3, 343}},
    };

    const auto table = hatom::energy_table();
    REQUIRE(table.size() == 14);
    for (std::size_t i = 0; i < table.size(); ++i) {
        CAPTURE(i, table[i].first);
        CHECK(table[i].first == rows[i].label);
        const auto& b = table[i].second;
        CHECK(b.keR == rows[i].keR);
        CHECK(b.keTheta == rows[i].keTheta);
        CHECK(b.kePhi == rows[i].kePhi);
        CHECK(b.dynamic == b.keTheta + b.kePhi);
        CHECK(b.totalKE == b.keR + b.dynamic);
        CHECK(b.potential == Rational(-2) * b.totalKE);
        CHECK(b.total == b.totalKE + b.potential);
    }
}

TEST_CASE("virial and eigenvalue checksums for every state up to n = 12") {
    for (int n = 1; n <= 12; ++n) {
        const Rational expected(1, static_cast<long>(n) * n);
        for (int l = 0; l < n; ++l)
            for (int m = 0; m <= l; ++m) {
                CAPTURE(n, l, m);
                const auto b = hatom::decompose(hatom::build_state(n, l, m));
                CHECK(b.totalKE == expected);
                CHECK(b.total == -expected);
                CHECK(b.potential == Rational(-2) * b.totalKE);
            }
    }
}

TEST_CASE("dynamic energy is m-independent and equals the operator expectation") {
    for (int n = 1; n <= 12; ++n)
        for (int l = 0; l < n; ++l) {
            const auto base_state = hatom::build_state(n, l, 0);
            const Rational base = hatom::decompose(base_state).dynamic;
            const Rational ri_magnitude = -hatom::ri_term(base_state);
            CHECK(base == Rational(static_cast<long>(l) * (l + 1)) * ri_magnitude);
            for (int m = 1; m <= l; ++m) {
                CAPTURE(n, l, m);
                CHECK(hatom::decompose(hatom::build_state(n, l, m)).dynamic == base);
            }
        }
}

TEST_CASE("negative m gives the same decomposition") {
    const auto plus = hatom::decompose(hatom::build_state(3, 2, 2));
    const auto minus = hatom::decompose(hatom::build_state(3, 2, -2));
    CHECK(plus.keR == minus.keR);
    CHECK(plus.keTheta == minus.keTheta);
    CHECK(plus.kePhi == minus.kePhi);
    CHECK(plus.total == minus.total);
}

TEST_CASE("angular terms vanish where the operators do") {
    for (int n : {1, 2, 3, 7}) {
        const auto b = hatom::decompose(hatom::build_state(n, 0, 0));
        CHECK(b.keTheta == Rational(0));
        CHECK(b.kePhi == Rational(0));
        CHECK(b.dynamic == Rational(0));
    }
    CHECK(hatom::decompose(hatom::build_state(2, 1, 0)).kePhi == Rational(0));
}

TEST_CASE("ri term is negative for bound states") {
    for (int n = 1; n <= 6; ++n)
        for (int l = 0; l < n; ++l) CHECK(hatom::ri_term(hatom::build_state(n, l, 0)) < Rational(0));
}
