#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hatom/errors.hpp"
#include "hatom/rational.hpp"
#include "hatom/wavefunction.hpp"

namespace hatom {

/// Per-state energy decomposition in units of the ground-state energy
/// magnitude (Rydberg). Kinetic terms positive, potential negative.
struct EnergyBreakdown {
    Rational keR;
    Rational keTheta;
    Rational kePhi;
    Rational dynamic; // keTheta + kePhi
    Rational totalKE; // keR + dynamic
    Rational potential;
    Rational total; // totalKE + potential
};

/// The radial prefactor shared by both angular kinetic terms:
/// -c2 * integral of R^2 dr (negative for every bound state).
inline Rational ri_term(const HydrogenState& state) {
    const ExpPoly r = state.radial.exp_poly();
    return -(state.radial.c2 * (r * r).integrate());
}

/// V = -e^2 c2 * integral of R^2 r dr, with e^2 = 2 in Rydberg units.
inline Rational potential_energy(const HydrogenState& state) {
    const ExpPoly r = state.radial.exp_poly();
    return Rational(-2) * state.radial.c2 * (r * r).times_power(1).integrate();
}

/// KE_r = -c2 * integral of R * d/dr(r^2 R') dr (the r^2 of the measure and
/// the 1/r^2 of the radial Laplacian cancel).
inline Rational ke_radial(const HydrogenState& state) {
    const ExpPoly r = state.radial.exp_poly();
    const ExpPoly laplacian_core = r.derivative().times_power(2).derivative();
    return -(state.radial.c2 * (r * laplacian_core).integrate());
}

/// KE_theta = RI term x n2 * integral of Theta * d/dtheta(sin theta Theta') dtheta;
/// the sin measure cancels against the 1/sin of the operator. Exactly 0 for l = 0.
inline Rational ke_polar(const HydrogenState& state) {
    const TrigPoly theta = state.polar.trig_poly();
    const TrigPoly bracket = theta * theta.derivative().times_sin().derivative();
    if (bracket.is_zero()) return Rational(0);
    return ri_term(state) * state.polar.n2 * bracket.integrate(/*with_sin_measure=*/false);
}

/// KE_phi = RI term x (-m^2) x n2 * integral of (Theta^2 / sin^2) sin dtheta.
/// Theta^2 / sin^2 is formed as sin^{2|m|-2} Q^2 so the division never happens.
/// Exactly 0 for m = 0.
inline Rational ke_azimuthal(const HydrogenState& state) {
    const int m_abs = std::abs(state.m);
    if (m_abs == 0) return Rational(0);
    const Polynomial q = state.polar.polynomial();
    const TrigPoly reduced = TrigPoly::from_cos_poly(q * q, 2 * m_abs - 2);
    const Rational az = state.polar.n2 * reduced.integrate(/*with_sin_measure=*/true) *
                        Rational(-static_cast<long>(m_abs) * m_abs);
    return ri_term(state) * az;
}

/// Full decomposition with internal consistency enforced: the parts must
/// reassemble to the exact eigenvalue, satisfy the virial ratio, and the
/// angular sum must match the l(l+1)-weighted radial prefactor.
inline EnergyBreakdown decompose(const HydrogenState& state) {
    EnergyBreakdown b;
    b.keR = ke_radial(state);
    b.keTheta = ke_polar(state);
    b.kePhi = ke_azimuthal(state);
    b.dynamic = b.keTheta + b.kePhi;
    b.totalKE = b.keR + b.dynamic;
    b.potential = potential_energy(state);
    b.total = b.totalKE + b.potential;

    const Rational n2_inv(1, static_cast<long>(state.n) * state.n);
    if (b.totalKE != n2_inv)
        throw ConsistencyError("energy checksum: total kinetic energy " + b.totalKE.str() +
                               " != 1/n^2 for state " + state.label());
    if (b.total != -n2_inv)
        throw ConsistencyError("energy checksum: total energy " + b.total.str() +
                               " != -1/n^2 for state " + state.label());
    if (b.potential != Rational(-2) * b.totalKE)
        throw ConsistencyError("virial violation for state " + state.label());
    const Rational l_weight(static_cast<long>(state.l) * (state.l + 1));
    if (b.dynamic != l_weight * (-ri_term(state)))
        throw ConsistencyError("dynamic energy does not match l(l+1) x radial prefactor for state " +
                               state.label());
    return b;
}

/// The published 14-row energy table: all n <= 3 states plus the n=7, l=3
/// family, one row per |m|, in the original row order.
inline std::vector<std::pair<std::string, EnergyBreakdown>> energy_table() {
    static const int rows[][3] = {
        {1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {2, 1, 0}, {2, 1, 1},
        {3, 1, 0}, {3, 1, 1}, {3, 2, 0}, {3, 2, 1}, {3, 2, 2},
        {7, 3, 0}, {7, 3, 1}, {7, 3, 2}, {7, 3, 3},
    };
    std::vector<std::pair<std::string, EnergyBreakdown>> table;
    table.reserve(std::size(rows));
    for (const auto& row : rows) {
        const int n = row[0], l = row[1], m = row[2];
        std::string label = std::to_string(n) + "," + std::to_string(l) + "," +
                            (m == 0 ? "0" : "±" + std::to_string(m));
        table.emplace_back(std::move(label), decompose(build_state(n, l, m)));
    }
    return table;
}

} // namespace hatom
