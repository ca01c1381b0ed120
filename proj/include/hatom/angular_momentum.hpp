#pragma once

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatom/energy.hpp"
#include "hatom/errors.hpp"
#include "hatom/rational.hpp"
#include "hatom/wavefunction.hpp"

namespace hatom {

namespace detail {
inline std::string sci(double v) {
    std::ostringstream os;
    os << std::scientific << v;
    return os.str();
}
} // namespace detail

/// SI constants (CODATA 2018 by default, injectable for tests). The charge
/// never appears alone: e^2 = hbar^2/(m a) is eliminated before evaluation.
struct PhysicalConstants {
    double electron_mass; // kg
    double hbar;          // J s
    double bohr_radius;   // m
    double light_speed;   // m/s
    double e1;            // J, ground-state energy magnitude

    static PhysicalConstants codata2018() {
        return {9.1093837015e-31, 1.054571817e-34, 5.29177210903e-11, 299792458.0,
                2.1798723611035e-18};
    }

    /// e1 must reproduce hbar^2/(2 m a^2) to 6 significant figures.
    void validate() const {
        if (!(electron_mass > 0) || !(hbar > 0) || !(bohr_radius > 0) || !(light_speed > 0) ||
            !(e1 > 0))
            throw std::domain_error("physical constants must all be positive");
        const double derived = hbar * hbar / (2.0 * electron_mass * bohr_radius * bohr_radius);
        if (std::abs(derived - e1) / e1 > 1e-6)
            throw ConsistencyError("constants are inconsistent: hbar^2/(2 m a^2) = " +
                                   detail::sci(derived) + " J vs e1 = " + detail::sci(e1) + " J");
    }
};

/// l(l+1), the exact squared total angular momentum in units of hbar^2.
inline long l_squared_exact(int l) {
    if (l < 0) throw std::domain_error("l must be >= 0");
    return static_cast<long>(l) * (l + 1);
}

/// sqrt(l(l+1)), the total angular momentum magnitude in units of hbar.
inline double total_l_magnitude(int l) {
    return std::sqrt(static_cast<double>(l_squared_exact(l)));
}

/// Exact <r^2 sin^2 theta> in units of a^2: the moment that converts the
/// mass-weighted circulation of the spinning field into angular momentum.
inline Rational expectation_r2_sin2(const HydrogenState& state) {
    const Rational r2 = expectation_r_power(state, 2);
    const TrigPoly theta = state.polar.trig_poly();
    const Rational sin2 = state.polar.n2 * (theta * theta).times_sin(2).integrate(true);
    return r2 * sin2;
}

/// Rotation period of the 2p spinning field: the closed form
/// T = 24 m pi a^2 / (sqrt(2) hbar), cross-derived from the exact moment
/// <r^2 sin^2 theta> = 12 a^2 by requiring the summed field circulation to
/// carry exactly sqrt(l(l+1)) hbar.
inline double spinning_period_2p(const PhysicalConstants& c) {
    c.validate();
    const double closed =
        24.0 * c.electron_mass * M_PI * c.bohr_radius * c.bohr_radius / (std::sqrt(2.0) * c.hbar);

    const HydrogenState state = build_state(2, 1, 0);
    const Rational moment = expectation_r2_sin2(state);
    const double rederived = 2.0 * M_PI * c.electron_mass * moment.to_double() * c.bohr_radius *
                             c.bohr_radius / (total_l_magnitude(state.l) * c.hbar);
    if (std::abs(closed - rederived) / closed > 1e-12)
        throw ConsistencyError("spinning period closed form and moment-integral route disagree: " +
                               detail::sci(closed) + " vs " + detail::sci(rederived));
    return closed;
}

struct ExplicitDynamicEnergy {
    double joules;
    Rational in_e1;
};

/// Rotational kinetic energy of the 2p spinning field, 1/2 m omega^2
/// <r^2 sin^2 theta>, evaluated in SI and as the exact ratio to the
/// ground-state energy l(l+1)/<r^2 sin^2 theta> = 1/6. Must coincide with the
/// operator-formalism dynamic energy of the (2,1,m) states.
inline ExplicitDynamicEnergy dynamic_energy_explicit_2p(const PhysicalConstants& c) {
    const double period = spinning_period_2p(c);
    const HydrogenState state = build_state(2, 1, 0);
    const Rational moment = expectation_r2_sin2(state);
    const double omega = 2.0 * M_PI / period;
    const double joules = 0.5 * c.electron_mass * omega * omega * moment.to_double() *
                          c.bohr_radius * c.bohr_radius;

    const Rational ratio = Rational(l_squared_exact(state.l)) / moment;
    const Rational operator_dynamic = decompose(state).dynamic;
    if (ratio != operator_dynamic)
        throw ConsistencyError("explicit spinning-field energy " + ratio.str() +
                               " != operator dynamic energy " + operator_dynamic.str());
    const double e1_derived =
        c.hbar * c.hbar / (2.0 * c.electron_mass * c.bohr_radius * c.bohr_radius);
    if (std::abs(joules - ratio.to_double() * e1_derived) / joules > 1e-12)
        throw ConsistencyError("explicit spinning-field energy SI evaluation drifted");
    return {joules, ratio};
}

/// Orbit frequency a classical point electron would need on a circle of
/// radius <r^3>^{1/3}-consistent force balance: omega = hbar/(sqrt(<r^3>) m a^2)
/// after eliminating e^2 = hbar^2/(m a); <r^3> = 210 a^3 for 2p.
inline double particle_orbit_frequency_2p(const PhysicalConstants& c) {
    c.validate();
    const Rational r3 = expectation_r_power(build_state(2, 1, 0), 3);
    const double omega = c.hbar / (std::sqrt(r3.to_double()) * c.electron_mass * c.bohr_radius *
                                   c.bohr_radius);
    return omega / (2.0 * M_PI);
}

/// Tangential speed of the spinning field at radius r (units of a) and polar
/// angle with the given sine: v = 2 pi r a sin(theta) / T.
inline double field_velocity(double r_in_a, double sin_theta, double period_s,
                             const PhysicalConstants& c) {
    if (r_in_a < 0) throw std::domain_error("radius must be >= 0");
    if (sin_theta < 0 || sin_theta > 1) throw std::domain_error("sin(theta) must be in [0, 1]");
    if (!(period_s > 0)) throw std::domain_error("period must be positive");
    return 2.0 * M_PI * r_in_a * c.bohr_radius * sin_theta / period_s;
}

/// One |l, ml> x |1/2, sz> component of a spin-coupled state. Half-integers
/// are carried doubled (two_sz = +1 or -1).
struct SpinTerm {
    Rational coeff_squared;
    int ml;
    int two_sz;
};

/// |j, jz> for an electron (s = 1/2) coupled to orbital angular momentum l,
/// as one or two product terms with exact squared coefficients summing to 1.
/// j and jz are carried doubled so they stay integers.
struct SpinCoupledState {
    int l;
    int two_j;
    int two_jz;
    std::vector<SpinTerm> terms;
};

/// Clebsch-Gordan decomposition for s = 1/2: for j = l + 1/2 the spin-up
/// component (ml = jz - 1/2) carries (l + jz + 1/2)/(2l + 1) and the
/// spin-down component (ml = jz + 1/2) carries (l - jz + 1/2)/(2l + 1);
/// for j = l - 1/2 the two weights swap.
inline SpinCoupledState couple_spin(int l, int two_j, int two_jz) {
    if (l < 0) throw std::domain_error("l must be >= 0");
    if (two_j != 2 * l + 1 && two_j != 2 * l - 1)
        throw std::domain_error("j must be l +/- 1/2 (got 2j=" + std::to_string(two_j) +
                                " for l=" + std::to_string(l) + ")");
    if (two_j < 1) throw std::domain_error("j must be >= 1/2");
    if (std::abs(two_jz) > two_j || (two_jz - two_j) % 2 != 0)
        throw std::domain_error("jz must be one of -j..j in integer steps (got 2jz=" +
                                std::to_string(two_jz) + ")");

    SpinCoupledState state{l, two_j, two_jz, {}};
    const long denom = 2L * (2 * l + 1);
    Rational up_weight(2L * l + two_jz + 1, denom);
    Rational down_weight(2L * l - two_jz + 1, denom);
    if (two_j == 2 * l - 1) std::swap(up_weight, down_weight);

    const int ml_up = (two_jz - 1) / 2;
    const int ml_down = (two_jz + 1) / 2;
    if (!up_weight.is_zero() && std::abs(ml_up) <= l)
        state.terms.push_back({up_weight, ml_up, +1});
    if (!down_weight.is_zero() && std::abs(ml_down) <= l)
        state.terms.push_back({down_weight, ml_down, -1});

    Rational sum(0);
    for (const auto& t : state.terms) {
        if (2 * t.ml + t.two_sz != two_jz)
            throw ConsistencyError("spin coupling produced a term with ml + sz != jz");
        sum += t.coeff_squared;
    }
    if (sum != Rational(1))
        throw ConsistencyError("spin coupling weights sum to " + sum.str() + ", not 1");
    return state;
}

/// coeffSquared-weighted energy breakdown of a spin-coupled state. The total
/// must still be the pure -1/n^2 eigenvalue; the angular split is the
/// weighted average of the component splits.
inline EnergyBreakdown mixed_state_energy(const SpinCoupledState& coupled, int n) {
    if (coupled.l >= n)
        throw std::domain_error("spin-coupled l=" + std::to_string(coupled.l) +
                                " requires n > l (got n=" + std::to_string(n) + ")");
    EnergyBreakdown mixed;
    for (const auto& term : coupled.terms) {
        const EnergyBreakdown part = decompose(build_state(n, coupled.l, term.ml));
        mixed.keR += term.coeff_squared * part.keR;
        mixed.keTheta += term.coeff_squared * part.keTheta;
        mixed.kePhi += term.coeff_squared * part.kePhi;
        mixed.dynamic += term.coeff_squared * part.dynamic;
        mixed.totalKE += term.coeff_squared * part.totalKE;
        mixed.potential += term.coeff_squared * part.potential;
        mixed.total += term.coeff_squared * part.total;
    }
    if (mixed.total != -Rational(1, static_cast<long>(n) * n))
        throw ConsistencyError("mixed-state energy total is not the eigenvalue");
    return mixed;
}

} // namespace hatom
