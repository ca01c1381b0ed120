#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hatom/exp_poly.hpp"
#include "hatom/polynomial.hpp"
#include "hatom/rational.hpp"
#include "hatom/trig_poly.hpp"

namespace hatom {

/// Radial factor R(r) = poly(r) * e^{-beta r} in Bohr-radius units, with the
/// squared normalization kept exact: c2 * integral of R^2 r^2 dr == 1.
/// The polynomial is stored primitive (coprime integer coefficients, positive
/// lowest term); c2 absorbs the scale.
struct RadialPart {
    int n = 0;
    int l = 0;
    std::vector<Rational> poly; // poly[k] multiplies r^k; degree n-1, lowest power l
    Rational beta;              // 1/n
    Rational c2;

    Polynomial polynomial() const { return Polynomial(poly); }
    ExpPoly exp_poly() const { return ExpPoly(Polynomial(poly), beta); }
};

/// Polar factor Theta(theta) = cos_poly(cos theta) * sin^{|m|}(theta), with
/// n2 * integral of Theta^2 sin(theta) dtheta == 1 exactly. cos_poly is the
/// primitive integer form of the associated Legendre polynomial factor.
struct PolarPart {
    int l = 0;
    int m = 0;
    int sin_parity = 0;             // |m| mod 2
    std::vector<Rational> cos_poly; // in powers of cos(theta)
    Rational n2;

    Polynomial polynomial() const { return Polynomial(cos_poly); }
    TrigPoly trig_poly() const {
        return TrigPoly::from_cos_poly(Polynomial(cos_poly), std::abs(m));
    }
};

/// Azimuthal factor e^{i m phi}; |.|^2 normalizes to exactly 1/(2 pi).
struct AzimuthalPart {
    int m = 0;
};

struct HydrogenState {
    int n = 0;
    int l = 0;
    int m = 0;
    RadialPart radial;
    PolarPart polar;
    AzimuthalPart azimuthal;

    std::string label() const {
        return std::to_string(n) + "," + std::to_string(l) + "," + std::to_string(m);
    }
};

namespace detail {

/// Associated Laguerre polynomial L_q^{alpha}(x) by the exact three-term
/// recurrence.
inline Polynomial laguerre(int q, int alpha) {
    Polynomial prev = Polynomial::constant(Rational(1));
    if (q == 0) return prev;
    Polynomial cur({Rational(1 + alpha), Rational(-1)});
    for (int k = 1; k < q; ++k) {
        // (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}
        Polynomial next =
            (cur.scaled(Rational(2 * k + 1 + alpha)) - cur.shifted(1) -
             prev.scaled(Rational(k + alpha)))
                .scaled(Rational(1, k + 1));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Polynomial factor Q of the associated Legendre function
/// P_l^{|m|}(cos theta) = sin^{|m|}(theta) * Q(cos theta), Condon-Shortley
/// phase dropped (only squares are ever used).
inline Polynomial legendre_cos_factor(int l, int m_abs) {
    Polynomial prev = Polynomial::constant(Rational(odd_double_factorial(
        static_cast<unsigned>(m_abs))));
    if (l == m_abs) return prev;
    Polynomial cur = prev.shifted(1).scaled(Rational(2 * m_abs + 1));
    for (int k = m_abs + 2; k <= l; ++k) {
        // (k - |m|) Q_k = (2k-1) x Q_{k-1} - (k-1+|m|) Q_{k-2}
        Polynomial next = (cur.shifted(1).scaled(Rational(2 * k - 1)) -
                           prev.scaled(Rational(k - 1 + m_abs)))
                              .scaled(Rational(1, k - m_abs));
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

inline void check_quantum_numbers(int n, int l) {
    if (n < 1)
        throw std::domain_error("n must be >= 1 (got n=" + std::to_string(n) + ")");
    if (l < 0 || l >= n)
        throw std::domain_error("l must satisfy 0 <= l < n (got n=" + std::to_string(n) +
                                ", l=" + std::to_string(l) + ")");
}

} // namespace detail

/// Builds R(r) = r^l * (associated Laguerre in 2r/n) * e^{-r/n} with the
/// squared normalization computed by exact integration, never transcribed.
inline RadialPart build_radial(int n, int l) {
    detail::check_quantum_numbers(n, l);
    const Rational beta(1, n);
    Polynomial p = detail::laguerre(n - l - 1, 2 * l + 1)
                       .composed_linear(Rational(2, n))
                       .shifted(l)
                       .primitive();
    // lowest coefficient positive (the Laguerre constant term is positive,
    // but primitive() pins the sign to the leading term)
    if (p.coeff(p.lowest_power()).sign() < 0) p = p.scaled(Rational(-1));

    RadialPart radial;
    radial.n = n;
    radial.l = l;
    radial.poly = p.coeffs();
    radial.beta = beta;
    radial.c2 = Rational(1) / (ExpPoly(p * p, beta + beta).times_power(2).integrate());
    return radial;
}

/// Builds Theta(theta) = sin^{|m|} * Q(cos theta) via the associated Legendre
/// recurrence, with exact squared normalization over [0, pi].
inline PolarPart build_polar(int l, int m) {
    if (l < 0) throw std::domain_error("l must be >= 0 (got l=" + std::to_string(l) + ")");
    if (std::abs(m) > l)
        throw std::domain_error("|m| must be <= l (got l=" + std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
    const int m_abs = std::abs(m);
    Polynomial q = detail::legendre_cos_factor(l, m_abs).primitive();

    PolarPart polar;
    polar.l = l;
    polar.m = m;
    polar.sin_parity = m_abs % 2;
    polar.cos_poly = q.coeffs();
    const TrigPoly theta = TrigPoly::from_cos_poly(q, m_abs);
    polar.n2 = Rational(1) / (theta * theta).integrate(/*with_sin_measure=*/true);
    return polar;
}

inline HydrogenState build_state(int n, int l, int m) {
    detail::check_quantum_numbers(n, l);
    if (std::abs(m) > l)
        throw std::domain_error("|m| must be <= l (got l=" + std::to_string(l) +
                                ", m=" + std::to_string(m) + ")");
    HydrogenState state;
    state.n = n;
    state.l = l;
    state.m = m;
    state.radial = build_radial(n, l);
    state.polar = build_polar(l, m);
    state.azimuthal = AzimuthalPart{m};
    return state;
}

/// Applies the separated Hamiltonian terms symbolically (Rydberg units,
/// V = -2/r) and checks that (H - E) Psi vanishes identically, term class by
/// term class. Returns E = -1/n^2. A nonzero residual means the construction
/// itself is broken.
inline Rational verify_eigenvalue(const HydrogenState& state) {
    const int n = state.n, l = state.l, m_abs = std::abs(state.m);
    const Rational energy = -Rational(1, static_cast<long>(n) * n);

    // radial equation, multiplied through by r^2 to stay polynomial:
    // r^2 R'' + 2 r R' + (E r^2 + 2 r - l(l+1)) R = 0
    const ExpPoly radial = state.radial.exp_poly();
    const ExpPoly d1 = radial.derivative();
    const ExpPoly d2 = d1.derivative();
    ExpPoly radial_residual = d2.times_power(2) + d1.times_power(1).scaled(Rational(2)) +
                              radial.times_power(2).scaled(energy) +
                              radial.times_power(1).scaled(Rational(2)) +
                              radial.scaled(Rational(-static_cast<long>(l) * (l + 1)));
    if (!radial_residual.is_zero())
        throw ConsistencyError("eigenvalue residual: radial equation not satisfied for state " +
                               state.label());

    // polar equation, multiplied through by sin(theta):
    // sin * d/dtheta(sin * Theta') + (l(l+1) sin^2 - m^2) Theta = 0
    const TrigPoly theta = state.polar.trig_poly();
    TrigPoly polar_residual =
        theta.derivative().times_sin().derivative().times_sin() +
        theta.times_sin(2).scaled(Rational(static_cast<long>(l) * (l + 1))) +
        theta.scaled(Rational(-static_cast<long>(m_abs) * m_abs));
    if (!polar_residual.is_zero())
        throw ConsistencyError("eigenvalue residual: polar equation not satisfied for state " +
                               state.label());

    return energy;
}

/// Exact expectation of r^k in Bohr-radius units.
inline Rational expectation_r_power(const HydrogenState& state, int k) {
    if (2 * state.l + 2 + k < 0)
        throw std::domain_error("r^k expectation diverges at the origin for k=" +
                                std::to_string(k) + " with l=" + std::to_string(state.l));
    const ExpPoly r2 = state.radial.exp_poly() * state.radial.exp_poly();
    return state.radial.c2 * r2.times_power(2 + k).integrate();
}

/// Exact norm of the full state (the product of the three squared
/// normalizations against their measures); 1 for a correct construction.
inline Rational norm_squared(const HydrogenState& state) {
    const ExpPoly r2 = state.radial.exp_poly() * state.radial.exp_poly();
    const Rational radial_norm = state.radial.c2 * r2.times_power(2).integrate();
    const TrigPoly theta = state.polar.trig_poly();
    const Rational polar_norm = state.polar.n2 * (theta * theta).integrate(true);
    return radial_norm * polar_norm; // azimuthal 2*pi cancels 1/(2*pi) exactly
}

} // namespace hatom
