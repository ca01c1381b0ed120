#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "hatom/energy.hpp"
#include "hatom/errors.hpp"
#include "hatom/exp_poly.hpp"
#include "hatom/trig_poly.hpp"
#include "hatom/wavefunction.hpp"

namespace hatom {

/// Floating-point Gaussian quadrature, kept fully independent of the exact
/// engine so the two can check each other.
struct QuadratureRule {
    enum class Kind { GaussLaguerre, GaussLegendre };
    Kind kind;
    int order = 0;
    std::vector<double> nodes;
    std::vector<double> weights;
};

namespace detail {

/// Laguerre L_q and L_{q-1} at x via the three-term recurrence.
inline std::pair<double, double> laguerre_pair(int q, double x) {
    double prev = 1.0, cur = 1.0 - x;
    for (int k = 1; k < q; ++k) {
        double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

/// Legendre P_q and P_{q-1} at x.
inline std::pair<double, double> legendre_pair(int q, double x) {
    double prev = 1.0, cur = x;
    for (int k = 1; k < q; ++k) {
        double next = ((2.0 * k + 1.0) * x * cur - k * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return {cur, prev};
}

} // namespace detail

/// Nodes are the roots of L_order, found by Newton iteration from the
/// Stroud-Secrest initial guesses; weights w_i = x_i / ((order+1) L_{order+1}(x_i))^2.
inline QuadratureRule gauss_laguerre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::GaussLaguerre;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int q = order;
    for (int i = 0; i < q; ++i) {
        double x;
        if (i == 0) {
            x = 3.0 / (1.0 + 2.4 * q);
        } else if (i == 1) {
            x = rule.nodes[0] + 15.0 / (1.0 + 2.5 * q);
        } else {
            const double step = (1.0 + 2.55 * (i - 1)) / (1.9 * (i - 1));
            x = rule.nodes[i - 1] + step * (rule.nodes[i - 1] - rule.nodes[i - 2]);
        }
        for (int it = 0; it < 100; ++it) {
            auto [lq, lqm1] = detail::laguerre_pair(q, x);
            const double deriv = q * (lq - lqm1) / x;
            const double dx = lq / deriv;
            x -= dx;
            if (std::abs(dx) <= 1e-15 * std::max(1.0, std::abs(x))) break;
        }
        rule.nodes[i] = x;
        auto [lnext, lq_at] = detail::laguerre_pair(q + 1, x);
        (void)lq_at;
        const double denom = (q + 1.0) * lnext;
        rule.weights[i] = x / (denom * denom);
    }
    return rule;
}

/// Nodes are the roots of P_order on (-1, 1), Newton iteration from the
/// Chebyshev-angle initial guesses; weights w_i = 2 / ((1 - x_i^2) P'_order(x_i)^2).
inline QuadratureRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("quadrature order must be >= 1");
    QuadratureRule rule;
    rule.kind = QuadratureRule::Kind::GaussLegendre;
    rule.order = order;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const int q = order;
    for (int i = 0; i < q; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (q + 0.5));
        double deriv = 0.0;
        for (int it = 0; it < 100; ++it) {
            auto [pq, pqm1] = detail::legendre_pair(q, x);
            deriv = q * (x * pq - pqm1) / (x * x - 1.0);
            const double dx = pq / deriv;
            x -= dx;
            if (std::abs(dx) <= 1e-15) break;
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * deriv * deriv);
    }
    // the Chebyshev-angle seeds walk from +1 down; present nodes ascending
    std::reverse(rule.nodes.begin(), rule.nodes.end());
    std::reverse(rule.weights.begin(), rule.weights.end());
    return rule;
}

/// Smallest order whose rule is exact for the given polynomial degree
/// (order q integrates degrees up to 2q - 1 exactly).
inline int required_order(int max_degree) { return (max_degree + 2) / 2; }

/// Gauss-Laguerre evaluation of the [0, inf) integral of f, by the
/// substitution x = beta r. Refuses orders that would break the
/// exact-to-rounding property.
inline double quad_radial(const ExpPoly& f, int order) {
    if (f.is_zero()) return 0.0;
    if (!(f.beta().to_double() > 0.0))
        throw DivergentIntegral("radial quadrature requires beta > 0");
    if (order < required_order(f.max_power()))
        throw InsufficientOrder("order " + std::to_string(order) + " < required " +
                                std::to_string(required_order(f.max_power())));
    const QuadratureRule rule = gauss_laguerre(order);
    const double beta = f.beta().to_double();
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        const double r = rule.nodes[i] / beta;
        double poly = 0.0;
        for (const auto& [power, coeff] : f.terms())
            poly += coeff.to_double() * std::pow(r, power);
        sum += rule.weights[i] * poly;
    }
    return sum / beta;
}

/// Gauss-Legendre evaluation of the [0, pi] integral of f (optionally with
/// the sin measure) through u = cos theta. Every term must carry odd total
/// sin power so the substituted integrand is polynomial in u; anything else
/// is refused, mirroring the exact engine. In canonical form that leaves
/// exactly one sin per term, so the u-integrand is a plain polynomial.
inline double quad_polar(const TrigPoly& f, bool with_sin_measure, int order) {
    if (f.is_zero()) return 0.0;
    std::vector<std::pair<double, int>> uterms; // (coefficient, power of u)
    for (const auto& [key, coeff] : f.terms()) {
        const auto [sin_pow, cos_pow] = key;
        if ((sin_pow + (with_sin_measure ? 1 : 0)) % 2 == 0)
            throw UnsupportedIntegrand(
                "polar quadrature requires odd total sin power (term sin^" +
                std::to_string(sin_pow) + " cos^" + std::to_string(cos_pow) + ")");
        uterms.emplace_back(coeff.to_double(), cos_pow);
    }
    if (order < required_order(f.max_cos_power()))
        throw InsufficientOrder("order " + std::to_string(order) + " < required " +
                                std::to_string(required_order(f.max_cos_power())));
    const QuadratureRule rule = gauss_legendre(order);
    double sum = 0.0;
    for (int i = 0; i < order; ++i) {
        const double u = rule.nodes[i];
        double val = 0.0;
        for (const auto& [coeff, power] : uterms) val += coeff * std::pow(u, power);
        sum += rule.weights[i] * val;
    }
    return sum;
}

namespace detail {

inline double rel_dev(double numeric, const Rational& exact) {
    const double e = exact.to_double();
    const double scale = std::max(std::abs(e), 1e-30);
    return std::abs(numeric - e) / scale;
}

} // namespace detail

/// Recomputes V, KE_r, KE_theta, KE_phi by quadrature (orders 2x the
/// integrand degree) and returns the worst relative deviation from the exact
/// engine.
inline double cross_check_state(const HydrogenState& state) {
    const ExpPoly r = state.radial.exp_poly();
    const auto order_for = [](const ExpPoly& f) { return std::max(4, 2 * f.max_power()); };

    const ExpPoly v_integrand = (r * r).times_power(1);
    const ExpPoly ker_integrand = r * r.derivative().times_power(2).derivative();
    const ExpPoly ri_integrand = r * r;

    const double c2 = state.radial.c2.to_double();
    double worst = detail::rel_dev(-2.0 * c2 * quad_radial(v_integrand, order_for(v_integrand)),
                                   potential_energy(state));
    worst = std::max(worst,
                     detail::rel_dev(-c2 * quad_radial(ker_integrand, order_for(ker_integrand)),
                                     ke_radial(state)));

    const double ri = -c2 * quad_radial(ri_integrand, order_for(ri_integrand));
    const TrigPoly theta = state.polar.trig_poly();
    const TrigPoly bracket = theta * theta.derivative().times_sin().derivative();
    const double n2 = state.polar.n2.to_double();
    double ke_theta_num = 0.0;
    if (!bracket.is_zero()) {
        const int order = std::max(4, 2 * (bracket.max_cos_power() + 2));
        ke_theta_num = ri * n2 * quad_polar(bracket, false, order);
    }
    worst = std::max(worst, detail::rel_dev(ke_theta_num, ke_polar(state)));

    double ke_phi_num = 0.0;
    const int m_abs = std::abs(state.m);
    if (m_abs > 0) {
        const Polynomial q = state.polar.polynomial();
        const TrigPoly reduced = TrigPoly::from_cos_poly(q * q, 2 * m_abs - 2);
        const int order = std::max(4, 2 * (reduced.max_cos_power() + 2 * m_abs));
        ke_phi_num = ri * n2 * quad_polar(reduced, true, order) * (-1.0 * m_abs * m_abs);
    }
    worst = std::max(worst, detail::rel_dev(ke_phi_num, ke_azimuthal(state)));
    return worst;
}

} // namespace hatom
