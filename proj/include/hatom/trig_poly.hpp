#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "hatom/errors.hpp"
#include "hatom/polynomial.hpp"
#include "hatom/rational.hpp"

namespace hatom {

/// Trig polynomial in canonical form: a sum of c * sin^s(theta) * cos^k(theta)
/// with s in {0, 1} per term (every sin^2 rewritten as 1 - cos^2). Closed
/// under d/dtheta; exactly integrable over [0, pi] when, after folding the
/// optional sin(theta) measure, every term carries an odd total sin power.
class TrigPoly {
public:
    TrigPoly() = default;

    static TrigPoly term(const Rational& coeff, int sin_power, int cos_power) {
        TrigPoly f;
        f.add_canonical(coeff, sin_power, cos_power);
        return f;
    }

    /// sin^{sin_power}(theta) * p(cos theta).
    static TrigPoly from_cos_poly(const Polynomial& p, int sin_power) {
        TrigPoly f;
        const auto& c = p.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            f.add_canonical(c[k], sin_power, static_cast<int>(k));
        return f;
    }

    /// Keys are (sin power in {0,1}, cos power).
    const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int max_cos_power() const {
        int m = 0;
        for (const auto& [key, c] : terms_) m = std::max(m, key.second);
        return m;
    }

    TrigPoly& operator+=(const TrigPoly& o) {
        for (const auto& [key, c] : o.terms_) add_term(key, c);
        return *this;
    }
    friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
    friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a += b.scaled(Rational(-1)); }

    TrigPoly scaled(const Rational& s) const {
        TrigPoly r;
        if (s.is_zero()) return r;
        for (const auto& [key, c] : terms_) r.terms_[key] = c * s;
        return r;
    }

    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
        TrigPoly r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add_canonical(ca * cb, ka.first + kb.first, ka.second + kb.second);
        return r;
    }

    TrigPoly times_sin(int power = 1) const {
        TrigPoly r;
        for (const auto& [key, c] : terms_) r.add_canonical(c, key.first + power, key.second);
        return r;
    }

    TrigPoly times_cos(int power = 1) const {
        TrigPoly r;
        for (const auto& [key, c] : terms_) r.terms_[{key.first, key.second + power}] = c;
        return r;
    }

    /// Exact d/dtheta, re-canonicalized.
    TrigPoly derivative() const {
        TrigPoly r;
        for (const auto& [key, c] : terms_) {
            const auto [s, k] = key;
            // d/dtheta sin^s cos^k = s sin^{s-1} cos^{k+1} - k sin^{s+1} cos^{k-1}
            if (s > 0) r.add_canonical(c * Rational(s), s - 1, k + 1);
            if (k > 0) r.add_canonical(-(c * Rational(k)), s + 1, k - 1);
        }
        return r;
    }

    /// Exact integral over [0, pi], optionally against the sin(theta)
    /// measure. Every term must end up with odd total sin power; the
    /// substitution u = cos(theta) then reduces each term to an integral of
    /// u^k over [-1, 1]. Terms violating the parity rule signal an
    /// out-of-scope integrand.
    Rational integrate(bool with_sin_measure) const {
        Rational acc(0);
        for (const auto& [key, c] : terms_) {
            const int total_sin = key.first + (with_sin_measure ? 1 : 0);
            if (total_sin % 2 == 0)
                throw UnsupportedIntegrand(
                    "TrigPoly: even total sin power is not exactly integrable here");
            // canonical s <= 1, so total_sin == 1: integral of u^k over [-1, 1]
            const int k = key.second;
            if (k % 2 == 0) acc += c * Rational(2, k + 1);
        }
        return acc;
    }

    double eval(double theta) const {
        const double s = std::sin(theta), u = std::cos(theta);
        double acc = 0;
        for (const auto& [key, c] : terms_)
            acc += c.to_double() * (key.first ? s : 1.0) * std::pow(u, key.second);
        return acc;
    }

    friend bool operator==(const TrigPoly& a, const TrigPoly& b) { return a.terms_ == b.terms_; }

private:
    void add_term(const std::pair<int, int>& key, const Rational& c) {
        auto it = terms_.find(key);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[key] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // sin^{2j+p} cos^k -> (1 - cos^2)^j sin^p cos^k, expanded
    void add_canonical(const Rational& c, int sin_power, int cos_power) {
        if (c.is_zero()) return;
        const int j = sin_power / 2;
        const int p = sin_power % 2;
        for (int i = 0; i <= j; ++i) {
            Rational coeff = c * Rational(binomial(static_cast<unsigned>(j),
                                                   static_cast<unsigned>(i)));
            if (i % 2 != 0) coeff = -coeff;
            add_term({p, cos_power + 2 * i}, coeff);
        }
    }

    std::map<std::pair<int, int>, Rational> terms_;
};

} // namespace hatom
