#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hatom/rational.hpp"

namespace hatom {

/// Dense polynomial over Rational. coeffs()[k] multiplies x^k; trailing
/// zeros are trimmed, so the zero polynomial has an empty coefficient vector.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(Rational v) { return Polynomial({std::move(v)}); }
    static Polynomial x() { return Polynomial({Rational(0), Rational(1)}); }

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    /// Smallest k with a nonzero coefficient; -1 for the zero polynomial.
    int lowest_power() const {
        for (std::size_t k = 0; k < c_.size(); ++k)
            if (!c_[k].is_zero()) return static_cast<int>(k);
        return -1;
    }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<std::size_t>(k)];
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k < a.c_.size()) r[k] += a.c_[k];
            if (k < b.c_.size()) r[k] += b.c_[k];
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        return a + b.scaled(Rational(-1));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial scaled(const Rational& s) const {
        std::vector<Rational> r(c_);
        for (auto& v : r) v *= s;
        return Polynomial(std::move(r));
    }

    /// Multiplies by x^k.
    Polynomial shifted(int k) const {
        if (is_zero()) return Polynomial();
        std::vector<Rational> r(c_.size() + static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
        return Polynomial(std::move(r));
    }

    /// p(s*x).
    Polynomial composed_linear(const Rational& s) const {
        std::vector<Rational> r(c_);
        Rational f(1);
        for (std::size_t k = 1; k < r.size(); ++k) {
            f *= s;
            r[k] *= f;
        }
        return Polynomial(std::move(r));
    }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * Rational(static_cast<long>(k));
        return Polynomial(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
        return acc;
    }

    /// Rescales to coprime integer coefficients with positive leading
    /// coefficient. The overall scale is absorbed by the caller's
    /// normalization constant, so only the shape matters.
    Polynomial primitive() const {
        if (is_zero()) return Polynomial();
        mpz_class den_lcm = 1;
        for (const auto& v : c_)
            if (!v.is_zero()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), v.den().get_mpz_t());
        mpz_class num_gcd = 0;
        for (const auto& v : c_) {
            if (v.is_zero()) continue;
            const mpz_class n = v.num() * den_lcm / v.den();
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale(den_lcm, num_gcd);
        if (c_.back().sign() < 0) scale = -scale;
        return scaled(scale);
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

} // namespace hatom
