#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "hatom/errors.hpp"
#include "hatom/polynomial.hpp"
#include "hatom/rational.hpp"

namespace hatom {

/// Finite sum of c * r^k * e^{-beta*r} with a shared decay rate. Closed
/// under d/dr and under multiplication (decay rates add), and exactly
/// integrable on [0, inf) when beta > 0.
class ExpPoly {
public:
    ExpPoly() : beta_(1) {}

    ExpPoly(const Polynomial& p, Rational beta) : beta_(std::move(beta)) {
        const auto& c = p.coeffs();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (!c[k].is_zero()) terms_[static_cast<int>(k)] = c[k];
    }

    static ExpPoly term(Rational coeff, int power, Rational beta) {
        if (power < 0) throw std::invalid_argument("ExpPoly: negative power");
        ExpPoly f;
        f.beta_ = std::move(beta);
        if (!coeff.is_zero()) f.terms_[power] = std::move(coeff);
        return f;
    }

    const Rational& beta() const { return beta_; }
    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

    ExpPoly& operator+=(const ExpPoly& o) {
        if (!o.is_zero() && !is_zero() && !(beta_ == o.beta_))
            throw std::invalid_argument("ExpPoly: adding terms with different decay rates");
        if (is_zero()) beta_ = o.beta_;
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }

    friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
    friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a += b.scaled(Rational(-1)); }

    friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
        ExpPoly r;
        r.beta_ = a.beta_ + b.beta_;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
        return r;
    }

    ExpPoly scaled(const Rational& s) const {
        ExpPoly r;
        r.beta_ = beta_;
        if (s.is_zero()) return r;
        for (const auto& [k, c] : terms_) r.terms_[k] = c * s;
        return r;
    }

    /// Multiplies by r^shift; power must stay nonnegative on every term.
    ExpPoly times_power(int shift) const {
        ExpPoly r;
        r.beta_ = beta_;
        for (const auto& [k, c] : terms_) {
            if (k + shift < 0)
                throw std::domain_error("ExpPoly: power would become negative");
            r.terms_[k + shift] = c;
        }
        return r;
    }

    /// Exact d/dr by the product rule.
    ExpPoly derivative() const {
        ExpPoly r;
        r.beta_ = beta_;
        for (const auto& [k, c] : terms_) {
            if (k > 0) r.add_term(k - 1, c * Rational(k));
            r.add_term(k, -(c * beta_));
        }
        return r;
    }

    /// Exact integral over [0, inf): sum of c_k * k! / beta^{k+1}.
    Rational integrate() const {
        if (beta_.sign() <= 0 && !is_zero())
            throw DivergentIntegral("ExpPoly: decay rate must be positive");
        Rational acc(0);
        for (const auto& [k, c] : terms_)
            acc += c * Rational(factorial(static_cast<unsigned>(k))) * beta_.pow(-(k + 1));
        return acc;
    }

    double eval(double r) const {
        double poly = 0;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            int next = (std::next(it) == terms_.rend()) ? 0 : std::next(it)->first;
            poly += it->second.to_double();
            poly *= std::pow(r, it->first - next);
        }
        return poly * std::exp(-beta_.to_double() * r);
    }

    friend bool operator==(const ExpPoly& a, const ExpPoly& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.beta_ == b.beta_ && a.terms_ == b.terms_;
    }

private:
    void add_term(int k, const Rational& c) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[k] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<int, Rational> terms_;
    Rational beta_;
};

} // namespace hatom
