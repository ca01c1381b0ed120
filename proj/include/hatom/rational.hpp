#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hatom {

/// Arbitrary-precision rational, the universal scalar of the exact engine.
/// Always canonical: lowest terms, positive denominator, 0 stored as 0/1.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(int v) : q_(static_cast<long>(v)) {}
    Rational(long v) : q_(v) {}
    Rational(long long v) : q_(static_cast<long>(v)) {}

    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    explicit Rational(const mpz_class& v) : q_(v) {}

    /// Parses "p", "-p", or "p/q" (decimal digits only).
    static Rational from_string(std::string_view s) {
        const auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(parse_int(s), mpz_class(1));
        return Rational(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
    }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    /// Exact integer power; negative exponents require a nonzero base.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0 raised to negative power");
            return Rational(0);
        }
        mpz_class n, d;
        const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
        mpz_pow_ui(n.get_mpz_t(), q_.get_num().get_mpz_t(), mag);
        mpz_pow_ui(d.get_mpz_t(), q_.get_den().get_mpz_t(), mag);
        return e > 0 ? Rational(n, d) : Rational(d, n);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

    double to_double() const { return q_.get_d(); }

    /// "p/q", denominator always explicit ("3" renders as "3/1").
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    /// "p" when the value is an integer, "p/q" otherwise.
    std::string pretty() const {
        if (is_integer()) return q_.get_num().get_str();
        return str();
    }

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    static mpz_class parse_int(std::string_view s) {
        if (s.empty()) throw std::invalid_argument("Rational: empty numeral");
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw std::invalid_argument("Rational: sign without digits");
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: bad numeral '" + std::string(s) + "'");
        return mpz_class(std::string(s), 10);
    }

    mpq_class q_;
};

/// n!, memoized. Thread-safe for concurrent readers.
inline const mpz_class& factorial(unsigned n) {
    static std::vector<mpz_class> cache{mpz_class(1)};
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    while (cache.size() <= n) cache.push_back(cache.back() * mpz_class(cache.size()));
    return cache[n];
}

inline mpz_class binomial(unsigned n, unsigned k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (2k-1)!! with the empty product equal to 1.
inline mpz_class odd_double_factorial(unsigned k) {
    mpz_class r = 1;
    for (unsigned i = 1; i <= k; ++i) r *= 2 * i - 1;
    return r;
}

} // namespace hatom
