#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace fraclocdim {

/**
 * Exact rational backed by GMP's mpq. Always canonical: gcd(|num|, den) == 1
 * and den >= 1, so zero is 0/1 and equality is structural.
 */
class Rational {
public:
    Rational() = default;
    Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(long long num, long long den) {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        q_ = mpq_class(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
        q_.canonicalize();
    }
    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "p/q" or "p".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw std::invalid_argument("not a rational: '" + s + "'");
        return Rational(std::move(q));
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }
    bool is_zero() const { return sgn(q_) == 0; }
    int sign() const { return sgn(q_); }
    double to_double() const { return q_.get_d(); }
    const mpq_class& raw() const { return q_; }

    /// "p/q", or "p" when the denominator is 1.
    std::string to_string() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("rational division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class q_;
};

}  // namespace fraclocdim
