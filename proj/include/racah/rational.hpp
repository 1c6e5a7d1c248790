#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdlib>
#include <iosfwd>
#include <string>
#include <utility>

#include "racah/errors.hpp"

namespace racah {

/// Arbitrary-precision rational scalar.
///
/// Always stored reduced to lowest terms with positive denominator, so
/// equality is plain representation equality and exact zero tests are
/// meaningful. All arithmetic is exact; there is no rounding anywhere in
/// this type. Values are immutable from the point of view of concurrent
/// readers: the library never mutates a shared Rational.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_((signed long)n) {}
    Rational(long num, long den) : v_((signed long)num, (signed long)den) {
        if (den == 0) throw PoleError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p/q" or "p" (optionally signed). Rejects malformed input.
    static Rational parse(const std::string& text);

    /// Renders as "p/q", or "p" when the value is an integer.
    std::string str() const { return v_.get_str(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// True if the value is an integer and <= bound.
    bool is_integer_leq(long bound) const {
        return is_integer() && v_.get_num() <= bound;
    }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    /// Floor as an arbitrary-precision integer.
    mpz_class floor() const {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
        return q;
    }

    double to_double() const { return v_.get_d(); }

    /// log|value| computed without overflowing doubles on huge operands.
    double log_abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw PoleError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

Rational abs(const Rational& a);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace racah
