#pragma once

#include <gmpxx.h>

#include "racah/rational.hpp"

namespace racah {

/// Rising factorial (a)_m = a (a+1) ... (a+m-1); returns 1 for m = 0.
Rational pochhammer(const Rational& a, long m);

/// m! as an exact rational. m must be >= 0.
Rational factorial(long m);

/// Binomial coefficient C(n, k) as an exact integer-valued rational;
/// zero for k < 0 or k > n.
Rational binomial(long n, long k);

/// Natural log of Gamma(a) in double precision, a > 0.
/// Used only for weight normalization and float spot checks; relation
/// verification never touches this path.
double log_gamma(double a);

/// The argument of a Gamma factor before its integer offset. Weight values
/// keep these symbolic; only the float path ever evaluates them.
struct GammaBase {
    Rational value;

    explicit GammaBase(Rational v) : value(std::move(v)) {
        if (value.is_integer() && value.sign() <= 0)
            throw PoleError("GammaBase: nonpositive integer argument " + value.str());
    }

    friend bool operator==(const GammaBase& a, const GammaBase& b) { return a.value == b.value; }
    friend bool operator<(const GammaBase& a, const GammaBase& b) { return a.value < b.value; }
};

} // namespace racah
