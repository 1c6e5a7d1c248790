#include "racah/scalar.hpp"

#include <cmath>

namespace racah {

Rational pochhammer(const Rational& a, long m) {
    if (m < 0) throw RangeError("pochhammer: negative order");
    Rational acc(1);
    Rational term = a;
    for (long i = 0; i < m; ++i) {
        acc *= term;
        term += Rational(1);
    }
    return acc;
}

Rational factorial(long m) {
    if (m < 0) throw RangeError("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
    return Rational(f);
}

Rational binomial(long n, long k) {
    if (k < 0 || k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

double log_gamma(double a) {
    if (!(a > 0.0)) throw std::domain_error("log_gamma: argument must be positive");
    return std::lgamma(a);
}

} // namespace racah
