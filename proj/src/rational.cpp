#include "racah/rational.hpp"

#include <cctype>
#include <ostream>

namespace racah {

Rational Rational::parse(const std::string& text) {
    std::string s;
    s.reserve(text.size());
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ConfigError("Rational::parse: empty literal");

    auto valid = [](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(part[i]))) return false;
        return true;
    };

    auto slash = s.find('/');
    if (slash == std::string::npos) {
        if (!valid(s, true)) throw ConfigError("Rational::parse: bad literal '" + text + "'");
    } else {
        if (!valid(s.substr(0, slash), true) || !valid(s.substr(slash + 1), false))
            throw ConfigError("Rational::parse: bad literal '" + text + "'");
        if (mpz_class(s.substr(slash + 1)) == 0)
            throw PoleError("Rational::parse: zero denominator in '" + text + "'");
    }
    Rational r;
    r.v_ = mpq_class(s);
    r.v_.canonicalize();
    return r;
}

double Rational::log_abs() const {
    if (is_zero()) throw SignError("Rational::log_abs: value is zero");
    signed long en, ed;
    double dn = mpz_get_d_2exp(&en, v_.get_num().get_mpz_t());
    double dd = mpz_get_d_2exp(&ed, v_.get_den().get_mpz_t());
    return std::log(std::fabs(dn)) - std::log(std::fabs(dd)) +
           (static_cast<double>(en) - static_cast<double>(ed)) * std::log(2.0);
}

Rational abs(const Rational& a) { return a.sign() < 0 ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace racah
