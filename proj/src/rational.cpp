#include "twb/rational.hpp"

#include <string>

#include "twb/errors.hpp"

namespace twb {

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    Integer num;
    Integer den = 1;
    try {
        if (slash == std::string_view::npos) {
            num = Integer(std::string(text), 10);
        } else {
            num = Integer(std::string(text.substr(0, slash)), 10);
            den = Integer(std::string(text.substr(slash + 1)), 10);
        }
    } catch (const std::invalid_argument&) {
        throw MathError(Errc::InvalidArgument, "malformed rational '" + std::string(text) + "'");
    }
    if (den == 0)
        throw MathError(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational pow(const Rational& q, long e) {
    if (e < 0) {
        if (q == 0)
            throw MathError(Errc::DivisionByZero, "0 raised to a negative power");
        Rational inv = 1 / q;
        return pow(inv, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

long p_adic_order(const Integer& n, unsigned long p) {
    if (n == 0)
        throw MathError(Errc::InvalidArgument, "p-adic order of zero");
    Integer p_z = p;
    Integer rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p_z.get_mpz_t()));
}

std::optional<long> p_adic_order(const Rational& q, unsigned long p) {
    if (q == 0)
        return std::nullopt;
    return p_adic_order(q.get_num(), p) - p_adic_order(q.get_den(), p);
}

}  // namespace twb
