#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace twb {

/// Arbitrary-precision fraction. gmpxx keeps every arithmetic result in
/// lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Always "num/den", including "0/1" and "5/1".
std::string to_string(const Rational& q);

/// Accepts "a/b" or "a"; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, long e);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

/// Exponent of p in a nonzero integer.
long p_adic_order(const Integer& n, unsigned long p);

/// nullopt stands for +infinity (q == 0).
std::optional<long> p_adic_order(const Rational& q, unsigned long p);

}  // namespace twb
