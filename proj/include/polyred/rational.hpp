#pragma once

#include <gmpxx.h>

#include "polyred/errors.hpp"

#include <string>
#include <string_view>

namespace polyred {

/// Arbitrary-precision integer and fraction. mpq_class keeps every value in
/// lowest terms with a positive denominator after canonicalize().
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const Integer& num, const Integer& den = 1) {
    if (den == 0) {
        throw DomainError("zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned n);
Integer binomial(long n, long k);

/// "p/q" or "p" (denominator 1).
std::string to_string(const Rational& q);

/// Inverse of to_string; accepts an optional sign and an optional "/den".
Rational parse_rational(std::string_view text);

inline int sign_pow(long n) { return (n % 2 == 0) ? 1 : -1; }

}  // namespace polyred
