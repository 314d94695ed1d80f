#pragma once

#include <gmpxx.h>

#include <string>

#include "rigidity/errors.hpp"

namespace rigidity {

// Arbitrary-precision integer and rational. GMP keeps rationals canonical
// (denominator > 0, gcd(|num|, den) = 1) as long as values are produced by
// arithmetic or by make_rational below; mpq_class{num, den} alone does NOT
// canonicalize, so raw construction goes through make_rational.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Int num, Int den) {
    if (den == 0) throw DimensionError("rational with zero denominator");
    Rational q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline bool is_canonical(const Rational& q) {
    if (q.get_den() <= 0) return false;
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return q.get_num() == 0 ? q.get_den() == 1 : g == 1;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// 2^-k as an exact rational.
inline Rational dyadic(unsigned k) {
    Int den = 1;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
    return make_rational(Int(1), den);
}

}  // namespace rigidity
