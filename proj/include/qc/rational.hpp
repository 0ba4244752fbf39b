#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qc {

using Rational = mpq_class;
using BigInt = mpz_class;
using BigFloat = mpf_class;  // working precision set per use site, >= 100 bits

// Precision (bits) for all high-precision numeric evaluation.
inline constexpr unsigned kNumericPrecision = 256;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p", or "p/q" with arbitrary-size decimal integers.
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw std::invalid_argument("unparsable rational: " + text);
    q.canonicalize();
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: " + text);
    return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// floor(q) as an exact integer.
inline BigInt rational_floor(const Rational& q) {
    BigInt f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return f;
}

// Nearest integer, halves toward +inf. Used for canonical coset representatives.
inline BigInt rational_round(const Rational& q) {
    return rational_floor(q + Rational(1, 2));
}

// q reduced to [0,1).
inline Rational rational_mod1(const Rational& q) {
    return q - Rational(rational_floor(q));
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline double to_double(const Rational& q) { return q.get_d(); }

inline BigFloat to_bigfloat(const Rational& q) {
    BigFloat f(0, kNumericPrecision);
    f = q;
    return f;
}

}  // namespace qc
