#pragma once

// Exact arithmetic value types used throughout the library.
//
// ExactInt and ExactRational are GMP's arbitrary-precision integer and
// rational types. Rationals are kept canonical: fully reduced, with a
// strictly positive denominator. Every helper in this header preserves
// that invariant.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rithmo {

using ExactInt = mpz_class;
using ExactRational = mpq_class;

/// Builds a reduced rational with positive denominator.
/// Throws std::domain_error when den is zero.
inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) {
        throw std::domain_error("make_rational: zero denominator");
    }
    ExactRational q(num, den);
    q.canonicalize();
    return q;
}

/// (-1)^e for any signed exponent.
inline ExactInt neg_one_pow(std::int64_t e) {
    return (e % 2 == 0) ? ExactInt(1) : ExactInt(-1);
}

inline bool is_perfect_square(const ExactInt& v) {
    if (v < 0) return false;
    return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

/// "num/den" in lowest terms; plain "num" when the denominator is 1.
inline std::string to_string(const ExactRational& q) { return q.get_str(); }

}  // namespace rithmo
