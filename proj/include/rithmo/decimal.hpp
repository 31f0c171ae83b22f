#pragma once

// High-precision decimal evaluation on top of GMP floats.
//
// A Decimal carries a stated precision in significant decimal digits.
// Internally every value is evaluated with 12 extra guard digits so the
// stated digits are trustworthy after a chain of arithmetic; the guard is
// fixed and documented rather than silently unbounded, so a precision that
// is genuinely too small for a computation (e.g. Binet at large index)
// fails loudly instead of returning garbage.
//
// All decimal claims in this library are precision-qualified; exact
// identity checks never go through this type.

#include "rithmo/exact.hpp"

#include <string>

namespace rithmo {

inline constexpr int kDefaultPrecision = 50;

class Decimal {
  public:
    Decimal() : Decimal(ExactInt(0), kDefaultPrecision) {}
    Decimal(const ExactInt& v, int digits);
    Decimal(const ExactRational& v, int digits);

    static Decimal power_of_ten(int exponent, int digits);

    int digits() const { return digits_; }

    /// Decimal string with `digits()` significant digits.
    std::string str() const;

    Decimal operator+(const Decimal& o) const;
    Decimal operator-(const Decimal& o) const;
    Decimal operator*(const Decimal& o) const;
    /// Throws std::domain_error on division by zero.
    Decimal operator/(const Decimal& o) const;

    Decimal abs() const;
    Decimal sqrt() const;  ///< Throws std::domain_error for negative values.

    /// Nearest integer; halfway cases round toward +infinity.
    ExactInt round_nearest() const;

    int compare(const Decimal& o) const;
    bool operator<(const Decimal& o) const { return compare(o) < 0; }
    bool operator<=(const Decimal& o) const { return compare(o) <= 0; }
    bool operator>(const Decimal& o) const { return compare(o) > 0; }
    bool operator>=(const Decimal& o) const { return compare(o) >= 0; }
    bool operator==(const Decimal& o) const { return compare(o) == 0; }

    bool is_zero() const;
    int sign() const;

  private:
    Decimal(mpf_class v, int digits) : value_(std::move(v)), digits_(digits) {}
    static mp_bitcnt_t bits_for(int digits);

    mpf_class value_;
    int digits_;
};

}  // namespace rithmo
