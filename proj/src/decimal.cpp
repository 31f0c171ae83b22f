#include "rithmo/decimal.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace rithmo {

namespace {
constexpr int kGuardDigits = 12;
constexpr double kBitsPerDigit = 3.3219280948873623;  // log2(10)
}  // namespace

mp_bitcnt_t Decimal::bits_for(int digits) {
    if (digits < 1) {
        throw std::invalid_argument("Decimal: precision must be at least 1 digit");
    }
    return static_cast<mp_bitcnt_t>(
        std::ceil((digits + kGuardDigits) * kBitsPerDigit));
}

Decimal::Decimal(const ExactInt& v, int digits)
    : value_(0, bits_for(digits)), digits_(digits) {
    value_ = mpf_class(v, bits_for(digits));
}

Decimal::Decimal(const ExactRational& v, int digits)
    : value_(0, bits_for(digits)), digits_(digits) {
    mpf_class num(v.get_num(), bits_for(digits));
    mpf_class den(v.get_den(), bits_for(digits));
    value_ = num / den;
}

Decimal Decimal::power_of_ten(int exponent, int digits) {
    mp_bitcnt_t bits = bits_for(digits);
    mpf_class ten(10, bits);
    mpf_class r(0, bits);
    mpf_pow_ui(r.get_mpf_t(), ten.get_mpf_t(),
               static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent < 0) {
        r = mpf_class(1, bits) / r;
    }
    return Decimal(std::move(r), digits);
}

std::string Decimal::str() const {
    mp_exp_t exp = 0;
    std::string digits = value_.get_str(exp, 10, static_cast<std::size_t>(digits_));
    bool negative = !digits.empty() && digits[0] == '-';
    if (negative) digits.erase(0, 1);
    if (digits.empty()) return "0";

    std::string out;
    if (exp <= 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp), '0') + digits;
    } else if (static_cast<std::size_t>(exp) >= digits.size()) {
        out = digits + std::string(static_cast<std::size_t>(exp) - digits.size(), '0');
    } else {
        out = digits.substr(0, static_cast<std::size_t>(exp)) + "." +
              digits.substr(static_cast<std::size_t>(exp));
    }
    return negative ? "-" + out : out;
}

Decimal Decimal::operator+(const Decimal& o) const {
    int d = std::max(digits_, o.digits_);
    return Decimal(mpf_class(value_ + o.value_, bits_for(d)), d);
}

Decimal Decimal::operator-(const Decimal& o) const {
    int d = std::max(digits_, o.digits_);
    return Decimal(mpf_class(value_ - o.value_, bits_for(d)), d);
}

Decimal Decimal::operator*(const Decimal& o) const {
    int d = std::max(digits_, o.digits_);
    return Decimal(mpf_class(value_ * o.value_, bits_for(d)), d);
}

Decimal Decimal::operator/(const Decimal& o) const {
    if (o.is_zero()) {
        throw std::domain_error("Decimal: division by zero");
    }
    int d = std::max(digits_, o.digits_);
    return Decimal(mpf_class(value_ / o.value_, bits_for(d)), d);
}

Decimal Decimal::abs() const {
    mpf_class r(0, value_.get_prec());
    mpf_abs(r.get_mpf_t(), value_.get_mpf_t());
    return Decimal(std::move(r), digits_);
}

Decimal Decimal::sqrt() const {
    if (sign() < 0) {
        throw std::domain_error("Decimal: square root of a negative value");
    }
    mpf_class r(0, value_.get_prec());
    mpf_sqrt(r.get_mpf_t(), value_.get_mpf_t());
    return Decimal(std::move(r), digits_);
}

ExactInt Decimal::round_nearest() const {
    mpf_class shifted = value_ + mpf_class(0.5, value_.get_prec());
    mpf_class floored(0, value_.get_prec());
    mpf_floor(floored.get_mpf_t(), shifted.get_mpf_t());
    ExactInt out;
    mpz_set_f(out.get_mpz_t(), floored.get_mpf_t());
    return out;
}

int Decimal::compare(const Decimal& o) const {
    return mpf_cmp(value_.get_mpf_t(), o.value_.get_mpf_t());
}

bool Decimal::is_zero() const { return mpf_sgn(value_.get_mpf_t()) == 0; }

int Decimal::sign() const { return mpf_sgn(value_.get_mpf_t()); }

}  // namespace rithmo
