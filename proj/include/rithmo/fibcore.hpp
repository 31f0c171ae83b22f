#pragma once

// Extended Fibonacci sequence, generalized Fibonacci sequences with their
// characteristic, and the golden-ratio toolbox (ring Z[phi], decimal
// approximators, Binet cross-check).
//
// Indices are signed throughout: F(-k) = (-1)^(k+1) F(k), and generalized
// sequences extend below index 1 by the backward recurrence
// G(m-1) = G(m+1) - G(m).

#include "rithmo/decimal.hpp"
#include "rithmo/exact.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rithmo {

/// Extended Fibonacci number F(k) for any signed index, via fast doubling.
ExactInt fib(std::int64_t k);

/// Seed pair (a, b) = (G1, G2) of a generalized Fibonacci sequence.
/// The all-zero seed is rejected.
struct GeneralizedFibSeed {
    ExactInt a;
    ExactInt b;

    GeneralizedFibSeed(ExactInt a_, ExactInt b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0 && b == 0) {
            throw std::invalid_argument("GeneralizedFibSeed: (0, 0) is not a valid seed");
        }
    }

    bool operator==(const GeneralizedFibSeed&) const = default;
};

/// G(m) with G(1) = a, G(2) = b, G(m+1) = G(m) + G(m-1), any signed m.
ExactInt gfib(const GeneralizedFibSeed& seed, std::int64_t m);

/// The characteristic a^2 + ab - b^2, i.e. det [[G3, G2], [G2, G1]].
ExactInt characteristic(const GeneralizedFibSeed& seed);

/// Element u*phi + v of the ring Z[phi], where phi^2 = phi + 1.
struct GoldenElement {
    ExactInt u;
    ExactInt v;

    GoldenElement operator*(const GoldenElement& o) const {
        // (u1 phi + v1)(u2 phi + v2) = (u1 u2 + u1 v2 + u2 v1) phi + (u1 u2 + v1 v2)
        return {u * o.u + u * o.v + o.u * v, u * o.u + v * o.v};
    }

    bool operator==(const GoldenElement&) const = default;
};

/// phi^k in Z[phi] by k successive ring multiplications (k >= 0).
/// Lands on (F(k), F(k-1)) without ever calling fib; agreement with fib
/// is a cross-check property, not an implementation dependency.
GoldenElement phi_power(std::int64_t k);

/// F(k+1)/F(k), reduced. Throws std::domain_error at k = 0.
ExactRational fib_ratio(std::int64_t k);

enum class PhiMethod {
    closed_form,         // (1 + sqrt 5) / 2
    convergent,          // F(iterations + 1) / F(iterations)
    nested_radical,      // x <- sqrt(1 + x), starting from 1
    continued_fraction,  // depth-limited unrolling of 1 + 1/(1 + 1/...)
};

/// Decimal approximation of phi. Requires iterations >= 1 and
/// precision >= 10 significant digits.
Decimal phi_approx(PhiMethod method, int iterations, int precision);

struct GoldenConstants {
    Decimal alpha;  // phi = (1 + sqrt 5) / 2
    Decimal beta;   // -1/phi = (1 - sqrt 5) / 2
    int precision;
};

GoldenConstants golden_constants(int precision);

class precision_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct BinetReport {
    std::int64_t k;
    int precision;
    ExactInt expected;  // fib(k)
    ExactInt rounded;   // nearest integer of the Binet evaluation
    Decimal residual;   // |value - rounded| before rounding
    bool matches;
};

/// Evaluates (alpha^k - beta^k)/(alpha - beta) at `precision` significant
/// digits and compares the rounded result with fib(k). Index budget is
/// |k| <= 300. Throws precision_error when the pre-rounding residual
/// exceeds 0.25, i.e. the requested precision cannot resolve F(k).
BinetReport binet_check(std::int64_t k, int precision);

/// Raises a decimal value to a signed integer power by binary exponentiation.
Decimal decimal_pow(const Decimal& base, std::int64_t exponent);

}  // namespace rithmo
