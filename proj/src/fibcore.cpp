#include "rithmo/fibcore.hpp"

#include <utility>

namespace rithmo {

namespace {

// (F(k), F(k+1)) for k >= 0 by fast doubling:
//   F(2t)   = F(t) * (2 F(t+1) - F(t))
//   F(2t+1) = F(t)^2 + F(t+1)^2
std::pair<ExactInt, ExactInt> fib_pair(std::uint64_t k) {
    if (k == 0) return {ExactInt(0), ExactInt(1)};
    auto [a, b] = fib_pair(k >> 1);
    ExactInt c = a * (2 * b - a);
    ExactInt d = a * a + b * b;
    if (k & 1) return {d, c + d};
    return {c, d};
}

}  // namespace

ExactInt fib(std::int64_t k) {
    if (k >= 0) {
        return fib_pair(static_cast<std::uint64_t>(k)).first;
    }
    std::uint64_t n = static_cast<std::uint64_t>(-(k + 1)) + 1;  // |k|, avoids INT64_MIN overflow
    ExactInt f = fib_pair(n).first;
    return (n % 2 == 0) ? ExactInt(-f) : f;
}

ExactInt gfib(const GeneralizedFibSeed& seed, std::int64_t m) {
    // G(m) = a F(m-2) + b F(m-1); the identity also covers the backward
    // extension G(m-1) = G(m+1) - G(m).
    return seed.a * fib(m - 2) + seed.b * fib(m - 1);
}

ExactInt characteristic(const GeneralizedFibSeed& seed) {
    return seed.a * seed.a + seed.a * seed.b - seed.b * seed.b;
}

GoldenElement phi_power(std::int64_t k) {
    if (k < 0) {
        throw std::invalid_argument("phi_power: index must be nonnegative");
    }
    GoldenElement result{0, 1};       // phi^0 = 1
    const GoldenElement phi{1, 0};
    for (std::int64_t i = 0; i < k; ++i) {
        result = result * phi;
    }
    return result;
}

ExactRational fib_ratio(std::int64_t k) {
    if (k == 0) {
        throw std::domain_error("fib_ratio: F(0) = 0, quotient undefined");
    }
    return make_rational(fib(k + 1), fib(k));
}

Decimal decimal_pow(const Decimal& base, std::int64_t exponent) {
    bool invert = exponent < 0;
    std::uint64_t e = invert ? static_cast<std::uint64_t>(-(exponent + 1)) + 1
                             : static_cast<std::uint64_t>(exponent);
    Decimal result(ExactInt(1), base.digits());
    Decimal acc = base;
    while (e > 0) {
        if (e & 1) result = result * acc;
        acc = acc * acc;
        e >>= 1;
    }
    if (invert) {
        return Decimal(ExactInt(1), base.digits()) / result;
    }
    return result;
}

GoldenConstants golden_constants(int precision) {
    Decimal sqrt5 = Decimal(ExactInt(5), precision).sqrt();
    Decimal one(ExactInt(1), precision);
    Decimal two(ExactInt(2), precision);
    return {(one + sqrt5) / two, (one - sqrt5) / two, precision};
}

Decimal phi_approx(PhiMethod method, int iterations, int precision) {
    if (iterations < 1) {
        throw std::invalid_argument("phi_approx: iterations must be >= 1");
    }
    if (precision < 10) {
        throw std::invalid_argument("phi_approx: precision must be >= 10 digits");
    }
    const Decimal one(ExactInt(1), precision);
    switch (method) {
        case PhiMethod::closed_form:
            return golden_constants(precision).alpha;
        case PhiMethod::convergent:
            return Decimal(fib_ratio(iterations), precision);
        case PhiMethod::nested_radical: {
            Decimal x = one;
            for (int i = 0; i < iterations; ++i) {
                x = (one + x).sqrt();
            }
            return x;
        }
        case PhiMethod::continued_fraction: {
            Decimal x = one;
            for (int i = 1; i < iterations; ++i) {
                x = one + one / x;
            }
            return x;
        }
    }
    throw std::invalid_argument("phi_approx: unknown method");
}

BinetReport binet_check(std::int64_t k, int precision) {
    if (k > 300 || k < -300) {
        throw std::invalid_argument("binet_check: index budget is |k| <= 300");
    }
    GoldenConstants c = golden_constants(precision);
    Decimal sqrt5 = c.alpha - c.beta;
    Decimal value = (decimal_pow(c.alpha, k) - decimal_pow(c.beta, k)) / sqrt5;
    ExactInt rounded = value.round_nearest();
    Decimal residual = (value - Decimal(rounded, precision)).abs();
    Decimal quarter(make_rational(1, 4), precision);
    if (residual > quarter) {
        throw precision_error("binet_check: residual " + residual.str() +
                              " exceeds 0.25 at " + std::to_string(precision) +
                              " digits for k = " + std::to_string(k));
    }
    return {k, precision, fib(k), rounded, residual, rounded == fib(k)};
}

}  // namespace rithmo
