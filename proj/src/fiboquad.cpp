#include "rithmo/fiboquad.hpp"

#include <stdexcept>

namespace rithmo {

ExactRational b_coeff(std::int64_t m, std::int64_t n) {
    ExactInt den = fib(m) * n + fib(m - 1);
    if (den == 0) {
        throw std::domain_error("b_coeff: zero denominator at m = " + std::to_string(m) +
                                ", n = " + std::to_string(n));
    }
    // 1 + (F(m-1) n + F(m-2)) / (F(m) n + F(m-1)) over a common denominator.
    return make_rational(fib(m + 1) * n + fib(m), den);
}

ExactInt a_recursive(std::int64_t m, std::int64_t n) {
    if (m < 0) {
        throw std::invalid_argument("a_recursive: index must be >= 0");
    }
    if (n < 1) {
        throw std::invalid_argument("a_recursive: generator must be >= 1");
    }
    ExactRational acc(1);
    for (std::int64_t i = 1; i <= m; ++i) {
        std::int64_t bi = (i % 2 == 1) ? (i - 1) / 2 : i / 2 - 1;
        acc *= b_coeff(bi, n);
        if (acc.get_den() != 1) {
            throw std::logic_error("a_recursive: non-integer intermediate at index " +
                                   std::to_string(i));
        }
    }
    return acc.get_num();
}

ExactInt a_closed(std::int64_t m, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("a_closed: generator must be >= 1");
    }
    if (m % 2 == 0) {
        std::int64_t h = m / 2;
        ExactInt f = fib(h) * n + fib(h - 1);
        return f * f;
    }
    std::int64_t h = (m - 1) / 2;  // m odd, so the division is exact for any sign
    return (fib(h) * n + fib(h - 1)) * (fib(h + 1) * n + fib(h));
}

ExactInt general_term(const GeneralizedFibSeed& seed, std::int64_t j) {
    if (j < 1) {
        throw std::invalid_argument("general_term: index must be >= 1");
    }
    if (j % 2 == 1) {
        ExactInt g = gfib(seed, (j + 1) / 2);
        return g * g;
    }
    return gfib(seed, j / 2) * gfib(seed, j / 2 + 1);
}

FiboquadSequence FiboquadSequence::generator(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("FiboquadSequence: generator must be >= 1");
    }
    FiboquadSequence s;
    s.n_ = n;
    return s;
}

FiboquadSequence FiboquadSequence::general(GeneralizedFibSeed seed) {
    FiboquadSequence s;
    s.seed_ = std::move(seed);
    return s;
}

std::int64_t FiboquadSequence::generator_n() const {
    if (!is_generator()) {
        throw std::logic_error("FiboquadSequence: not in generator form");
    }
    return n_;
}

const GeneralizedFibSeed& FiboquadSequence::seed() const {
    if (is_generator()) {
        throw std::logic_error("FiboquadSequence: not in general seed form");
    }
    return *seed_;
}

ExactInt FiboquadSequence::term(std::int64_t index) const {
    if (is_generator()) {
        return a_closed(index, n_);
    }
    // 1-based interleave, extended to any integer via the backward recurrence:
    // odd j = 2m - 1 -> G(m)^2, even j = 2m -> G(m) G(m+1). Both divisions
    // below are exact, so truncation toward zero is harmless.
    if (index % 2 != 0) {
        ExactInt g = gfib(*seed_, (index + 1) / 2);
        return g * g;
    }
    return gfib(*seed_, index / 2) * gfib(*seed_, index / 2 + 1);
}

std::string FiboquadSequence::describe() const {
    if (is_generator()) {
        return "n=" + std::to_string(n_);
    }
    return "seed=(" + seed_->a.get_str() + "," + seed_->b.get_str() + ")";
}

ConvergenceReport convergence_report(const FiboquadSequence& seq, std::int64_t m_max,
                                     int precision, Direction direction) {
    if (m_max < 4) {
        throw std::invalid_argument("convergence_report: m_max must be >= 4");
    }
    GoldenConstants c = golden_constants(precision);
    const Decimal& limit = (direction == Direction::forward) ? c.alpha : c.beta;
    const Decimal bound = Decimal::power_of_ten(-12, precision);

    std::int64_t lo, hi;
    if (direction == Direction::forward) {
        lo = seq.is_generator() ? 0 : 1;
        hi = m_max;
    } else {
        lo = -m_max;
        hi = -1;
    }

    ConvergenceReport report;
    report.sequence = seq.describe();
    report.direction = direction;
    report.precision = precision;
    report.limit = (direction == Direction::forward) ? "alpha" : "beta";

    std::vector<bool> below;
    for (std::int64_t m = lo; m <= hi; ++m) {
        ExactInt den = seq.term(m);
        if (den == 0) {
            if (direction == Direction::backward && !report.entries.empty()) {
                // The extension can vanish at a few indices near the origin
                // (generator columns n = 1 and n = 2 do); the quotient is
                // undefined there, so the report keeps the clean tail that
                // the backward limit is about and stops.
                break;
            }
            throw std::domain_error("convergence_report: zero term at index " +
                                    std::to_string(m));
        }
        ExactRational ratio = make_rational(seq.term(m + 1), den);
        Decimal err = (Decimal(ratio, precision) - limit).abs();
        report.entries.push_back({m, ratio, err.str()});
        below.push_back(err < bound);
    }

    // First index, in the direction of travel, from which the bound holds
    // through the rest of the scanned range. Entries are ascending, so this
    // is the longest all-below suffix (forward) or prefix (backward).
    if (direction == Direction::forward) {
        std::size_t start = below.size();
        while (start > 0 && below[start - 1]) --start;
        if (start < below.size()) {
            report.threshold_index = report.entries[start].index;
        }
    } else {
        std::size_t end = 0;
        while (end < below.size() && below[end]) ++end;
        if (end > 0) {
            report.threshold_index = report.entries[end - 1].index;
        }
    }
    return report;
}

}  // namespace rithmo
