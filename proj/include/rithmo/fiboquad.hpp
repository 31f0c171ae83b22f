#pragma once

// Fiboquadratic sequences: the interleaving of squares G(m)^2 and products
// G(m)G(m+1) of a generalized Fibonacci sequence.
//
// Two index conventions coexist and differ by exactly one:
//   * generator form is 0-based: a(0) = 1, a(1) = n, a(2) = n^2, ...
//   * general seed form is 1-based: a(1) = G1^2, a(2) = G1 G2, a(3) = G2^2, ...
// The bridge is a_closed(m, n) == general_term(seed (1, n), m + 1). Keeping
// the shift explicit here prevents silent off-by-one bugs downstream.

#include "rithmo/decimal.hpp"
#include "rithmo/exact.hpp"
#include "rithmo/fibcore.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rithmo {

/// Row-to-row multiplier b(m, n) = 1 + (F(m-1) n + F(m-2)) / (F(m) n + F(m-1)),
/// reduced. Throws std::domain_error when the denominator vanishes (never for
/// m >= 0, n >= 1).
ExactRational b_coeff(std::int64_t m, std::int64_t n);

/// a(m, n) built by the recursive multiplier scheme: a(0) = 1 and
///   a(m) = a(m-1) * b((m-1)/2, n)   for odd m,
///   a(m) = a(m-1) * b(m/2 - 1, n)   for even m.
/// Requires m >= 0, n >= 1. Every step must land on an integer; a fractional
/// intermediate would be an internal inconsistency and throws std::logic_error.
ExactInt a_recursive(std::int64_t m, std::int64_t n);

/// Closed form:
///   odd m  -> (F((m-1)/2) n + F((m-1)/2 - 1)) * (F((m+1)/2) n + F((m-1)/2))
///   even m -> (F(m/2) n + F(m/2 - 1))^2
/// Negative m is supported through the extended Fibonacci numbers.
ExactInt a_closed(std::int64_t m, std::int64_t n);

/// 1-based general form over an arbitrary seed:
///   odd j = 2m - 1 -> G(m)^2, even j = 2m -> G(m) G(m+1).
/// Requires j >= 1.
ExactInt general_term(const GeneralizedFibSeed& seed, std::int64_t j);

/// A fiboquadratic sequence in either form. term() accepts any signed index
/// and applies the extension through extended Fibonacci numbers (generator
/// form) or the backward seed recurrence (general form).
class FiboquadSequence {
  public:
    static FiboquadSequence generator(std::int64_t n);
    static FiboquadSequence general(GeneralizedFibSeed seed);

    bool is_generator() const { return !seed_.has_value(); }
    std::int64_t generator_n() const;
    const GeneralizedFibSeed& seed() const;

    ExactInt term(std::int64_t index) const;

    /// "n=2" or "seed=(1,3)"; used in reports.
    std::string describe() const;

  private:
    FiboquadSequence() = default;
    std::int64_t n_ = 0;
    std::optional<GeneralizedFibSeed> seed_;
};

enum class Direction { forward, backward };

struct ConvergenceEntry {
    std::int64_t index;    // ratio is term(index + 1) / term(index)
    ExactRational ratio;
    std::string abs_error;  // |ratio - limit| at the report's precision
};

struct ConvergenceReport {
    std::string sequence;
    Direction direction;
    int precision;
    std::string limit;  // "alpha" or "beta"
    std::vector<ConvergenceEntry> entries;  // sorted by index
    std::optional<std::int64_t> threshold_index;  // first index, in the
        // direction of travel, from which |ratio - limit| stays below 1e-12
};

/// Successive-quotient report against alpha (forward) or beta (backward).
/// Forward covers ratio indices [0, m_max] for generator form and
/// [1, m_max] for seed form; backward covers [-m_max, -1]. Requires
/// m_max >= 4. Throws std::domain_error when a zero term makes a quotient
/// undefined (exotic seeds, e.g. a = 0, already do this forward). The
/// backward scan instead stops at the first zero term above the tail,
/// because the extended columns n = 1 and n = 2 vanish at a few indices
/// in [-5, -1] while their tails still approach beta.
ConvergenceReport convergence_report(const FiboquadSequence& seq, std::int64_t m_max,
                                     int precision, Direction direction);

}  // namespace rithmo
