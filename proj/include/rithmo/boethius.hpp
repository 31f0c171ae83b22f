#pragma once

// Nicomachus/Boethius ratio classification.
//
// A ratio p:m of positive integers with p > m falls into exactly one
// canonical class, read off the reduced fraction p/m = r + k/n with
// 0 <= k < n and gcd(k, n) = 1:
//
//   k = 0, r = 1   equal                      p = m
//   k = 0, r >= 2  multiple(r)                p = r m
//   r = 1, k = 1   superparticular(n)         p = m (1 + 1/n)
//   r = 1, k >= 2  superpartient(k, n)        p = m (1 + k/n)
//   r >= 2, k = 1  multiple_superparticular   p = m (r + 1/n)
//   r >= 2, k >= 2 multiple_superpartient     p = m (r + k/n)
//
// The classical definition instead demands a witness n that is a proper
// divisor of m. That witness form cannot express every ratio the canonical
// form can (9:4 needs n = m), so classification is canonical and the
// literal divisor-of-m witnesses are enumerated separately in
// all_representations, where k and n need not be coprime. Ratios below 1
// are reported as `other` with the sub_ratio flag; the sub-classes are not
// modeled.

#include "rithmo/exact.hpp"

#include <string>
#include <vector>

namespace rithmo {

enum class RatioKind {
    equal,
    multiple,
    superparticular,
    superpartient,
    multiple_superparticular,
    multiple_superpartient,
    other,
};

std::string to_string(RatioKind kind);

/// Classification outcome. Only the parameters applicable to `kind` are
/// meaningful: whole (r) for the multiple kinds, part_num (k) for the
/// partient kinds, part_den (n) for everything with a fractional part.
/// Parameters a kind implies (r = 1, k = 1) are stored as such; truly
/// absent ones are zero.
struct RatioClass {
    RatioKind kind = RatioKind::other;
    ExactInt whole;     // r
    ExactInt part_num;  // k
    ExactInt part_den;  // n
    bool sub_ratio = false;  // only with kind == other: p < m

    bool operator==(const RatioClass&) const = default;
};

std::string to_string(const RatioClass& rc);

struct ClassificationResult {
    ExactInt p;
    ExactInt m;
    ExactRational reduced;   // p/m in lowest terms
    RatioClass canonical;
    /// Literal witnesses of the classical definition: every class whose
    /// defining equation p = m(r + k/n) holds verbatim with n a proper
    /// divisor of m (n >= 2). Empty when no witness exists (e.g. 9:4) or
    /// when enumeration was skipped for being too large.
    std::vector<RatioClass> all_representations;
    bool witnesses_enumerated = true;
};

/// Classifies the ratio p:m. Throws std::invalid_argument unless p, m >= 1.
/// Witness enumeration is skipped (witnesses_enumerated = false) when
/// m > 10^12, since it requires the divisors of m.
ClassificationResult classify(const ExactInt& p, const ExactInt& m);

/// Evaluates the defining equation of `claimed` on (p, m) exactly,
/// independently of canonicalization; the proper-divisor clause is
/// deliberately not checked. Throws std::invalid_argument for parameters
/// outside their structural ranges (see the table above; coprimality of
/// k and n is not demanded, the literal witness form allows gcd > 1).
bool relation_holds(const ExactInt& p, const ExactInt& m, const RatioClass& claimed);

}  // namespace rithmo
