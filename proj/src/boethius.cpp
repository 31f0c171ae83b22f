#include "rithmo/boethius.hpp"

#include <algorithm>
#include <stdexcept>

namespace rithmo {

std::string to_string(RatioKind kind) {
    switch (kind) {
        case RatioKind::equal: return "equal";
        case RatioKind::multiple: return "multiple";
        case RatioKind::superparticular: return "superparticular";
        case RatioKind::superpartient: return "superpartient";
        case RatioKind::multiple_superparticular: return "multiple_superparticular";
        case RatioKind::multiple_superpartient: return "multiple_superpartient";
        case RatioKind::other: return "other";
    }
    return "other";
}

std::string to_string(const RatioClass& rc) {
    switch (rc.kind) {
        case RatioKind::equal:
            return "equal";
        case RatioKind::multiple:
            return "multiple(r=" + rc.whole.get_str() + ")";
        case RatioKind::superparticular:
            return "superparticular(n=" + rc.part_den.get_str() + ")";
        case RatioKind::superpartient:
            return "superpartient(k=" + rc.part_num.get_str() +
                   ",n=" + rc.part_den.get_str() + ")";
        case RatioKind::multiple_superparticular:
            return "multiple_superparticular(r=" + rc.whole.get_str() +
                   ",n=" + rc.part_den.get_str() + ")";
        case RatioKind::multiple_superpartient:
            return "multiple_superpartient(r=" + rc.whole.get_str() +
                   ",k=" + rc.part_num.get_str() + ",n=" + rc.part_den.get_str() + ")";
        case RatioKind::other:
            return rc.sub_ratio ? "other(sub-ratio)" : "other";
    }
    return "other";
}

namespace {

RatioClass canonical_class(const ExactRational& reduced) {
    const ExactInt& num = reduced.get_num();
    const ExactInt& den = reduced.get_den();
    if (num < den) {
        return {RatioKind::other, 0, 0, 0, true};
    }
    ExactInt r = num / den;
    ExactInt k = num % den;
    if (k == 0) {
        if (r == 1) return {RatioKind::equal, 0, 0, 0, false};
        return {RatioKind::multiple, r, 0, 0, false};
    }
    if (r == 1) {
        if (k == 1) return {RatioKind::superparticular, 1, 1, den, false};
        return {RatioKind::superpartient, 1, k, den, false};
    }
    if (k == 1) return {RatioKind::multiple_superparticular, r, 1, den, false};
    return {RatioKind::multiple_superpartient, r, k, den, false};
}

// Ascending proper divisors >= 2 of m (m itself excluded). Callers cap m at
// 10^12, so plain machine words suffice.
std::vector<unsigned long> proper_divisors(unsigned long m) {
    std::vector<unsigned long> lo, hi;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            lo.push_back(d);
            unsigned long q = m / d;
            if (q != d && q != m) hi.push_back(q);
        }
    }
    std::reverse(hi.begin(), hi.end());
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;
}

}  // namespace

ClassificationResult classify(const ExactInt& p, const ExactInt& m) {
    if (p < 1 || m < 1) {
        throw std::invalid_argument("classify: p and m must be positive");
    }
    ClassificationResult result;
    result.p = p;
    result.m = m;
    result.reduced = make_rational(p, m);
    result.canonical = canonical_class(result.reduced);

    if (m > ExactInt("1000000000000")) {
        result.witnesses_enumerated = false;
        return result;
    }

    if (p > m && p % m == 0) {
        result.all_representations.push_back({RatioKind::multiple, p / m, 0, 0, false});
    }
    if (p > m) {
        ExactInt r = p / m;
        ExactInt rem = p % m;
        if (rem != 0) {
            for (unsigned long n : proper_divisors(m.get_ui())) {
                ExactInt d = m / n;
                if (rem % d != 0) continue;
                ExactInt k = rem / d;  // k < n is automatic: k*d = rem < m = n*d
                if (k == 1) {
                    result.all_representations.push_back(
                        {r == 1 ? RatioKind::superparticular
                                : RatioKind::multiple_superparticular,
                         r, 1, ExactInt(n), false});
                } else if (k >= 2 && k <= n - 1) {
                    result.all_representations.push_back(
                        {r == 1 ? RatioKind::superpartient
                                : RatioKind::multiple_superpartient,
                         r, k, ExactInt(n), false});
                }
            }
        }
    }
    return result;
}

bool relation_holds(const ExactInt& p, const ExactInt& m, const RatioClass& claimed) {
    if (p < 1 || m < 1) {
        throw std::invalid_argument("relation_holds: p and m must be positive");
    }
    const ExactInt& r = claimed.whole;
    const ExactInt& k = claimed.part_num;
    const ExactInt& n = claimed.part_den;
    switch (claimed.kind) {
        case RatioKind::equal:
            return p == m;
        case RatioKind::multiple:
            if (r < 2) throw std::invalid_argument("relation_holds: multiple needs r >= 2");
            return p == r * m;
        case RatioKind::superparticular:
            if (n < 2) {
                throw std::invalid_argument("relation_holds: superparticular needs n >= 2");
            }
            return p * n == m * (n + 1);
        case RatioKind::superpartient:
            if (n < 3 || k < 2 || k > n - 1) {
                throw std::invalid_argument(
                    "relation_holds: superpartient needs n >= 3 and 2 <= k <= n-1");
            }
            return p * n == m * (n + k);
        case RatioKind::multiple_superparticular:
            if (r < 2 || n < 2) {
                throw std::invalid_argument(
                    "relation_holds: multiple_superparticular needs r >= 2, n >= 2");
            }
            return p * n == m * (r * n + 1);
        case RatioKind::multiple_superpartient:
            if (r < 2 || n < 3 || k < 2 || k > n - 1) {
                throw std::invalid_argument(
                    "relation_holds: multiple_superpartient needs r >= 2, n >= 3, "
                    "2 <= k <= n-1");
            }
            return p * n == m * (r * n + k);
        case RatioKind::other:
            // The only 'other' emitted by classification is the sub-ratio
            // case, whose claim is simply p < m.
            if (!claimed.sub_ratio) {
                throw std::invalid_argument("relation_holds: 'other' without sub_ratio "
                                            "has no defining equation");
            }
            return p < m;
    }
    throw std::invalid_argument("relation_holds: unknown kind");
}

}  // namespace rithmo
