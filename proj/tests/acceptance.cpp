// Acceptance suite: one check per shipped criterion, every tolerance pinned
// in code. Prints one PASS/FAIL line per criterion and exits nonzero if any
// fail. All identity checks are exact (zero residual); the only tolerances
// are the stated decimal bounds.

#include "rithmo/board.hpp"
#include "rithmo/boethius.hpp"
#include "rithmo/fibcore.hpp"
#include "rithmo/fiboquad.hpp"
#include "rithmo/identities.hpp"
#include "rithmo/report_io.hpp"

#include "oracles.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace rithmo;

namespace {

struct Check {
    std::string name;
    std::function<bool(std::string&)> run;
};

bool expect(bool condition, std::string& detail, const std::string& message) {
    if (!condition && detail.empty()) {
        detail = message;
    }
    return condition;
}

// 1. The nonnegative reference row F(0..14).
bool criterion_fib_row(std::string& detail) {
    const std::vector<long> expected = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144, 233, 377};
    bool ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        ok &= expect(fib(static_cast<std::int64_t>(i)) == expected[i], detail,
                     "mismatch at F(" + std::to_string(i) + ")");
    }
    return ok;
}

// 2. The extended row F(-6..6).
bool criterion_fib_extended(std::string& detail) {
    const std::vector<long> expected = {-8, 5, -3, 2, -1, 1, 0, 1, 1, 2, 3, 5, 8};
    bool ok = true;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        std::int64_t k = static_cast<std::int64_t>(i) - 6;
        ok &= expect(fib(k) == expected[i], detail,
                     "mismatch at F(" + std::to_string(k) + ")");
    }
    return ok;
}

// 3. All 48 army values.
bool criterion_armies(std::string& detail) {
    const std::vector<std::vector<long>> white = {
        {2, 4, 6, 8},      {4, 16, 36, 64},    {6, 20, 42, 72},
        {9, 25, 49, 81},   {15, 45, 91, 153},  {25, 81, 169, 289}};
    const std::vector<std::vector<long>> black = {
        {3, 5, 7, 9},      {9, 25, 49, 81},    {12, 30, 56, 90},
        {16, 36, 64, 100}, {28, 66, 120, 190}, {49, 121, 225, 361}};
    bool ok = true;
    BoardTable w = generate_army(ArmyColor::white);
    BoardTable b = generate_army(ArmyColor::black);
    for (std::size_t r = 0; r < 6; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            ok &= expect(w.rows[r][c] == white[r][c], detail,
                         "white row " + std::to_string(r + 1));
            ok &= expect(b.rows[r][c] == black[r][c], detail,
                         "black row " + std::to_string(r + 1));
        }
    }
    return ok;
}

// 4. The full 15 x 8 extension block against the transcribed golden file.
bool criterion_extended_block(std::string& detail) {
    std::ifstream golden(std::string(RITHMO_TEST_DATA_DIR) + "/extended_table_15x8.csv");
    if (!golden) {
        detail = "golden file missing";
        return false;
    }
    std::stringstream buffer;
    buffer << golden.rdbuf();
    ExtendedTable table = generate_extended(14, {2, 3, 4, 5, 6, 7, 8, 9});
    bool ok = expect(to_csv(table) == buffer.str(), detail,
                     "serialized table differs from the golden block");
    ok &= expect(a_closed(13, 2) == 714, detail, "a(13,2)");
    ok &= expect(a_closed(14, 9) == 15625, detail, "a(14,9)");
    ok &= expect(a_closed(11, 7) == 2318, detail, "a(11,7)");
    return ok;
}

// 5. Fixed constants by three computation paths.
bool criterion_fixed_constants(std::string& detail) {
    const std::vector<long> expected = {1, 5, 11, 19, 29, 41, 55, 71};
    bool ok = true;
    for (std::int64_t n = 2; n <= 9; ++n) {
        ExactInt closed = ExactInt(n) * n - n - 1;
        ExactInt recurred(-1);
        for (std::int64_t i = 1; i <= n; ++i) recurred += 2 * (i - 1);
        ExactInt from_char = -characteristic(GeneralizedFibSeed(1, n));
        ExactInt reference = expected[static_cast<std::size_t>(n - 2)];
        ok &= expect(fixed_constant(n) == reference, detail,
                     "fixed_constant(" + std::to_string(n) + ")");
        ok &= expect(closed == reference && recurred == reference && from_char == reference,
                     detail, "path disagreement at n = " + std::to_string(n));
    }
    return ok;
}

// 6. Recursive and closed fiboquadratic constructions over 909 cases.
bool criterion_oracle_equivalence(std::string& detail) {
    std::uint64_t cases = 0;
    bool ok = true;
    for (std::int64_t n = 1; n <= 9; ++n) {
        for (std::int64_t m = 0; m <= 100; ++m) {
            ++cases;
            ok &= expect(a_recursive(m, n) == a_closed(m, n), detail,
                         "mismatch at m=" + std::to_string(m) + ", n=" + std::to_string(n));
        }
    }
    ok &= expect(cases == 909, detail, "expected 909 cases");
    return ok;
}

// 7. Identity sweeps with zero violations.
bool criterion_identity_sweeps(std::string& detail) {
    struct Expected {
        const char* identity;
        SweepOptions options;
        std::uint64_t cases;
    };
    SweepOptions defaults;
    std::vector<Expected> sweeps = {
        {"cassini", defaults, 401},
        {"catalan", defaults, 201 * 26},
        {"vajda", defaults, 201 * 26},
        {"tagiuri_odd", defaults, 100 * 41 * 11},
        {"tagiuri_even", defaults, 100 * 41 * 11},
        {"column_conjecture", defaults, 101},
        {"sum_of_squares", defaults, 100 * 200},
    };
    bool ok = true;
    for (const auto& s : sweeps) {
        SweepReport report = sweep(s.identity, s.options);
        ok &= expect(report.cases == s.cases, detail,
                     std::string(s.identity) + ": unexpected case count " +
                         std::to_string(report.cases));
        ok &= expect(report.clean(), detail,
                     std::string(s.identity) + ": " +
                         std::to_string(report.violations.size()) + " violations");
    }
    return ok;
}

// 8. Row-sum law with the alternating fixed constant, plus the worked sums.
bool criterion_row_sum(std::string& detail) {
    bool ok = true;
    for (std::int64_t n = 2; n <= 9; ++n) {
        GeneralizedFibSeed seed(1, n);
        ExactInt cn = fixed_constant(n);
        ExactInt prev_corr;
        for (std::int64_t j = 1; j <= 99; ++j) {
            VerificationRecord r = row_sum_law(seed, j);
            ok &= expect(r.holds, detail,
                         "violation at n=" + std::to_string(n) + ", j=" + std::to_string(j));
            if (j % 2 == 1) {
                ExactInt corr = r.rhs - general_term(seed, j + 2);
                ok &= expect(abs(corr) == cn, detail,
                             "wrong constant at n=" + std::to_string(n));
                if (j > 1) {
                    ok &= expect(corr == -prev_corr, detail,
                                 "sign does not alternate at n=" + std::to_string(n));
                }
                prev_corr = corr;
            }
        }
    }
    // The five worked sums: 1+2=4-1, 4+6=9+1, 9+15=25-1, 1+3=9-5, 9+12=16+5.
    struct Worked {
        std::int64_t n, j;
        long lhs;
    };
    for (const Worked& w : std::vector<Worked>{{2, 1, 3}, {2, 3, 10}, {2, 5, 24},
                                               {3, 1, 4}, {3, 3, 21}}) {
        VerificationRecord r = row_sum_law(GeneralizedFibSeed(1, w.n), w.j);
        ok &= expect(r.holds && r.lhs == w.lhs && r.rhs == w.lhs, detail,
                     "worked sum failed at n=" + std::to_string(w.n) +
                         ", j=" + std::to_string(w.j));
    }
    return ok;
}

// 9. Golden-ratio convergence at 1e-12, forward to alpha and backward to beta.
bool criterion_convergence(std::string& detail) {
    const int precision = 50;
    GoldenConstants c = golden_constants(precision);
    Decimal bound = Decimal::power_of_ten(-12, precision);
    bool ok = true;
    for (std::int64_t n = 2; n <= 9; ++n) {
        FiboquadSequence seq = FiboquadSequence::generator(n);
        ConvergenceReport fwd =
            convergence_report(seq, 100, precision, Direction::forward);
        ok &= expect(fwd.threshold_index.has_value() && *fwd.threshold_index <= 90,
                     detail, "forward threshold above 90 for n=" + std::to_string(n));
        for (const auto& e : fwd.entries) {
            if (e.index < 90) continue;
            Decimal err = (Decimal(e.ratio, precision) - c.alpha).abs();
            ok &= expect(err < bound, detail,
                         "forward error at m=" + std::to_string(e.index) +
                             ", n=" + std::to_string(n));
        }
        ConvergenceReport bwd =
            convergence_report(seq, 100, precision, Direction::backward);
        bool saw_tail = false;
        for (const auto& e : bwd.entries) {
            if (e.index > -90) continue;
            saw_tail = true;
            Decimal err = (Decimal(e.ratio, precision) - c.beta).abs();
            ok &= expect(err < bound, detail,
                         "backward error at m=" + std::to_string(e.index) +
                             ", n=" + std::to_string(n));
        }
        ok &= expect(saw_tail, detail, "backward scan missed indices <= -90");
        ok &= expect(bwd.threshold_index.has_value() && *bwd.threshold_index >= -90,
                     detail, "backward threshold beyond -90 for n=" + std::to_string(n));
    }
    return ok;
}

// 10. The excellentissima quartet, settled by the brute-force oracle. The
// oracle (and the finder) also surface harmonic (6,8,12), whose reciprocals
// 1/6, 1/8, 1/12 are in arithmetic progression.
bool criterion_quartet(std::string& detail) {
    std::vector<ExactInt> quartet{4, 6, 8, 12};
    using testing::KindTuple;
    const std::vector<KindTuple> expected = {
        {ProgressionKind::arithmetic, {4, 6, 8}},
        {ProgressionKind::arithmetic, {4, 8, 12}},
        {ProgressionKind::harmonic, {4, 6, 12}},
        {ProgressionKind::harmonic, {6, 8, 12}},
        {ProgressionKind::geometric_proportion, {4, 6, 8, 12}},
    };
    std::vector<KindTuple> found = testing::as_kind_tuples(find_progressions(quartet));
    bool ok = expect(found == expected, detail, "finder output differs from expectation");
    ok &= expect(testing::brute_force_progressions(quartet) == expected, detail,
                 "oracle output differs from expectation");
    for (const auto& p : found) {
        ok &= expect(p.first != ProgressionKind::geometric, detail,
                     "a 3-term geometric progression appeared");
    }
    auto contains = [&found](const KindTuple& t) {
        return std::find(found.begin(), found.end(), t) != found.end();
    };
    ok &= expect(contains({ProgressionKind::arithmetic, {4, 6, 8}}), detail, "missing (4,6,8)");
    ok &= expect(contains({ProgressionKind::arithmetic, {4, 8, 12}}), detail,
                 "missing (4,8,12)");
    ok &= expect(contains({ProgressionKind::harmonic, {4, 6, 12}}), detail,
                 "missing (4,6,12)");
    ok &= expect(contains({ProgressionKind::geometric_proportion, {4, 6, 8, 12}}), detail,
                 "missing the proportion");
    return ok;
}

// 11. Boethian conformance and the classification round trip on [1,500]^2.
bool criterion_boethius(std::string& detail) {
    bool ok = true;
    ok &= expect(verify_boethian_structure(generate_army(ArmyColor::white)).conforms(),
                 detail, "white army fails the structure check");
    ok &= expect(verify_boethian_structure(generate_army(ArmyColor::black)).conforms(),
                 detail, "black army fails the structure check");
    ok &= expect(
        verify_boethian_structure(generate_extended(14, {2, 3, 4, 5, 6, 7, 8, 9}))
            .conforms(),
        detail, "extension fails the structure check");
    for (long p = 1; p <= 500 && ok; ++p) {
        for (long m = 1; m <= 500; ++m) {
            ClassificationResult r = classify(p, m);
            if (!relation_holds(p, m, r.canonical)) {
                ok = expect(false, detail,
                            "round trip failed at p=" + std::to_string(p) +
                                ", m=" + std::to_string(m));
                break;
            }
        }
    }
    return ok;
}

// 12. Binet evaluation at 60 digits across |k| <= 200, residual below 1e-20.
bool criterion_binet(std::string& detail) {
    const int precision = 60;
    Decimal bound = Decimal::power_of_ten(-20, precision);
    bool ok = true;
    for (std::int64_t k = -200; k <= 200; ++k) {
        BinetReport r = binet_check(k, precision);
        ok &= expect(r.matches, detail, "mismatch at k=" + std::to_string(k));
        ok &= expect(r.residual < bound, detail,
                     "residual too large at k=" + std::to_string(k));
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Check> checks = {
        {"1. extended Fibonacci values 0..14", criterion_fib_row},
        {"2. extended Fibonacci values -6..6", criterion_fib_extended},
        {"3. all 48 army piece values", criterion_armies},
        {"4. 15x8 extension block vs golden file", criterion_extended_block},
        {"5. fixed constants by three paths", criterion_fixed_constants},
        {"6. recursive/closed equivalence, 909 cases", criterion_oracle_equivalence},
        {"7. identity sweeps, zero violations", criterion_identity_sweeps},
        {"8. row-sum law with alternating constants", criterion_row_sum},
        {"9. quotient convergence to alpha/beta at 1e-12", criterion_convergence},
        {"10. progressions of the (4,6,8,12) quartet", criterion_quartet},
        {"11. Boethian conformance and classification round trip", criterion_boethius},
        {"12. Binet check at 60 digits, |k| <= 200", criterion_binet},
    };
    int failures = 0;
    for (auto& check : checks) {
        std::string detail;
        bool passed = false;
        try {
            passed = check.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (passed) {
            std::cout << "PASS  " << check.name << "\n";
        } else {
            ++failures;
            std::cout << "FAIL  " << check.name
                      << (detail.empty() ? "" : "  [" + detail + "]") << "\n";
        }
    }
    if (failures == 0) {
        std::cout << "all " << checks.size() << " acceptance criteria hold\n";
    } else {
        std::cout << failures << " criteria failed\n";
    }
    return failures == 0 ? 0 : 1;
}
