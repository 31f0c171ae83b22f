#pragma once

// Rithmomachia number content: the two armies, the row scheme behind them,
// the infinite columnwise extension, and detection of the exact
// arithmetic/geometric/harmonic progressions behind the game's major
// victories. Board geometry and gameplay are out of scope; only the numbers
// are modeled.

#include "rithmo/boethius.hpp"
#include "rithmo/exact.hpp"
#include "rithmo/fiboquad.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace rithmo {

enum class ArmyColor { white, black };

std::string to_string(ArmyColor color);

/// Row labels of the 6x4 army tables, in order.
inline constexpr std::array<const char*, 6> kArmyRowLabels = {"p", "q", "r",
                                                              "s", "t", "u"};

/// One army: rows p..u (values a(1..6, n)) over four generator columns,
/// white on 2,4,6,8 and black on 3,5,7,9.
struct BoardTable {
    ArmyColor color;
    std::vector<std::int64_t> generators;
    std::vector<std::vector<ExactInt>> rows;  // rows[i][j]: row i+1, generator j
};

/// Coefficient pair (c1, c0) of an affine factor c1*n + c0; both Fibonacci
/// numbers in the row scheme.
struct AffineFactor {
    ExactInt n_coeff;
    ExactInt unit_coeff;
    bool operator==(const AffineFactor&) const = default;
};

struct RowLabel {
    AffineFactor first;
    AffineFactor second;  // equal to first for even rows (perfect squares)
    std::string text;     // e.g. "(8n+5)(13n+8)" or "(13n+8)^2"
};

/// The m x n columnwise extension: rows 0..m_max over the given generators.
struct ExtendedTable {
    std::int64_t m_max;  // highest row index; the table has m_max + 1 rows
    std::vector<std::int64_t> generators;
    std::vector<std::vector<ExactInt>> entries;  // entries[m][j] = a(m, generators[j])
    std::vector<RowLabel> labels;                // one per row
};

BoardTable generate_army(ArmyColor color);

/// Rows 0..m_max (so m_max = 14 reproduces the classic 15-row block).
/// Requires m_max >= 0 and every generator >= 1.
ExtendedTable generate_extended(std::int64_t m_max,
                                const std::vector<std::int64_t>& generators);

/// Affine-factor coefficient pairs of row m (m >= 0), with rendered text.
RowLabel row_label(std::int64_t m);

enum class ProgressionKind { arithmetic, geometric, harmonic, geometric_proportion };

std::string to_string(ProgressionKind kind);

/// One detected progression. Terms are ascending; the witness instantiates
/// the defining equation:
///   arithmetic            b - a = c - b
///   geometric             b^2 = a c
///   harmonic              b (a + c) = 2 a c
///   geometric_proportion  a d = b c  (the 4-term proportion a:b :: c:d)
struct Progression {
    ProgressionKind kind;
    std::vector<ExactInt> terms;
    std::string witness;
};

enum class TupleArity { three, four, both };

inline constexpr std::array<ProgressionKind, 4> kAllProgressionKinds = {
    ProgressionKind::arithmetic, ProgressionKind::geometric,
    ProgressionKind::harmonic, ProgressionKind::geometric_proportion};

/// Exhaustively enumerates ascending tuples from `values` satisfying each
/// requested relation. Input is de-duplicated; output is grouped by kind in
/// declaration order with tuples in lexicographic order. Values must be
/// positive (the harmonic relation is undefined at zero) and nonempty.
std::vector<Progression> find_progressions(
    const std::vector<ExactInt>& values,
    const std::vector<ProgressionKind>& kinds = {kAllProgressionKinds.begin(),
                                                 kAllProgressionKinds.end()},
    TupleArity arity = TupleArity::both);

/// All piece values of one or both armies, in table order (duplicates kept).
std::vector<ExactInt> table_values(const BoardTable& table);
std::vector<ExactInt> combined_army_values();

/// The full progression table over a value set: the stand-in for the tables
/// medieval players carried. Sorted, de-duplicated input and output.
std::vector<Progression> victory_table(
    const std::vector<ExactInt>& values,
    const std::vector<ProgressionKind>& kinds = {kAllProgressionKinds.begin(),
                                                 kAllProgressionKinds.end()},
    TupleArity arity = TupleArity::both);

/// One adjacent-row relation check within a column.
struct BoethianCheck {
    std::int64_t row_from;  // relation between rows row_from and row_from + 1
    std::int64_t generator;
    ExactRational expected_ratio;  // the b-coefficient of the construction
    RatioClass expected_class;
    RatioClass actual_class;
    bool ratio_ok = false;
    bool class_ok = false;
};

struct BoethianReport {
    std::uint64_t checks = 0;
    std::vector<BoethianCheck> mismatches;
    bool conforms() const { return mismatches.empty(); }
};

/// Verifies that each adjacent row pair realizes the construction scheme:
/// the exact ratio equals the b-coefficient, and its canonical class runs
/// multiple, superparticular x2, superpartient x2, then superpartient with
/// the Fibonacci-indexed parameters, column by column.
BoethianReport verify_boethian_structure(const BoardTable& table);
BoethianReport verify_boethian_structure(const ExtendedTable& table);

}  // namespace rithmo
