#include "rithmo/board.hpp"

#include <algorithm>
#include <stdexcept>

namespace rithmo {

std::string to_string(ArmyColor color) {
    return color == ArmyColor::white ? "white" : "black";
}

std::string to_string(ProgressionKind kind) {
    switch (kind) {
        case ProgressionKind::arithmetic: return "arithmetic";
        case ProgressionKind::geometric: return "geometric";
        case ProgressionKind::harmonic: return "harmonic";
        case ProgressionKind::geometric_proportion: return "geometric_proportion";
    }
    return "?";
}

BoardTable generate_army(ArmyColor color) {
    BoardTable table;
    table.color = color;
    table.generators = (color == ArmyColor::white) ? std::vector<std::int64_t>{2, 4, 6, 8}
                                                   : std::vector<std::int64_t>{3, 5, 7, 9};
    table.rows.resize(6);
    for (std::int64_t m = 1; m <= 6; ++m) {
        for (std::int64_t n : table.generators) {
            table.rows[static_cast<std::size_t>(m - 1)].push_back(a_closed(m, n));
        }
    }
    return table;
}

namespace {

std::string affine_text(const AffineFactor& f) {
    if (f.n_coeff == 0) return f.unit_coeff.get_str();
    std::string core;
    if (f.n_coeff == 1) {
        core = "n";
    } else {
        core = f.n_coeff.get_str() + "n";
    }
    if (f.unit_coeff == 0) return core;
    return "(" + core + "+" + f.unit_coeff.get_str() + ")";
}

}  // namespace

RowLabel row_label(std::int64_t m) {
    if (m < 0) {
        throw std::invalid_argument("row_label: row index must be >= 0");
    }
    RowLabel label;
    if (m % 2 == 0) {
        std::int64_t h = m / 2;
        label.first = {fib(h), fib(h - 1)};
        label.second = label.first;
        std::string t = affine_text(label.first);
        if (t == "1") {
            label.text = "1";
        } else if (t == "n") {
            label.text = "n^2";
        } else {
            label.text = t + "^2";
        }
    } else {
        std::int64_t h = (m - 1) / 2;
        label.first = {fib(h), fib(h - 1)};
        label.second = {fib(h + 1), fib(h)};
        std::string a = affine_text(label.first);
        std::string b = affine_text(label.second);
        if (a == "1") {
            label.text = b;  // row 1 is just "n"
        } else {
            label.text = a + b;
        }
    }
    return label;
}

ExtendedTable generate_extended(std::int64_t m_max,
                                const std::vector<std::int64_t>& generators) {
    if (m_max < 0) {
        throw std::invalid_argument("generate_extended: m_max must be >= 0");
    }
    if (generators.empty()) {
        throw std::invalid_argument("generate_extended: need at least one generator");
    }
    for (std::int64_t n : generators) {
        if (n < 1) {
            throw std::invalid_argument("generate_extended: generators must be >= 1");
        }
    }
    ExtendedTable table;
    table.m_max = m_max;
    table.generators = generators;
    for (std::int64_t m = 0; m <= m_max; ++m) {
        std::vector<ExactInt> row;
        row.reserve(generators.size());
        for (std::int64_t n : generators) {
            row.push_back(a_closed(m, n));
        }
        table.entries.push_back(std::move(row));
        table.labels.push_back(row_label(m));
    }
    return table;
}

namespace {

std::string term_product(const ExactInt& x, const ExactInt& y) {
    return x.get_str() + "*" + y.get_str();
}

bool is_arithmetic(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
    return b - a == c - b;
}

bool is_geometric(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
    return b * b == a * c;
}

bool is_harmonic(const ExactInt& a, const ExactInt& b, const ExactInt& c) {
    return b * (a + c) == 2 * a * c;
}

Progression make_triple(ProgressionKind kind, const ExactInt& a, const ExactInt& b,
                        const ExactInt& c) {
    Progression p;
    p.kind = kind;
    p.terms = {a, b, c};
    switch (kind) {
        case ProgressionKind::arithmetic:
            p.witness = b.get_str() + "-" + a.get_str() + " = " + c.get_str() + "-" +
                        b.get_str() + " = " + ExactInt(b - a).get_str();
            break;
        case ProgressionKind::geometric:
            p.witness = b.get_str() + "^2 = " + term_product(a, c) + " = " +
                        ExactInt(b * b).get_str();
            break;
        case ProgressionKind::harmonic:
            p.witness = b.get_str() + "*(" + a.get_str() + "+" + c.get_str() +
                        ") = 2*" + term_product(a, c) + " = " +
                        ExactInt(2 * a * c).get_str();
            break;
        default:
            break;
    }
    return p;
}

}  // namespace

std::vector<Progression> find_progressions(const std::vector<ExactInt>& values,
                                           const std::vector<ProgressionKind>& kinds,
                                           TupleArity arity) {
    if (values.empty()) {
        throw std::invalid_argument("find_progressions: value set is empty");
    }
    for (const ExactInt& v : values) {
        if (v <= 0) {
            throw std::invalid_argument("find_progressions: values must be positive");
        }
    }
    std::vector<ExactInt> vs = values;
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    auto wanted = [&kinds](ProgressionKind k) {
        return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
    };
    bool triples = arity != TupleArity::four;
    bool quads = arity != TupleArity::three;

    std::vector<Progression> out;
    const std::size_t sz = vs.size();
    for (ProgressionKind kind : kAllProgressionKinds) {
        if (!wanted(kind)) continue;
        if (kind == ProgressionKind::geometric_proportion) {
            if (!quads) continue;
            for (std::size_t i = 0; i < sz; ++i)
                for (std::size_t j = i + 1; j < sz; ++j)
                    for (std::size_t k = j + 1; k < sz; ++k)
                        for (std::size_t l = k + 1; l < sz; ++l) {
                            if (vs[i] * vs[l] == vs[j] * vs[k]) {
                                Progression p;
                                p.kind = kind;
                                p.terms = {vs[i], vs[j], vs[k], vs[l]};
                                p.witness = term_product(vs[i], vs[l]) + " = " +
                                            term_product(vs[j], vs[k]) + " = " +
                                            ExactInt(vs[i] * vs[l]).get_str();
                                out.push_back(std::move(p));
                            }
                        }
            continue;
        }
        if (!triples) continue;
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = i + 1; j < sz; ++j)
                for (std::size_t k = j + 1; k < sz; ++k) {
                    bool hit = false;
                    switch (kind) {
                        case ProgressionKind::arithmetic:
                            hit = is_arithmetic(vs[i], vs[j], vs[k]);
                            break;
                        case ProgressionKind::geometric:
                            hit = is_geometric(vs[i], vs[j], vs[k]);
                            break;
                        case ProgressionKind::harmonic:
                            hit = is_harmonic(vs[i], vs[j], vs[k]);
                            break;
                        default:
                            break;
                    }
                    if (hit) out.push_back(make_triple(kind, vs[i], vs[j], vs[k]));
                }
    }
    return out;
}

std::vector<ExactInt> table_values(const BoardTable& table) {
    std::vector<ExactInt> values;
    for (const auto& row : table.rows) {
        values.insert(values.end(), row.begin(), row.end());
    }
    return values;
}

std::vector<ExactInt> combined_army_values() {
    std::vector<ExactInt> values = table_values(generate_army(ArmyColor::white));
    std::vector<ExactInt> black = table_values(generate_army(ArmyColor::black));
    values.insert(values.end(), black.begin(), black.end());
    return values;
}

std::vector<Progression> victory_table(const std::vector<ExactInt>& values,
                                       const std::vector<ProgressionKind>& kinds,
                                       TupleArity arity) {
    return find_progressions(values, kinds, arity);
}

namespace {

// Expected canonical class of the multiplier from row m to row m + 1 in
// column n, spelled out from the construction scheme rather than read back
// off the table: with k = floor(m/2) and G the sequence seeded by (1, n),
// the multiplier is 1 + G(k)/G(k+1) with G(k), G(k+1) coprime. That gives
// multiple(n) for k = 0, superparticular(G(k+1)) while G(k) = 1, and
// superpartient(G(k), G(k+1)) beyond, the parameters Fibonacci-indexed.
RatioClass expected_multiplier_class(std::int64_t m, std::int64_t n) {
    GeneralizedFibSeed seed(1, n);
    std::int64_t k = m / 2;
    ExactInt num = gfib(seed, k);
    ExactInt den = gfib(seed, k + 1);
    if (den == 1) {
        ExactInt whole = num + 1;  // k = 0: the multiplier is the integer n
        if (whole == 1) return {RatioKind::equal, 0, 0, 0, false};
        return {RatioKind::multiple, whole, 0, 0, false};
    }
    if (num == 1) return {RatioKind::superparticular, 1, 1, den, false};
    return {RatioKind::superpartient, 1, num, den, false};
}

void check_pair(BoethianReport& report, std::int64_t row_from, std::int64_t n,
                const ExactInt& value_from, const ExactInt& value_to) {
    BoethianCheck check;
    check.row_from = row_from;
    check.generator = n;
    check.expected_ratio = b_coeff(row_from / 2, n);
    check.ratio_ok = (make_rational(value_to, value_from) == check.expected_ratio);
    check.expected_class = expected_multiplier_class(row_from, n);
    check.actual_class = classify(value_to, value_from).canonical;
    check.class_ok = (check.actual_class == check.expected_class);
    ++report.checks;
    if (!check.ratio_ok || !check.class_ok) {
        report.mismatches.push_back(std::move(check));
    }
}

}  // namespace

BoethianReport verify_boethian_structure(const BoardTable& table) {
    BoethianReport report;
    for (std::size_t col = 0; col < table.generators.size(); ++col) {
        for (std::size_t row = 0; row + 1 < table.rows.size(); ++row) {
            // Army rows are a(1..6, n), so row index i holds a(i + 1, n).
            check_pair(report, static_cast<std::int64_t>(row) + 1,
                       table.generators[col], table.rows[row][col],
                       table.rows[row + 1][col]);
        }
    }
    return report;
}

BoethianReport verify_boethian_structure(const ExtendedTable& table) {
    BoethianReport report;
    for (std::size_t col = 0; col < table.generators.size(); ++col) {
        for (std::int64_t m = 0; m < table.m_max; ++m) {
            check_pair(report, m, table.generators[col],
                       table.entries[static_cast<std::size_t>(m)][col],
                       table.entries[static_cast<std::size_t>(m) + 1][col]);
        }
    }
    return report;
}

}  // namespace rithmo
