#include "cli.hpp"

#include "rithmo/board.hpp"
#include "rithmo/boethius.hpp"
#include "rithmo/fibcore.hpp"
#include "rithmo/fiboquad.hpp"
#include "rithmo/identities.hpp"
#include "rithmo/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

namespace rithmo::cli {

namespace {

std::int64_t parse_int(const std::string& text) {
    std::size_t consumed = 0;
    std::int64_t value = 0;
    try {
        value = std::stoll(text, &consumed);
    } catch (const std::exception&) {
        throw std::invalid_argument("'" + text + "' is not an integer index");
    }
    if (consumed != text.size()) {
        throw std::invalid_argument("'" + text + "' is not an integer index");
    }
    return value;
}

IndexRange parse_range(const std::string& text) {
    std::size_t pos = text.find("..", 1);  // start at 1 so a leading '-' survives
    if (pos == std::string::npos) {
        throw std::invalid_argument("malformed range '" + text + "', expected A..B");
    }
    std::int64_t lo = parse_int(text.substr(0, pos));
    std::int64_t hi = parse_int(text.substr(pos + 2));
    if (lo > hi) {
        throw std::invalid_argument("empty range '" + text + "'");
    }
    return {lo, hi};
}

ExactInt parse_exact(const std::string& text) {
    try {
        return ExactInt(text);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("'" + text + "' is not an integer");
    }
}

GeneralizedFibSeed parse_seed(const std::string& text) {
    std::size_t comma = text.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("malformed seed '" + text + "', expected a,b");
    }
    return {parse_exact(text.substr(0, comma)), parse_exact(text.substr(comma + 1))};
}

std::vector<ExactInt> parse_values(const std::string& text) {
    std::vector<ExactInt> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) values.push_back(parse_exact(item));
    }
    return values;
}

ProgressionKind parse_kind(std::string name) {
    for (char& c : name) {
        if (c == '-') c = '_';
    }
    if (name == "arithmetic") return ProgressionKind::arithmetic;
    if (name == "geometric") return ProgressionKind::geometric;
    if (name == "harmonic") return ProgressionKind::harmonic;
    if (name == "geometric_proportion") return ProgressionKind::geometric_proportion;
    throw std::invalid_argument("unknown progression kind '" + name + "'");
}

std::vector<std::int64_t> parse_generators(const std::string& text) {
    std::vector<std::int64_t> gens;
    if (text.find("..") != std::string::npos) {
        IndexRange r = parse_range(text);
        for (std::int64_t n = r.lo; n <= r.hi; ++n) gens.push_back(n);
        return gens;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) gens.push_back(parse_int(item));
    }
    return gens;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_table_pretty(std::ostream& out, const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        widths[c] = header[c].size();
    }
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    auto print_row = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            // Left-align the first (label) column, right-align numbers.
            if (c == 0) {
                out << std::left << std::setw(static_cast<int>(widths[c])) << row[c]
                    << std::right;
            } else {
                out << std::setw(static_cast<int>(widths[c])) << row[c];
            }
        }
        out << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

int cmd_fib(std::ostream& out, const std::string& format, const IndexRange& range) {
    if (format == "json") {
        Json seq = Json::array();
        for (std::int64_t k = range.lo; k <= range.hi; ++k) {
            seq.push_back(Json{{"k", k}, {"value", fib(k).get_str()}});
        }
        emit_json(out, Json{{"sequence", seq}});
    } else if (format == "csv") {
        out << "k,F_k\n";
        for (std::int64_t k = range.lo; k <= range.hi; ++k) {
            out << k << "," << fib(k).get_str() << "\n";
        }
    } else {
        for (std::int64_t k = range.lo; k <= range.hi; ++k) {
            out << "F(" << k << ") = " << fib(k).get_str() << "\n";
        }
    }
    return 0;
}

void print_army_pretty(std::ostream& out, const BoardTable& table) {
    out << to_string(table.color) << " army\n";
    std::vector<std::string> header{"row"};
    for (std::int64_t n : table.generators) header.push_back("n=" + std::to_string(n));
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        std::vector<std::string> row{kArmyRowLabels[i]};
        for (const auto& v : table.rows[i]) row.push_back(v.get_str());
        rows.push_back(std::move(row));
    }
    print_table_pretty(out, header, rows);
}

int cmd_table_armies(std::ostream& out, std::ostream& err, const std::string& format,
                     bool check) {
    BoardTable white = generate_army(ArmyColor::white);
    BoardTable black = generate_army(ArmyColor::black);
    int rc = 0;
    BoethianReport wr, br;
    if (check) {
        wr = verify_boethian_structure(white);
        br = verify_boethian_structure(black);
        rc = (wr.conforms() && br.conforms()) ? 0 : 1;
    }
    if (format == "json") {
        Json j{{"white", to_json(white)}, {"black", to_json(black)}};
        if (check) {
            j["boethian"] = Json{{"checks", wr.checks + br.checks},
                                 {"mismatches", wr.mismatches.size() + br.mismatches.size()},
                                 {"conforms", rc == 0}};
        }
        emit_json(out, j);
    } else if (format == "csv") {
        out << "row";
        for (std::int64_t n : white.generators) out << "," << n;
        for (std::int64_t n : black.generators) out << "," << n;
        out << "\n";
        for (std::size_t i = 0; i < white.rows.size(); ++i) {
            out << kArmyRowLabels[i];
            for (const auto& v : white.rows[i]) out << "," << v.get_str();
            for (const auto& v : black.rows[i]) out << "," << v.get_str();
            out << "\n";
        }
        if (check) {
            err << "boethian check: " << (rc == 0 ? "conforms" : "MISMATCH") << "\n";
        }
    } else {
        print_army_pretty(out, white);
        out << "\n";
        print_army_pretty(out, black);
        if (check) {
            out << "\nboethian structure: " << (wr.checks + br.checks) << " checks, "
                << (wr.mismatches.size() + br.mismatches.size()) << " mismatches\n";
        }
    }
    return rc;
}

int cmd_table_extended(std::ostream& out, std::ostream& err, const std::string& format,
                       std::int64_t row_count, const std::vector<std::int64_t>& generators,
                       bool check) {
    if (row_count < 1) {
        throw std::invalid_argument("extended table needs at least one row");
    }
    ExtendedTable table = generate_extended(row_count - 1, generators);
    int rc = 0;
    BoethianReport report;
    if (check) {
        report = verify_boethian_structure(table);
        rc = report.conforms() ? 0 : 1;
    }
    if (format == "json") {
        Json j = to_json(table);
        if (check) {
            j["boethian"] = Json{{"checks", report.checks},
                                 {"mismatches", report.mismatches.size()},
                                 {"conforms", rc == 0}};
        }
        emit_json(out, j);
    } else if (format == "csv") {
        out << to_csv(table);
        if (check) {
            err << "boethian check: " << (rc == 0 ? "conforms" : "MISMATCH") << "\n";
        }
    } else {
        std::vector<std::string> header{"m", "label"};
        for (std::int64_t n : table.generators) header.push_back("n=" + std::to_string(n));
        std::vector<std::vector<std::string>> rows;
        for (std::size_t m = 0; m < table.entries.size(); ++m) {
            std::vector<std::string> row{std::to_string(m), table.labels[m].text};
            for (const auto& v : table.entries[m]) row.push_back(v.get_str());
            rows.push_back(std::move(row));
        }
        print_table_pretty(out, header, rows);
        if (check) {
            out << "\nboethian structure: " << report.checks << " checks, "
                << report.mismatches.size() << " mismatches\n";
        }
    }
    return rc;
}

int cmd_verify(std::ostream& out, const std::string& format, const std::string& identity,
               const SweepOptions& options) {
    SweepReport report = sweep(identity, options);
    if (format == "json") {
        emit_json(out, to_json(report));
    } else if (format == "csv") {
        out << to_csv(report);
    } else {
        out << "identity:   " << report.identity << "\n";
        out << "grid:       " << report.grid << "\n";
        out << "cases:      " << report.cases << "\n";
        out << "violations: " << report.violations.size() << "\n";
        if (report.identity == "row_sum_law") {
            // Surface the odd-case correction constants so the report reads
            // like the classical column tables.
            std::vector<GeneralizedFibSeed> seeds = options.seeds;
            if (seeds.empty()) {
                IndexRange n = options.n_range.value_or(IndexRange{2, 9});
                for (std::int64_t g = n.lo; g <= n.hi; ++g) seeds.emplace_back(1, g);
            }
            for (const auto& s : seeds) {
                ExactInt mu = characteristic(s);
                ExactInt c = -mu;
                out << "  seed (" << s.a.get_str() << "," << s.b.get_str()
                    << "): odd-j correction constant +/-" << ExactInt(abs(c)).get_str()
                    << " (sign alternates)\n";
            }
        }
        for (const auto& v : report.violations) {
            out << "  VIOLATION ";
            for (const auto& [key, value] : v.params) out << key << "=" << value << " ";
            out << "lhs=" << v.lhs.get_str() << " rhs=" << v.rhs.get_str() << "\n";
        }
    }
    return report.clean() ? 0 : 1;
}

int cmd_classify(std::ostream& out, const std::string& format, const ExactInt& p,
                 const ExactInt& m) {
    ClassificationResult result = classify(p, m);
    if (format == "json") {
        emit_json(out, to_json(result));
    } else if (format == "csv") {
        const RatioClass& c = result.canonical;
        out << "p,m,reduced,kind,r,k,n\n";
        out << result.p.get_str() << "," << result.m.get_str() << ","
            << to_string(result.reduced) << "," << to_string(c.kind) << ","
            << (c.whole != 0 ? c.whole.get_str() : "") << ","
            << (c.part_num != 0 ? c.part_num.get_str() : "") << ","
            << (c.part_den != 0 ? c.part_den.get_str() : "") << "\n";
    } else {
        out << result.p.get_str() << " : " << result.m.get_str() << " = "
            << to_string(result.reduced) << " -> " << to_string(result.canonical) << "\n";
        if (!result.all_representations.empty()) {
            out << "witnesses (n a proper divisor of m):\n";
            for (const auto& r : result.all_representations) {
                out << "  " << to_string(r) << "\n";
            }
        } else if (result.witnesses_enumerated) {
            out << "witnesses (n a proper divisor of m): none\n";
        } else {
            out << "witnesses: enumeration skipped (m too large)\n";
        }
    }
    return 0;
}

int cmd_progressions(std::ostream& out, const std::string& format,
                     const std::vector<ExactInt>& values,
                     const std::vector<ProgressionKind>& kinds, TupleArity arity) {
    std::vector<Progression> found = find_progressions(values, kinds, arity);
    if (format == "json") {
        emit_json(out, to_json(found));
    } else if (format == "csv") {
        out << to_csv(found);
    } else {
        for (const auto& p : found) {
            out << to_string(p.kind) << ": ";
            for (std::size_t i = 0; i < p.terms.size(); ++i) {
                if (i) out << ", ";
                out << p.terms[i].get_str();
            }
            out << "   [" << p.witness << "]\n";
        }
        out << found.size() << " progression(s)\n";
    }
    return 0;
}

int cmd_convergence(std::ostream& out, const std::string& format,
                    const FiboquadSequence& seq, std::int64_t m_max, int precision,
                    Direction direction) {
    ConvergenceReport report = convergence_report(seq, m_max, precision, direction);
    if (format == "json") {
        emit_json(out, to_json(report));
    } else if (format == "csv") {
        out << to_csv(report);
    } else {
        out << "sequence:  " << report.sequence << "\n";
        out << "direction: " << (direction == Direction::forward ? "forward" : "backward")
            << " (limit " << report.limit << ")\n";
        out << "precision: " << report.precision << " digits\n";
        if (report.threshold_index) {
            out << "|ratio - " << report.limit << "| < 1e-12 from index "
                << *report.threshold_index << " onward\n";
        } else {
            out << "|ratio - " << report.limit << "| < 1e-12 not reached in range\n";
        }
        std::vector<std::string> header{"index", "ratio",
                                        "abs_error_" + std::to_string(report.precision) + "d"};
        std::vector<std::vector<std::string>> rows;
        for (const auto& e : report.entries) {
            rows.push_back({std::to_string(e.index), to_string(e.ratio), e.abs_error});
        }
        print_table_pretty(out, header, rows);
    }
    return 0;
}

int cmd_oeis_check(std::ostream& out, const std::string& format, const std::string& path,
                   std::int64_t n, std::optional<std::int64_t> offset) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot read b-file '" + path + "'");
    }
    std::vector<BFileEntry> entries = parse_bfile(in);
    OeisMatch match = oeis_match(entries, n, offset);
    if (format == "json") {
        emit_json(out, Json{{"file", path},
                            {"file_terms", match.file_terms},
                            {"n", match.n},
                            {"offset", match.offset},
                            {"match_length", match.match_length}});
    } else if (format == "csv") {
        out << "file,file_terms,n,offset,match_length\n";
        out << csv_field(path) << "," << match.file_terms << "," << match.n << ","
            << match.offset << "," << match.match_length << "\n";
    } else {
        out << "file:         " << path << " (" << match.file_terms << " terms)\n";
        out << "generator:    n=" << match.n << "\n";
        out << "offset:       " << match.offset
            << (offset ? "" : " (best in -10..10)") << "\n";
        out << "match length: " << match.match_length << " of " << match.file_terms
            << "\n";
    }
    return 0;
}

}  // namespace

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> entries;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ls(line);
        std::int64_t index = 0;
        std::string value;
        if (!(ls >> index >> value)) {
            throw std::invalid_argument("malformed b-file line: '" + line + "'");
        }
        entries.push_back({index, parse_exact(value)});
    }
    return entries;
}

OeisMatch oeis_match(const std::vector<BFileEntry>& entries, std::int64_t n,
                     std::optional<std::int64_t> offset) {
    auto prefix_length = [&](std::int64_t off) {
        std::size_t len = 0;
        for (const auto& e : entries) {
            if (e.value != a_closed(off + static_cast<std::int64_t>(len), n)) break;
            ++len;
        }
        return len;
    };
    OeisMatch match;
    match.n = n;
    match.file_terms = entries.size();
    if (offset) {
        match.offset = *offset;
        match.match_length = prefix_length(*offset);
        return match;
    }
    // Scan ascending; a tie keeps the smallest offset that achieves the
    // maximum, and a file with no match at all reports offset 0.
    match.offset = 0;
    for (std::int64_t off = -10; off <= 10; ++off) {
        std::size_t len = prefix_length(off);
        if (len > match.match_length) {
            match.match_length = len;
            match.offset = off;
        }
    }
    return match;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact rithmomachia number tables, Fibonacci/Cassini identity "
                 "verification, Boethian ratio classification, and progression "
                 "detection."};
    app.set_config("--config");
    app.require_subcommand(0, 1);

    std::string format = "pretty";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json", "csv"}))
        ->capture_default_str();
    int precision = kDefaultPrecision;
    app.add_option("--precision", precision,
                   "significant decimal digits for decimal columns")
        ->check(CLI::Range(10, 10000))
        ->capture_default_str();

    auto* fib_cmd = app.add_subcommand("fib", "extended Fibonacci numbers over a range");
    fib_cmd->fallthrough();
    std::string fib_range;
    fib_cmd->add_option("--range", fib_range, "index range A..B (e.g. -6..6)")
        ->required();

    auto* table_cmd = app.add_subcommand("table", "army tables or the extension");
    table_cmd->fallthrough();
    std::string table_kind;
    table_cmd->add_option("kind", table_kind, "armies | extended")
        ->required()
        ->check(CLI::IsMember({"armies", "extended"}));
    std::int64_t table_rows = 15;
    table_cmd->add_option("--rows", table_rows, "row count for the extended table")
        ->capture_default_str();
    std::string table_generators = "2..9";
    table_cmd->add_option("--generators", table_generators, "A..B or comma list")
        ->capture_default_str();
    bool check_boethius = false;
    table_cmd->add_flag("--check-boethius", check_boethius,
                        "verify the Boethian row structure (exit 1 on mismatch)");

    auto* verify_cmd = app.add_subcommand("verify", "run an identity sweep");
    verify_cmd->fallthrough();
    std::string identity;
    verify_cmd->add_option("identity", identity,
                           "cassini | catalan | vajda | tagiuri-odd | tagiuri-even | "
                           "column-conjecture | row-sum | sum-of-squares")
        ->required();
    std::string verify_m, verify_k, verify_j, verify_n;
    verify_cmd->add_option("--m", verify_m, "m range A..B");
    verify_cmd->add_option("--k", verify_k, "k range A..B");
    verify_cmd->add_option("--j", verify_j, "j range A..B");
    verify_cmd->add_option("--n", verify_n, "generator range A..B for default (1,n) seeds");
    std::vector<std::string> verify_seeds;
    verify_cmd->add_option("--seed", verify_seeds, "explicit seed a,b (repeatable)");
    int random_seed_count = 0;
    verify_cmd->add_option("--random-seeds", random_seed_count,
                           "number of deterministic random seeds");
    std::uint64_t rng_seed = kDefaultSweepRngSeed;
    verify_cmd->add_option("--rng-seed", rng_seed, "RNG seed for random seeds")
        ->capture_default_str();
    std::int64_t seed_magnitude = 1'000'000;
    verify_cmd->add_option("--seed-magnitude", seed_magnitude,
                           "bound on |a|, |b| for random seeds")
        ->capture_default_str();

    auto* classify_cmd = app.add_subcommand("classify", "Boethian ratio class of p : m");
    classify_cmd->fallthrough();
    std::string classify_p, classify_m;
    classify_cmd->add_option("p", classify_p, "antecedent (positive integer)")->required();
    classify_cmd->add_option("m", classify_m, "consequent (positive integer)")->required();

    auto* prog_cmd = app.add_subcommand("progressions",
                                        "exact progressions within a value set");
    prog_cmd->fallthrough();
    std::string prog_values;
    prog_cmd->add_option("values", prog_values, "comma-separated positive integers");
    bool prog_armies = false;
    prog_cmd->add_flag("--armies", prog_armies, "use the 48 combined army values");
    std::vector<std::string> prog_kinds;
    prog_cmd->add_option("--kind", prog_kinds,
                         "arithmetic | geometric | harmonic | geometric-proportion "
                         "(repeatable; default all)");
    std::string prog_arity = "both";
    prog_cmd->add_option("--arity", prog_arity, "3 | 4 | both")
        ->check(CLI::IsMember({"3", "4", "both"}))
        ->capture_default_str();

    auto* conv_cmd = app.add_subcommand("convergence", "successive-quotient report");
    conv_cmd->fallthrough();
    std::int64_t conv_n = 0;
    auto* conv_n_opt = conv_cmd->add_option("--n", conv_n, "generator (>= 1)");
    std::string conv_seed;
    auto* conv_seed_opt = conv_cmd->add_option("--seed", conv_seed, "seed a,b");
    conv_n_opt->excludes(conv_seed_opt);
    std::int64_t conv_m_max = 100;
    conv_cmd->add_option("--m-max", conv_m_max, "last ratio index (>= 4)")
        ->capture_default_str();
    std::string conv_direction = "forward";
    conv_cmd->add_option("--direction", conv_direction, "forward | backward")
        ->check(CLI::IsMember({"forward", "backward"}))
        ->capture_default_str();

    auto* oeis_cmd = app.add_subcommand("oeis-check",
                                        "compare a local b-file snapshot against a "
                                        "generator sequence");
    oeis_cmd->fallthrough();
    std::string oeis_file;
    oeis_cmd->add_option("--file", oeis_file, "path to a b-file snapshot")->required();
    std::int64_t oeis_n = 1;
    oeis_cmd->add_option("--n", oeis_n, "generator")->required();
    std::int64_t oeis_offset = 0;
    auto* oeis_offset_opt = oeis_cmd->add_option(
        "--offset", oeis_offset, "file's first value is compared to a(offset, n)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(fib_cmd)) {
            return cmd_fib(out, format, parse_range(fib_range));
        }
        if (app.got_subcommand(table_cmd)) {
            if (table_kind == "armies") {
                return cmd_table_armies(out, err, format, check_boethius);
            }
            return cmd_table_extended(out, err, format, table_rows,
                                      parse_generators(table_generators), check_boethius);
        }
        if (app.got_subcommand(verify_cmd)) {
            SweepOptions options;
            if (!verify_m.empty()) options.m_range = parse_range(verify_m);
            if (!verify_k.empty()) options.k_range = parse_range(verify_k);
            if (!verify_j.empty()) options.j_range = parse_range(verify_j);
            if (!verify_n.empty()) options.n_range = parse_range(verify_n);
            for (const auto& s : verify_seeds) options.seeds.push_back(parse_seed(s));
            options.random_seed_count = random_seed_count;
            options.rng_seed = rng_seed;
            options.seed_magnitude = seed_magnitude;
            return cmd_verify(out, format, identity, options);
        }
        if (app.got_subcommand(classify_cmd)) {
            return cmd_classify(out, format, parse_exact(classify_p),
                                parse_exact(classify_m));
        }
        if (app.got_subcommand(prog_cmd)) {
            if (!prog_armies && prog_values.empty()) {
                throw std::invalid_argument("give a value list or --armies");
            }
            if (prog_armies && !prog_values.empty()) {
                throw std::invalid_argument("--armies excludes an explicit value list");
            }
            std::vector<ExactInt> values =
                prog_armies ? combined_army_values() : parse_values(prog_values);
            std::vector<ProgressionKind> kinds;
            if (prog_kinds.empty()) {
                kinds.assign(kAllProgressionKinds.begin(), kAllProgressionKinds.end());
            } else {
                for (const auto& k : prog_kinds) kinds.push_back(parse_kind(k));
            }
            TupleArity arity = prog_arity == "3"   ? TupleArity::three
                               : prog_arity == "4" ? TupleArity::four
                                                   : TupleArity::both;
            return cmd_progressions(out, format, values, kinds, arity);
        }
        if (app.got_subcommand(conv_cmd)) {
            if (conv_n_opt->count() == 0 && conv_seed_opt->count() == 0) {
                throw std::invalid_argument("convergence needs --n or --seed");
            }
            FiboquadSequence seq = conv_n_opt->count() > 0
                                       ? FiboquadSequence::generator(conv_n)
                                       : FiboquadSequence::general(parse_seed(conv_seed));
            Direction dir = conv_direction == "forward" ? Direction::forward
                                                        : Direction::backward;
            return cmd_convergence(out, format, seq, conv_m_max, precision, dir);
        }
        if (app.got_subcommand(oeis_cmd)) {
            std::optional<std::int64_t> offset;
            if (oeis_offset_opt->count() > 0) offset = oeis_offset;
            return cmd_oeis_check(out, format, oeis_file, oeis_n, offset);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    out << app.help();
    return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("rithmo");
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace rithmo::cli
