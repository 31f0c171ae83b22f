#include "rithmo/identities.hpp"

#include "rithmo/fiboquad.hpp"

#include <random>
#include <stdexcept>

namespace rithmo {

namespace {

VerificationRecord make_record(std::string identity,
                               std::vector<std::pair<std::string, std::string>> params,
                               ExactInt lhs, ExactInt rhs, std::string note = {}) {
    VerificationRecord r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = std::move(lhs);
    r.rhs = std::move(rhs);
    r.residual = r.lhs - r.rhs;
    r.holds = (r.residual == 0);
    r.note = std::move(note);
    return r;
}

std::string seed_str(const GeneralizedFibSeed& s) {
    return "(" + s.a.get_str() + "," + s.b.get_str() + ")";
}

}  // namespace

VerificationRecord cassini(std::int64_t m) {
    ExactInt lhs = fib(m - 1) * fib(m + 1) - fib(m) * fib(m);
    return make_record("cassini", {{"m", std::to_string(m)}}, lhs, neg_one_pow(m));
}

VerificationRecord catalan(std::int64_t m, std::int64_t k) {
    ExactInt lhs = fib(m + k) * fib(m - k) - fib(m) * fib(m);
    ExactInt rhs = neg_one_pow(m + k + 1) * fib(k) * fib(k);
    return make_record("catalan", {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
                       lhs, rhs);
}

VerificationRecord vajda(std::int64_t m, std::int64_t k) {
    ExactInt lhs = fib(m + k + 1) * fib(m - k) - fib(m) * fib(m + 1);
    ExactInt rhs = neg_one_pow(m + k + 1) * fib(k) * fib(k + 1);
    return make_record("vajda", {{"m", std::to_string(m)}, {"k", std::to_string(k)}},
                       lhs, rhs);
}

VerificationRecord tagiuri_odd(const GeneralizedFibSeed& seed, std::int64_t m,
                               std::int64_t k) {
    ExactInt gm = gfib(seed, m);
    ExactInt lhs = gfib(seed, m + k) * gfib(seed, m - k) - gm * gm;
    ExactInt rhs = neg_one_pow(m + k + 1) * characteristic(seed) * fib(k) * fib(k);
    return make_record("tagiuri_odd",
                       {{"seed", seed_str(seed)},
                        {"m", std::to_string(m)},
                        {"k", std::to_string(k)}},
                       lhs, rhs);
}

VerificationRecord tagiuri_even(const GeneralizedFibSeed& seed, std::int64_t m,
                                std::int64_t k) {
    ExactInt lhs = gfib(seed, m + k + 1) * gfib(seed, m - k) -
                   gfib(seed, m) * gfib(seed, m + 1);
    ExactInt rhs = neg_one_pow(m + k + 1) * characteristic(seed) * fib(k) * fib(k + 1);
    return make_record("tagiuri_even",
                       {{"seed", seed_str(seed)},
                        {"m", std::to_string(m)},
                        {"k", std::to_string(k)}},
                       lhs, rhs);
}

VerificationRecord column_conjecture(std::int64_t m) {
    ExactInt p = 2 * fib(m) + fib(m - 1);
    ExactInt q = 2 * fib(m + 1) + fib(m);
    ExactInt lhs = p * p + p * q;
    ExactInt rhs = q * q - neg_one_pow(m);
    ExactInt red_lhs = fib(m + 2) * fib(m + 4);
    ExactInt red_rhs = fib(m + 3) * fib(m + 3) - neg_one_pow(m);
    std::string note = "reduced form F(m+2)F(m+4) = F(m+3)^2 - (-1)^m: " +
                       red_lhs.get_str() + " = " + red_rhs.get_str() +
                       (red_lhs == red_rhs ? " (holds)" : " (VIOLATED)");
    return make_record("column_conjecture", {{"m", std::to_string(m)}}, lhs, rhs,
                       std::move(note));
}

ExactInt fixed_constant(std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("fixed_constant: n must be >= 1");
    }
    ExactInt nn(n);
    ExactInt closed = nn * nn - nn - 1;
    ExactInt recurred(-1);  // c(0)
    for (std::int64_t i = 1; i <= n; ++i) {
        recurred += 2 * (i - 1);
    }
    if (closed != recurred) {
        throw std::logic_error("fixed_constant: closed form and recurrence disagree");
    }
    if (closed != -characteristic(GeneralizedFibSeed(1, nn))) {
        throw std::logic_error("fixed_constant: disagrees with -characteristic(1, n)");
    }
    return closed;
}

VerificationRecord row_sum_law(const GeneralizedFibSeed& seed, std::int64_t j) {
    if (j < 1) {
        throw std::invalid_argument("row_sum_law: index must be >= 1");
    }
    ExactInt lhs = general_term(seed, j) + general_term(seed, j + 1);
    ExactInt rhs = general_term(seed, j + 2);
    std::string note;
    if (j % 2 == 1) {
        std::int64_t m = (j + 1) / 2;
        rhs += neg_one_pow(m + 1) * characteristic(seed);
        note = "odd case uses the constructively established sign (-1)^(m+1) mu, "
               "m = (j+1)/2; the often-quoted exponent (j+1)/2 alone contradicts "
               "the worked sums and is treated as an erratum";
    }
    return make_record("row_sum_law",
                       {{"seed", seed_str(seed)}, {"j", std::to_string(j)}}, lhs, rhs,
                       std::move(note));
}

VerificationRecord sum_of_squares(const GeneralizedFibSeed& seed, std::int64_t m) {
    if (m < 1) {
        throw std::invalid_argument("sum_of_squares: index must be >= 1");
    }
    ExactInt lhs(0);
    ExactInt prev = seed.a;  // G(1)
    ExactInt cur = seed.b;   // G(2)
    lhs += prev * prev;
    for (std::int64_t i = 2; i <= m; ++i) {
        lhs += cur * cur;
        ExactInt next = cur + prev;
        prev = cur;
        cur = next;
    }
    // After the loop, prev = G(m) and cur = G(m+1).
    ExactInt rhs = seed.a * (seed.a - seed.b) + prev * cur;
    return make_record("sum_of_squares",
                       {{"seed", seed_str(seed)}, {"m", std::to_string(m)}}, lhs, rhs);
}

std::vector<GeneralizedFibSeed> random_seeds(int count, std::uint64_t rng_seed,
                                             std::int64_t magnitude) {
    if (count < 0 || magnitude < 1) {
        throw std::invalid_argument("random_seeds: bad count or magnitude");
    }
    std::mt19937_64 rng(rng_seed);
    // Raw modulo mapping instead of uniform_int_distribution: the engine is
    // fully specified by the standard, the distribution is not, and the
    // sweeps must reproduce identically everywhere.
    auto draw = [&]() {
        std::uint64_t span = 2 * static_cast<std::uint64_t>(magnitude) + 1;
        return static_cast<std::int64_t>(rng() % span) - magnitude;
    };
    std::vector<GeneralizedFibSeed> seeds;
    seeds.reserve(static_cast<std::size_t>(count));
    while (seeds.size() < static_cast<std::size_t>(count)) {
        std::int64_t a = draw();
        std::int64_t b = draw();
        if (a == 0 && b == 0) continue;
        seeds.emplace_back(ExactInt(a), ExactInt(b));
    }
    return seeds;
}

namespace {

std::string range_str(const IndexRange& r) {
    return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::string normalize(std::string name) {
    for (char& c : name) {
        if (c == '-') c = '_';
    }
    return name;
}

struct ResolvedSeeds {
    std::vector<GeneralizedFibSeed> seeds;
    std::string desc;
};

ResolvedSeeds resolve_seeds(const SweepOptions& o, const IndexRange& default_n) {
    if (!o.seeds.empty()) {
        std::string d = "seeds=";
        for (std::size_t i = 0; i < o.seeds.size(); ++i) {
            if (i) d += ";";
            d += "(" + o.seeds[i].a.get_str() + "," + o.seeds[i].b.get_str() + ")";
        }
        return {o.seeds, d};
    }
    if (o.random_seed_count > 0) {
        return {random_seeds(o.random_seed_count, o.rng_seed, o.seed_magnitude),
                "seeds=" + std::to_string(o.random_seed_count) + " random (rng_seed=" +
                    std::to_string(o.rng_seed) +
                    ", magnitude=" + std::to_string(o.seed_magnitude) + ")"};
    }
    IndexRange n = o.n_range.value_or(default_n);
    std::vector<GeneralizedFibSeed> seeds;
    for (std::int64_t g = n.lo; g <= n.hi; ++g) {
        seeds.emplace_back(ExactInt(1), ExactInt(g));
    }
    return {seeds, "seeds=(1,n) for n=" + range_str(n)};
}

}  // namespace

SweepReport sweep(const std::string& identity, const SweepOptions& options) {
    const std::string name = normalize(identity);
    SweepReport report;
    report.identity = name;

    auto record = [&report](VerificationRecord rec) {
        ++report.cases;
        if (!rec.holds) {
            report.violations.push_back(std::move(rec));
        }
    };

    if (name == "cassini" || name == "column_conjecture") {
        IndexRange m = options.m_range.value_or(
            name == "cassini" ? IndexRange{-200, 200} : IndexRange{-50, 50});
        report.grid = "m=" + range_str(m);
        for (std::int64_t i = m.lo; i <= m.hi; ++i) {
            record(name == "cassini" ? cassini(i) : column_conjecture(i));
        }
        return report;
    }

    if (name == "catalan" || name == "vajda") {
        IndexRange m = options.m_range.value_or(IndexRange{-100, 100});
        IndexRange k = options.k_range.value_or(IndexRange{0, 25});
        report.grid = "m=" + range_str(m) + ", k=" + range_str(k);
        for (std::int64_t i = m.lo; i <= m.hi; ++i) {
            for (std::int64_t t = k.lo; t <= k.hi; ++t) {
                record(name == "catalan" ? catalan(i, t) : vajda(i, t));
            }
        }
        return report;
    }

    if (name == "tagiuri_odd" || name == "tagiuri_even") {
        SweepOptions o = options;
        if (o.seeds.empty() && o.random_seed_count == 0) o.random_seed_count = 100;
        auto [seeds, seed_desc] = resolve_seeds(o, IndexRange{1, 9});
        IndexRange m = options.m_range.value_or(IndexRange{-20, 20});
        IndexRange k = options.k_range.value_or(IndexRange{0, 10});
        report.grid = "m=" + range_str(m) + ", k=" + range_str(k) + ", " + seed_desc;
        for (const auto& s : seeds) {
            for (std::int64_t i = m.lo; i <= m.hi; ++i) {
                for (std::int64_t t = k.lo; t <= k.hi; ++t) {
                    record(name == "tagiuri_odd" ? tagiuri_odd(s, i, t)
                                                 : tagiuri_even(s, i, t));
                }
            }
        }
        return report;
    }

    if (name == "row_sum_law" || name == "row_sum") {
        report.identity = "row_sum_law";
        auto [seeds, seed_desc] = resolve_seeds(options, IndexRange{2, 9});
        IndexRange j = options.j_range.value_or(IndexRange{1, 99});
        report.grid = "j=" + range_str(j) + ", " + seed_desc;
        for (const auto& s : seeds) {
            for (std::int64_t i = j.lo; i <= j.hi; ++i) {
                record(row_sum_law(s, i));
            }
        }
        return report;
    }

    if (name == "sum_of_squares") {
        SweepOptions o = options;
        if (o.seeds.empty() && o.random_seed_count == 0) o.random_seed_count = 100;
        auto [seeds, seed_desc] = resolve_seeds(o, IndexRange{1, 9});
        IndexRange m = options.m_range.value_or(IndexRange{1, 200});
        report.grid = "m=" + range_str(m) + ", " + seed_desc;
        for (const auto& s : seeds) {
            for (std::int64_t i = m.lo; i <= m.hi; ++i) {
                record(sum_of_squares(s, i));
            }
        }
        return report;
    }

    throw std::invalid_argument("sweep: unknown identity '" + identity + "'");
}

}  // namespace rithmo
