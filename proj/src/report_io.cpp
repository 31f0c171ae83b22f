#include "rithmo/report_io.hpp"

#include <sstream>

namespace rithmo {

namespace {

std::string params_compact(const VerificationRecord& r) {
    std::string out;
    for (std::size_t i = 0; i < r.params.size(); ++i) {
        if (i) out += ";";
        out += r.params[i].first + "=" + r.params[i].second;
    }
    return out;
}

}  // namespace

std::string csv_field(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) {
        return value;
    }
    std::string quoted = "\"";
    for (char c : value) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

Json to_json(const VerificationRecord& record) {
    Json params = Json::object();
    for (const auto& [key, value] : record.params) {
        params[key] = value;
    }
    Json j{{"identity", record.identity},
           {"params", params},
           {"lhs", record.lhs.get_str()},
           {"rhs", record.rhs.get_str()},
           {"residual", record.residual.get_str()},
           {"holds", record.holds}};
    if (!record.note.empty()) {
        j["note"] = record.note;
    }
    return j;
}

Json to_json(const SweepReport& report) {
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        violations.push_back(to_json(v));
    }
    return Json{{"identity", report.identity},
                {"grid", report.grid},
                {"cases", report.cases},
                {"violations", violations}};
}

std::string to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "identity,grid,cases,violation_params,lhs,rhs,residual\n";
    if (report.violations.empty()) {
        out << report.identity << "," << csv_field(report.grid) << "," << report.cases
            << ",,,,\n";
        return out.str();
    }
    for (const auto& v : report.violations) {
        out << report.identity << "," << csv_field(report.grid) << "," << report.cases
            << "," << csv_field(params_compact(v)) << "," << v.lhs.get_str() << ","
            << v.rhs.get_str() << "," << v.residual.get_str() << "\n";
    }
    return out.str();
}

Json to_json(const RatioClass& rc) {
    Json j{{"kind", to_string(rc.kind)}};
    switch (rc.kind) {
        case RatioKind::multiple:
            j["r"] = rc.whole.get_str();
            break;
        case RatioKind::superparticular:
            j["n"] = rc.part_den.get_str();
            break;
        case RatioKind::superpartient:
            j["k"] = rc.part_num.get_str();
            j["n"] = rc.part_den.get_str();
            break;
        case RatioKind::multiple_superparticular:
            j["r"] = rc.whole.get_str();
            j["n"] = rc.part_den.get_str();
            break;
        case RatioKind::multiple_superpartient:
            j["r"] = rc.whole.get_str();
            j["k"] = rc.part_num.get_str();
            j["n"] = rc.part_den.get_str();
            break;
        case RatioKind::other:
            j["sub_ratio"] = rc.sub_ratio;
            break;
        case RatioKind::equal:
            break;
    }
    return j;
}

Json to_json(const ClassificationResult& result) {
    Json reps = Json::array();
    for (const auto& r : result.all_representations) {
        reps.push_back(to_json(r));
    }
    return Json{{"p", result.p.get_str()},
                {"m", result.m.get_str()},
                {"reduced", to_string(result.reduced)},
                {"canonical", to_json(result.canonical)},
                {"representations", reps},
                {"witnesses_enumerated", result.witnesses_enumerated}};
}

Json to_json(const Progression& progression) {
    Json terms = Json::array();
    for (const auto& t : progression.terms) {
        terms.push_back(t.get_str());
    }
    return Json{{"kind", to_string(progression.kind)}, {"terms", terms}};
}

Json to_json(const std::vector<Progression>& progressions) {
    Json arr = Json::array();
    for (const auto& p : progressions) {
        arr.push_back(to_json(p));
    }
    return arr;
}

std::string to_csv(const std::vector<Progression>& progressions) {
    std::ostringstream out;
    out << "kind,t1,t2,t3,t4,witness\n";
    for (const auto& p : progressions) {
        out << to_string(p.kind);
        for (std::size_t i = 0; i < 4; ++i) {
            out << ",";
            if (i < p.terms.size()) out << p.terms[i].get_str();
        }
        out << "," << csv_field(p.witness) << "\n";
    }
    return out.str();
}

Json to_json(const ConvergenceReport& report) {
    Json entries = Json::array();
    for (const auto& e : report.entries) {
        entries.push_back(Json{{"index", e.index},
                               {"ratio", to_string(e.ratio)},
                               {"abs_error", e.abs_error}});
    }
    Json j{{"sequence", report.sequence},
           {"direction", report.direction == Direction::forward ? "forward" : "backward"},
           {"precision", report.precision},
           {"limit", report.limit}};
    if (report.threshold_index) {
        j["threshold_index"] = *report.threshold_index;
    } else {
        j["threshold_index"] = nullptr;
    }
    j["entries"] = entries;
    return j;
}

std::string to_csv(const ConvergenceReport& report) {
    std::ostringstream out;
    out << "index,ratio,abs_error_" << report.precision << "d\n";
    for (const auto& e : report.entries) {
        out << e.index << "," << to_string(e.ratio) << "," << e.abs_error << "\n";
    }
    return out.str();
}

Json to_json(const BoardTable& table) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        Json values = Json::array();
        for (const auto& v : table.rows[i]) {
            values.push_back(v.get_str());
        }
        rows.push_back(Json{{"label", kArmyRowLabels[i]}, {"values", values}});
    }
    Json j{{"color", to_string(table.color)},
           {"generators", table.generators},
           {"rows", rows}};
    return j;
}

std::string to_csv(const BoardTable& table) {
    std::ostringstream out;
    out << "row";
    for (std::int64_t n : table.generators) {
        out << "," << n;
    }
    out << "\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out << kArmyRowLabels[i];
        for (const auto& v : table.rows[i]) {
            out << "," << v.get_str();
        }
        out << "\n";
    }
    return out.str();
}

Json to_json(const ExtendedTable& table) {
    Json rows = Json::array();
    for (std::size_t m = 0; m < table.entries.size(); ++m) {
        Json values = Json::array();
        for (const auto& v : table.entries[m]) {
            values.push_back(v.get_str());
        }
        rows.push_back(Json{{"m", static_cast<std::int64_t>(m)},
                            {"label", table.labels[m].text},
                            {"values", values}});
    }
    return Json{{"m_max", table.m_max},
                {"generators", table.generators},
                {"rows", rows}};
}

std::string to_csv(const ExtendedTable& table) {
    std::ostringstream out;
    out << "m,label";
    for (std::int64_t n : table.generators) {
        out << "," << n;
    }
    out << "\n";
    for (std::size_t m = 0; m < table.entries.size(); ++m) {
        out << m << "," << csv_field(table.labels[m].text);
        for (const auto& v : table.entries[m]) {
            out << "," << v.get_str();
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace rithmo
