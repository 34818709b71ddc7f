#pragma once

#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "padic/classes.hpp"
#include "padic/fields.hpp"
#include "padic/krasner.hpp"

namespace padic {

// One (f, e) cell of a generated table. Counts travel as decimal strings in
// every serialized form; they outgrow 64-bit integers almost immediately.
struct TableRow {
    Int p;
    std::int64_t f1 = 1, e1 = 1, f = 1, e = 1;
    Int mass;
    bool supported = true;
    Int iso_classes;      // valid only when supported
    std::string method;   // empty when not supported
    std::string status;   // "ok" or the refusal reason
};

inline std::vector<TableRow> generate_table(const BaseField& F, std::int64_t f_max,
                                            std::int64_t e_max, bool skip_unsupported) {
    if (f_max < 1 || e_max < 1) throw InvalidArgumentError("table: ranges must be >= 1");
    std::vector<TableRow> rows;
    for (std::int64_t f = 1; f <= f_max; ++f)
        for (std::int64_t e = 1; e <= e_max; ++e) {
            TableRow row;
            row.p = F.p;
            row.f1 = F.f1;
            row.e1 = F.e1;
            row.f = f;
            row.e = e;
            row.mass = mass_count(F, f, e).count;
            try {
                const CountReport r = count_classes(F, f, e);
                row.iso_classes = r.count;
                row.method = r.method;
                row.status = "ok";
            } catch (const UnsupportedCase&) {
                if (!skip_unsupported) throw;
                row.supported = false;
                row.status = "unsupported";
            } catch (const AssumptionsViolated&) {
                if (!skip_unsupported) throw;
                row.supported = false;
                row.status = "assumptions-violated";
            } catch (const CyclotomicDataRequired&) {
                if (!skip_unsupported) throw;
                row.supported = false;
                row.status = "cyclotomic-data-required";
            }
            rows.push_back(std::move(row));
        }
    return rows;
}

inline std::string table_to_csv(const std::vector<TableRow>& rows, bool with_status) {
    std::ostringstream out;
    out << "p,f1,e1,f,e,mass,iso_classes,method";
    if (with_status) out << ",status";
    out << "\n";
    for (const TableRow& r : rows) {
        out << r.p.str() << ',' << r.f1 << ',' << r.e1 << ',' << r.f << ',' << r.e << ','
            << r.mass.str() << ',' << (r.supported ? r.iso_classes.str() : "") << ',' << r.method;
        if (with_status) out << ',' << r.status;
        out << "\n";
    }
    return out.str();
}

inline nlohmann::json table_to_json(const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const TableRow& r : rows) {
        nlohmann::json obj{{"p", r.p.str()},      {"f1", r.f1},
                           {"e1", r.e1},          {"f", r.f},
                           {"e", r.e},            {"mass", r.mass.str()},
                           {"method", r.method},  {"status", r.status}};
        if (r.supported) obj["iso_classes"] = r.iso_classes.str();
        arr.push_back(std::move(obj));
    }
    return arr;
}

// Reference-file row for reconciliation: p,f1,e1,f,e,iso_classes, where
// iso_classes is a decimal integer or the literal token "unsupported".
struct ReferenceRow {
    Int p;
    std::int64_t f1 = 1, e1 = 1, f = 1, e = 1;
    bool expect_unsupported = false;
    Int iso_classes;
    std::int64_t line = 0;
};

struct ReferenceParseError : Error {
    std::int64_t line;
    ReferenceParseError(std::int64_t line_no, const std::string& what)
        : Error("parse error at line " + std::to_string(line_no) + ": " + what), line(line_no) {}
};

namespace io_detail {

inline std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

inline Int parse_decimal(const std::string& s, std::int64_t line) {
    if (s.empty()) throw ReferenceParseError(line, "empty field");
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ReferenceParseError(line, "not a decimal integer: '" + s + "'");
    return Int(s);
}

}  // namespace io_detail

inline std::vector<ReferenceRow> parse_reference_csv(std::istream& in) {
    std::vector<ReferenceRow> rows;
    std::string line;
    std::int64_t line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string stripped = io_detail::trim(line);
        if (stripped.empty()) continue;
        if (!header_seen) {
            if (stripped != "p,f1,e1,f,e,iso_classes")
                throw ReferenceParseError(line_no, "expected header p,f1,e1,f,e,iso_classes");
            header_seen = true;
            continue;
        }
        const auto fields = io_detail::split_csv_line(stripped);
        if (fields.size() != 6)
            throw ReferenceParseError(line_no, "expected 6 fields, got " +
                                                   std::to_string(fields.size()));
        ReferenceRow row;
        row.line = line_no;
        row.p = io_detail::parse_decimal(fields[0], line_no);
        row.f1 = to_int64(io_detail::parse_decimal(fields[1], line_no));
        row.e1 = to_int64(io_detail::parse_decimal(fields[2], line_no));
        row.f = to_int64(io_detail::parse_decimal(fields[3], line_no));
        row.e = to_int64(io_detail::parse_decimal(fields[4], line_no));
        if (fields[5] == "unsupported") {
            row.expect_unsupported = true;
        } else {
            row.iso_classes = io_detail::parse_decimal(fields[5], line_no);
            if (row.iso_classes < 1) throw ReferenceParseError(line_no, "iso_classes must be >= 1");
        }
        rows.push_back(std::move(row));
    }
    if (!header_seen) throw ReferenceParseError(line_no == 0 ? 1 : line_no, "missing header");
    return rows;
}

// Per-row reconciliation outcome.
struct RowOutcome {
    ReferenceRow row;
    bool computed_valid = false;
    Int computed;
    bool matched = false;
    std::string note;
};

struct CompareResult {
    std::vector<RowOutcome> rows;
    bool all_match = true;
};

inline CompareResult compare_reference(const std::vector<ReferenceRow>& rows) {
    CompareResult result;
    for (const ReferenceRow& row : rows) {
        RowOutcome out;
        out.row = row;
        try {
            const BaseField F = make_base_field(row.p, row.f1, row.e1);
            const CountReport r = count_classes(F, row.f, row.e);
            out.computed_valid = true;
            out.computed = r.count;
            if (row.expect_unsupported) {
                out.matched = false;
                out.note = "reference says unsupported but computed " + r.count.str();
            } else {
                out.matched = r.count == row.iso_classes;
                if (!out.matched)
                    out.note = "computed " + r.count.str() + " != reference " +
                               row.iso_classes.str();
            }
        } catch (const Error& err) {
            out.matched = row.expect_unsupported;
            out.note = err.what();
        }
        result.all_match = result.all_match && out.matched;
        result.rows.push_back(std::move(out));
    }
    return result;
}

}  // namespace padic
